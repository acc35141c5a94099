#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtkc/oracle.hpp"
#include "dtkc/report.hpp"
#include "dtkc/solver.hpp"

namespace {

struct SolveOpts {
    std::string input;
    std::string format = "dimacs";
    int k = 1;
    double time = 600.0;
    std::uint64_t seed = 0;
    std::string weights = "unit";
    int mstep = 100;
    int bms = 64;
    std::string start_bias = "uniform";
    std::size_t tabu_bits = dtkc::TabuList::kDefaultLength;
    bool no_reduction = false;
    bool no_tabu = false;
    bool no_ga = false;
    bool no_post = false;
    std::string deterministic; // "LS_COUNT:GA_GENS"
    std::string out;
};

void add_config_flags(CLI::App* cmd, SolveOpts& o) {
    cmd->add_option("--time", o.time, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_option("--weights", o.weights, "Weight scheme")
        ->check(CLI::IsMember({"unit", "mod200"}));
    cmd->add_option("--mstep", o.mstep, "Unimproved steps before an individual is final")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--bms", o.bms, "Extension candidates sampled per pick")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--start-bias", o.start_bias, "Start vertex sampling bias")
        ->check(CLI::IsMember({"uniform", "weight"}));
    cmd->add_option("--tabu-bits", o.tabu_bits, "Tabu bit-vector length")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-reduction", o.no_reduction, "Skip the degree-0/1 reduction");
    cmd->add_flag("--no-tabu", o.no_tabu, "Disable the tabu filter");
    cmd->add_flag("--no-ga", o.no_ga, "Replace the crossover stage with more construction");
    cmd->add_flag("--no-post", o.no_post, "Skip the final rebuild/absorb pass");
    cmd->add_option("--deterministic", o.deterministic,
                    "LS_COUNT:GA_GENS fixed work counts instead of wall-clock stopping");
}

dtkc::Graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const std::string name = std::filesystem::path(path).stem().string();
    return format == "dimacs" ? dtkc::parse_dimacs(in, name) : dtkc::parse_edge_list(in, name);
}

dtkc::SolveConfig make_config(const SolveOpts& o) {
    dtkc::SolveConfig cfg;
    cfg.k = o.k;
    cfg.params.m_step = o.mstep;
    cfg.params.bms_samples = o.bms;
    cfg.params.start_bias =
        o.start_bias == "weight" ? dtkc::StartBias::WeightProportional : dtkc::StartBias::Uniform;
    cfg.weights = o.weights == "mod200" ? dtkc::WeightScheme::Mod200 : dtkc::WeightScheme::Unit;
    cfg.seed = o.seed;
    cfg.tabu_length = o.tabu_bits;
    cfg.reduction_enabled = !o.no_reduction;
    cfg.tabu_enabled = !o.no_tabu;
    cfg.ga_enabled = !o.no_ga;
    cfg.post_enabled = !o.no_post;
    return cfg;
}

dtkc::Budget make_budget(const SolveOpts& o) {
    if (o.deterministic.empty()) return dtkc::Budget::wall_clock(o.time);
    const auto colon = o.deterministic.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("--deterministic expects LS_COUNT:GA_GENS");
    std::uint64_t ls = 0, ga = 0;
    try {
        ls = std::stoull(o.deterministic.substr(0, colon));
        ga = std::stoull(o.deterministic.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::runtime_error("--deterministic expects LS_COUNT:GA_GENS");
    }
    return dtkc::Budget::deterministic(ls, ga);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int run_solve(const SolveOpts& o) {
    const dtkc::Graph g = load_graph(o.input, o.format);
    const dtkc::SolveResult result = dtkc::solve(g, make_config(o), make_budget(o));
    const std::string json = dtkc::result_to_json(result);
    if (o.out.empty())
        std::cout << json;
    else
        write_text(o.out, json);
    if (!result.valid) {
        std::cerr << "error: result failed verification\n";
        return 2;
    }
    return 0;
}

int run_oracle(const SolveOpts& o) {
    dtkc::Graph g = load_graph(o.input, o.format);
    g = dtkc::assign_weights(g, o.weights == "mod200" ? dtkc::WeightScheme::Mod200
                                                      : dtkc::WeightScheme::Unit);
    const dtkc::ExactResult exact = dtkc::exact_solve(g, o.k);
    nlohmann::ordered_json j;
    j["instance"] = g.name();
    j["k"] = o.k;
    j["weights"] = o.weights;
    j["optimalW"] = exact.best_w;
    auto cliques = nlohmann::ordered_json::array();
    for (const dtkc::Clique& c : exact.witness.cliques()) cliques.push_back(c.vertices());
    j["cliques"] = cliques;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_bench(const SolveOpts& o, const std::string& spec_path, int runs) {
    std::ifstream in(spec_path);
    if (!in) throw std::runtime_error("cannot open " + spec_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto entries = dtkc::parse_bench_spec(buf.str());

    SolveOpts base = o;
    const dtkc::BenchReport report =
        dtkc::run_benchmark(entries, make_config(base), make_budget(base), runs);
    for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";

    std::filesystem::create_directories(o.out);
    const auto dir = std::filesystem::path(o.out);
    auto results = nlohmann::ordered_json::array();
    for (const std::string& doc : report.results_json)
        results.push_back(nlohmann::ordered_json::parse(doc));
    write_text((dir / "results.json").string(), results.dump(2) + "\n");
    write_text((dir / "runs.csv").string(), dtkc::runs_to_csv(report));
    write_text((dir / "summary.csv").string(), dtkc::summaries_to_csv(report));
    std::cout << "wrote " << report.runs.size() << " runs over " << report.summaries.size()
              << " instances to " << o.out << "\n";
    for (const dtkc::RunRecord& r : report.runs)
        if (!r.valid) {
            std::cerr << "error: a run failed verification\n";
            return 2;
        }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diversified top-k weighted clique search"};
    app.require_subcommand(1);
    SolveOpts opts;

    CLI::App* solve_cmd = app.add_subcommand("solve", "Run the full pipeline on one instance");
    solve_cmd->add_option("--input", opts.input, "Instance file")->required();
    solve_cmd->add_option("--format", opts.format, "Instance format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    solve_cmd->add_option("--k", opts.k, "Clique budget")->required()->check(CLI::PositiveNumber);
    add_config_flags(solve_cmd, opts);
    solve_cmd->add_option("--out", opts.out, "Result JSON path (stdout when omitted)");

    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->require_subcommand(1);
    int gen_n = 0, gen_m = 1;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App* er_cmd = gen_cmd->add_subcommand("er", "Uniform random graph G(n, p)");
    er_cmd->add_option("--n", gen_n, "Vertices")->required()->check(CLI::PositiveNumber);
    er_cmd->add_option("--p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    er_cmd->add_option("--seed", gen_seed, "Random seed");
    er_cmd->add_option("--out", gen_out, "Output path (stdout when omitted)");
    CLI::App* ba_cmd = gen_cmd->add_subcommand("ba", "Preferential-attachment graph");
    ba_cmd->add_option("--n", gen_n, "Vertices")->required()->check(CLI::PositiveNumber);
    ba_cmd->add_option("--m", gen_m, "Attachment degree")->required()->check(CLI::PositiveNumber);
    ba_cmd->add_option("--seed", gen_seed, "Random seed");
    ba_cmd->add_option("--out", gen_out, "Output path (stdout when omitted)");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "Exact optimum for a tiny instance");
    oracle_cmd->add_option("--input", opts.input, "Instance file")->required();
    oracle_cmd->add_option("--format", opts.format, "Instance format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    oracle_cmd->add_option("--k", opts.k, "Clique budget")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--weights", opts.weights, "Weight scheme")
        ->check(CLI::IsMember({"unit", "mod200"}));

    CLI::App* bench_cmd = app.add_subcommand("bench", "Run an instance list with repeated seeds");
    std::string bench_spec;
    int bench_runs = 10;
    bench_cmd->add_option("--spec", bench_spec, "Instance list JSON")->required();
    bench_cmd->add_option("--runs", bench_runs, "Seeds per instance")->check(CLI::PositiveNumber);
    add_config_flags(bench_cmd, opts);
    bench_cmd->add_option("--out", opts.out, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(opts);
        if (er_cmd->parsed() || ba_cmd->parsed()) {
            const dtkc::Graph g = er_cmd->parsed()
                                      ? dtkc::gen_er(gen_n, gen_p, gen_seed)
                                      : dtkc::gen_ba(gen_n, gen_m, gen_seed);
            if (gen_out.empty())
                std::cout << dtkc::write_dimacs(g);
            else
                write_text(gen_out, dtkc::write_dimacs(g));
            return 0;
        }
        if (oracle_cmd->parsed()) return run_oracle(opts);
        if (bench_cmd->parsed()) return run_bench(opts, bench_spec, bench_runs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
