#include "dtkc/report.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace dtkc {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* scheme_name(WeightScheme s) { return s == WeightScheme::Unit ? "unit" : "mod200"; }
const char* bias_name(StartBias b) { return b == StartBias::Uniform ? "uniform" : "weight"; }

ordered_json config_to_json(const SolveConfig& cfg, const Budget& b) {
    ordered_json j;
    j["weights"] = scheme_name(cfg.weights);
    j["mstep"] = cfg.params.m_step;
    j["bms"] = cfg.params.bms_samples;
    j["startBias"] = bias_name(cfg.params.start_bias);
    j["tabuBits"] = cfg.tabu_length;
    j["reduction"] = cfg.reduction_enabled;
    j["tabu"] = cfg.tabu_enabled;
    j["ga"] = cfg.ga_enabled;
    j["post"] = cfg.post_enabled;
    if (b.mode == BudgetMode::Deterministic) {
        j["mode"] = "deterministic";
        j["lsIndividuals"] = b.ls_individuals;
        j["gaGenerations"] = b.ga_generations;
    } else {
        j["mode"] = "wallclock";
        j["tMax"] = b.t_max;
    }
    return j;
}

} // namespace

std::string result_to_json(const SolveResult& r, int indent) {
    ordered_json j;
    j["instance"] = r.instance;
    j["k"] = r.config.k;
    j["seed"] = r.config.seed;
    j["config"] = config_to_json(r.config, r.budget);
    j["bestW"] = r.best_w;
    j["coveredCount"] = r.covered_count;
    j["cliques"] = r.cliques;
    j["timings"]["ls"] = r.ls_seconds;
    j["timings"]["ga"] = r.ga_seconds;
    j["timings"]["post"] = r.post_seconds;
    j["populationSize"] = r.population_size;
    j["generations"] = r.generations;
    j["tabu"]["inserted"] = r.tabu_inserted;
    j["tabu"]["blocked"] = r.tabu_blocked;
    j["valid"] = r.valid;
    return j.dump(indent) + "\n";
}

std::vector<BenchEntry> parse_bench_spec(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("instances") || !j["instances"].is_array())
        throw std::runtime_error("bench spec must be an object with an \"instances\" array");
    std::vector<BenchEntry> out;
    for (const auto& e : j["instances"]) {
        BenchEntry entry;
        entry.path = e.at("path").get<std::string>();
        entry.format = e.value("format", std::string("dimacs"));
        entry.k = e.value("k", 1);
        if (entry.format != "dimacs" && entry.format != "edgelist")
            throw std::runtime_error("unknown instance format: " + entry.format);
        if (entry.k < 1) throw std::runtime_error("instance k must be at least 1");
        out.push_back(std::move(entry));
    }
    return out;
}

BenchReport run_benchmark(const std::vector<BenchEntry>& entries, const SolveConfig& base,
                          const Budget& budget, int runs) {
    BenchReport report;
    for (const BenchEntry& entry : entries) {
        Graph g;
        try {
            std::ifstream in(entry.path);
            if (!in) throw std::runtime_error("cannot open " + entry.path);
            g = entry.format == "dimacs" ? parse_dimacs(in, entry.path)
                                         : parse_edge_list(in, entry.path);
        } catch (const std::exception& e) {
            report.warnings.push_back("skipping " + entry.path + ": " + e.what());
            continue;
        }
        InstanceSummary summary;
        summary.instance = g.name();
        summary.k = entry.k;
        double total = 0.0;
        for (int run = 0; run < runs; ++run) {
            SolveConfig cfg = base;
            cfg.k = entry.k;
            cfg.seed = base.seed + static_cast<std::uint64_t>(run);
            const SolveResult res = solve(g, cfg, budget);
            report.runs.push_back({summary.instance, entry.k, cfg.seed, res.best_w, res.valid});
            report.results_json.push_back(result_to_json(res));
            summary.best_w = std::max(summary.best_w, res.best_w);
            total += static_cast<double>(res.best_w);
            ++summary.runs;
        }
        if (summary.runs > 0) summary.avg_w = total / summary.runs;
        report.summaries.push_back(std::move(summary));
    }
    return report;
}

std::string runs_to_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "instance,k,seed,bestW\n";
    for (const RunRecord& r : report.runs)
        out << r.instance << ',' << r.k << ',' << r.seed << ',' << r.best_w << '\n';
    return out.str();
}

std::string summaries_to_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "instance,k,runs,bestW,avgW\n";
    for (const InstanceSummary& s : report.summaries)
        out << s.instance << ',' << s.k << ',' << s.runs << ',' << s.best_w << ',' << s.avg_w
            << '\n';
    return out.str();
}

namespace {

std::map<std::pair<std::string, int>, const InstanceSummary*> index_summaries(
    const BenchReport& r) {
    std::map<std::pair<std::string, int>, const InstanceSummary*> out;
    for (const InstanceSummary& s : r.summaries) out[{s.instance, s.k}] = &s;
    return out;
}

} // namespace

Comparison compare_reports(const BenchReport& self, const BenchReport& other) {
    Comparison c;
    const auto theirs = index_summaries(other);
    for (const InstanceSummary& mine : self.summaries) {
        const auto it = theirs.find({mine.instance, mine.k});
        if (it == theirs.end()) continue;
        const InstanceSummary& s = *it->second;
        if (mine.best_w > s.best_w) ++c.n_plus_best;
        if (mine.best_w < s.best_w) ++c.n_minus_best;
        if (mine.avg_w > s.avg_w) ++c.n_plus_avg;
        if (mine.avg_w < s.avg_w) ++c.n_minus_avg;
    }
    return c;
}

std::string scatter_csv(const BenchReport& self, const BenchReport& other) {
    std::ostringstream out;
    out << "instance,k,bestW,otherBestW,relative\n";
    const auto theirs = index_summaries(other);
    for (const InstanceSummary& mine : self.summaries) {
        const auto it = theirs.find({mine.instance, mine.k});
        if (it == theirs.end()) continue;
        const InstanceSummary& s = *it->second;
        const double rel = mine.best_w == 0
                               ? 0.0
                               : static_cast<double>(s.best_w) / static_cast<double>(mine.best_w);
        out << mine.instance << ',' << mine.k << ',' << mine.best_w << ',' << s.best_w << ','
            << rel << '\n';
    }
    return out.str();
}

} // namespace dtkc
