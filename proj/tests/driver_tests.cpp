#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dtkc/oracle.hpp"
#include "dtkc/report.hpp"
#include "dtkc/rng.hpp"
#include "dtkc/solver.hpp"

using namespace dtkc;

namespace {

Graph random_weighted_graph(Rng& rng, Vertex n, double p) {
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    std::vector<Weight> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = 1 + static_cast<Weight>(rng.below(9));
    return Graph(n, edges).with_weights(w);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("stage cutoffs follow the reserve formulas exactly") {
    const Budget b = Budget::wall_clock(600.0);

    Deadlines d = compute_deadlines(b, 30, 30);
    CHECK(d.ga_deadline == 594.0);
    CHECK(d.ls_threshold == 494.0); // 600 - 6 - 10 - 30*30*0.1
    CHECK(d.end == 600.0);

    d = compute_deadlines(b, 0, 10);
    CHECK(d.ls_threshold == 584.0);

    SUBCASE("growing populations shrink the construction window") {
        const double with_10 = compute_deadlines(b, 10, 5).ls_threshold;
        const double with_40 = compute_deadlines(b, 40, 5).ls_threshold;
        CHECK(with_10 == 579.0); // 584 - 10*5*0.1
        CHECK(with_40 == 564.0);
        CHECK(with_40 < with_10);
    }

    SUBCASE("the construction floor clamps huge populations") {
        d = compute_deadlines(b, 100000, 10);
        CHECK(d.ls_threshold == 1.0);
        CHECK(d.ga_deadline == 594.0);
    }

    SUBCASE("tiny budgets scale the reserves proportionally") {
        d = compute_deadlines(Budget::wall_clock(3.0), 0, 1);
        // Reserves scale by 3/30: post 0.6, crossover base 1.0.
        CHECK(d.ga_deadline == doctest::Approx(2.4));
        CHECK(d.ls_threshold == doctest::Approx(1.4));
        CHECK(d.ls_threshold >= 1.0);
        CHECK(d.ls_threshold <= d.ga_deadline - 1.0);
    }

    SUBCASE("infeasible budgets are rejected") {
        CHECK_THROWS_AS(compute_deadlines(Budget::wall_clock(2.0), 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(compute_deadlines(Budget::wall_clock(0.0), 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(compute_deadlines(Budget::deterministic(5, 5), 0, 1), std::logic_error);
    }
}

TEST_CASE("solve recovers pinned optima") {
    SolveConfig cfg;
    cfg.seed = 3;

    SUBCASE("triangle, one clique") {
        Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
        cfg.k = 1;
        const SolveResult r = solve(g, cfg, Budget::deterministic(4, 2));
        CHECK(r.best_w == 3);
        CHECK(r.covered_count == 3);
        REQUIRE(r.cliques.size() == 1);
        CHECK(r.cliques[0] == std::vector<Vertex>{0, 1, 2});
        CHECK(r.valid);
    }

    SUBCASE("edgeless graph: reduction repairs an empty core") {
        // All five vertices are degree-0, so the searched graph is empty and
        // the repair pass must build the whole solution.
        Graph g(5, {});
        cfg.k = 3;
        const SolveResult r = solve(g, cfg, Budget::deterministic(3, 2));
        CHECK(r.best_w == 3);
        CHECK(r.covered_count == 3);
        CHECK(r.cliques.size() == 3);
        for (const auto& c : r.cliques) CHECK(c.size() == 1);
        CHECK(r.valid);
    }

    SUBCASE("spare clique budget is not fabricated") {
        Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
        cfg.k = 5;
        const SolveResult r = solve(g, cfg, Budget::deterministic(4, 2));
        CHECK(r.best_w == 3);
        CHECK(r.valid);
        CHECK(r.cliques.size() <= 5);
        for (const auto& c : r.cliques) CHECK(!c.empty());
    }

    SUBCASE("invalid requests are rejected") {
        Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
        cfg.k = 0;
        CHECK_THROWS_AS(solve(g, cfg, Budget::deterministic(2, 1)), std::invalid_argument);
    }
}

TEST_CASE("fixed-work mode is reproducible byte for byte") {
    Graph g = gen_er(30, 0.3, 11);
    SolveConfig cfg;
    cfg.k = 3;
    cfg.weights = WeightScheme::Mod200;
    cfg.seed = 42;
    const Budget b = Budget::deterministic(10, 5);

    const SolveResult r1 = solve(g, cfg, b);
    const SolveResult r2 = solve(g, cfg, b);
    const std::string j1 = result_to_json(r1);
    const std::string j2 = result_to_json(r2);
    CHECK(j1 == j2);
    CHECK(r1.valid);
    CHECK(r1.ls_seconds == 0.0); // wall-clock noise is excluded from the report
    CHECK(r1.ga_seconds == 0.0);
    CHECK(r1.post_seconds == 0.0);
    CHECK(r1.population_size == 10);
    CHECK(r1.generations == 5);

    // A graph re-parsed from the same bytes gives the same result too.
    std::istringstream in(write_dimacs(g));
    Graph reparsed = parse_dimacs(in, g.name());
    const SolveResult r3 = solve(reparsed, cfg, b);
    CHECK(result_to_json(r3) == j1);
}

TEST_CASE("best-ever weight never drops across stage boundaries") {
    Rng rng(29);
    for (int rep = 0; rep < 25; ++rep) {
        Graph g = random_weighted_graph(rng, 4 + static_cast<Vertex>(rng.below(20)), 0.35);
        SolveConfig cfg;
        cfg.k = 1 + static_cast<int>(rng.below(3));
        cfg.seed = rng.next_u64();
        StageTrace trace;
        const SolveResult r = solve(g, cfg, Budget::deterministic(6, 4), &trace);
        CHECK(r.valid);
        CHECK(trace.best_after_ls >= 1);
        CHECK(trace.best_after_ga >= trace.best_after_ls);
        CHECK(trace.best_after_post >= trace.best_after_ga);
        CHECK(r.best_w == trace.best_after_post);
    }
}

TEST_CASE("each pipeline switch can be turned off") {
    Graph g = gen_er(25, 0.35, 5).with_weights([] {
        std::vector<Weight> w(25);
        for (int i = 0; i < 25; ++i) w[static_cast<std::size_t>(i)] = 1 + i % 7;
        return w;
    }());
    const Budget b = Budget::deterministic(6, 4);

    SolveConfig cfg;
    cfg.k = 3;
    cfg.seed = 9;

    for (int variant = 0; variant < 6; ++variant) {
        SolveConfig v = cfg;
        CAPTURE(variant);
        switch (variant) {
        case 0: break;
        case 1: v.reduction_enabled = false; break;
        case 2: v.tabu_enabled = false; break;
        case 3: v.ga_enabled = false; break;
        case 4: v.post_enabled = false; break;
        case 5:
            v.reduction_enabled = v.tabu_enabled = v.ga_enabled = v.post_enabled = false;
            break;
        }
        const SolveResult r = solve(g, v, b);
        CHECK(r.valid);
        CHECK(r.best_w >= 1);
        if (!v.tabu_enabled) {
            CHECK(r.tabu_inserted == 0);
            CHECK(r.tabu_blocked == 0);
        }
        if (!v.ga_enabled) CHECK(r.generations == 0);
    }
}

TEST_CASE("verification rejects tampered results") {
    Graph g = gen_er(20, 0.4, 21);
    SolveConfig cfg;
    cfg.k = 2;
    cfg.seed = 1;
    const SolveResult honest = solve(g, cfg, Budget::deterministic(5, 3));
    REQUIRE(honest.valid);
    REQUIRE(verify_result(g, honest));

    SolveResult r = honest;
    r.best_w += 1;
    CHECK(!verify_result(g, r));

    r = honest;
    r.covered_count += 1;
    CHECK(!verify_result(g, r));

    r = honest;
    REQUIRE(!r.cliques.empty());
    r.cliques[0].push_back(999); // out of range
    CHECK(!verify_result(g, r));

    r = honest;
    // A non-adjacent pair breaks clique validity: find one.
    bool tampered = false;
    for (Vertex u = 0; u < g.vertex_count() && !tampered; ++u) {
        if (r.cliques[0].end() == std::find(r.cliques[0].begin(), r.cliques[0].end(), u) &&
            !g.adjacent(r.cliques[0][0], u)) {
            r.cliques[0].push_back(u);
            tampered = true;
        }
    }
    REQUIRE(tampered);
    CHECK(!verify_result(g, r));

    r = honest;
    r.cliques.resize(3, {0}); // more cliques than k
    CHECK(!verify_result(g, r));
}

TEST_CASE("a short wall-clock run completes inside its budget") {
    Graph g = gen_er(60, 0.2, 33);
    SolveConfig cfg;
    cfg.k = 3;
    cfg.weights = WeightScheme::Mod200;
    cfg.seed = 17;
    const auto start = std::chrono::steady_clock::now();
    const SolveResult r = solve(g, cfg, Budget::wall_clock(3.0));
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.valid);
    CHECK(r.best_w >= 1);
    CHECK(r.population_size >= 2);
    CHECK(r.ls_seconds >= 0.0);
    CHECK(r.ga_seconds >= 0.0);
    CHECK(r.post_seconds >= 0.0);
    // One slow individual can overshoot a stage, but not the whole budget by much.
    CHECK(elapsed < 9.0);
}

TEST_CASE("result JSON carries the full schema") {
    Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
    SolveConfig cfg;
    cfg.k = 1;
    cfg.seed = 7;
    const SolveResult r = solve(g, cfg, Budget::deterministic(3, 2));
    const auto j = nlohmann::json::parse(result_to_json(r));
    for (const char* field : {"instance", "k", "seed", "config", "bestW", "coveredCount",
                              "cliques", "timings", "populationSize", "generations", "tabu",
                              "valid"})
        CHECK(j.contains(field));
    CHECK(j["bestW"] == 3);
    CHECK(j["coveredCount"] == 3);
    CHECK(j["k"] == 1);
    CHECK(j["seed"] == 7);
    CHECK(j["valid"] == true);
    CHECK(j["cliques"][0] == nlohmann::json::array({0, 1, 2}));
    CHECK(j["timings"].contains("ls"));
    CHECK(j["timings"].contains("ga"));
    CHECK(j["timings"].contains("post"));
    CHECK(j["tabu"].contains("inserted"));
    CHECK(j["tabu"].contains("blocked"));
}

TEST_CASE("bench specs parse and reject malformed input") {
    const auto entries = parse_bench_spec(R"({"instances": [
        {"path": "a.clq", "format": "dimacs", "k": 4},
        {"path": "b.txt", "format": "edgelist"},
        {"path": "c.clq"}
    ]})");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].path == "a.clq");
    CHECK(entries[0].k == 4);
    CHECK(entries[1].format == "edgelist");
    CHECK(entries[2].format == "dimacs"); // default
    CHECK(entries[2].k == 1);             // default

    CHECK_THROWS(parse_bench_spec("not json"));
    CHECK_THROWS(parse_bench_spec(R"({"instances": 3})"));
    CHECK_THROWS(parse_bench_spec(R"({"instances": [{"format": "dimacs"}]})"));
    CHECK_THROWS(parse_bench_spec(R"({"instances": [{"path": "x", "format": "weird"}]})"));
    CHECK_THROWS(parse_bench_spec(R"({"instances": [{"path": "x", "k": 0}]})"));
}

TEST_CASE("the benchmark harness records runs, summaries, and warnings") {
    const auto p1 = temp_file("dtkc_bench_a.clq");
    const auto p2 = temp_file("dtkc_bench_b.clq");
    write_file(p1, write_dimacs(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})));
    write_file(p2, write_dimacs(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));

    std::vector<BenchEntry> entries;
    entries.push_back({p1.string(), "dimacs", 1});
    entries.push_back({p2.string(), "dimacs", 2});
    entries.push_back({"/nonexistent/file.clq", "dimacs", 1});

    SolveConfig base;
    base.seed = 100;
    const BenchReport report = run_benchmark(entries, base, Budget::deterministic(4, 2), 3);

    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("/nonexistent/file.clq") != std::string::npos);
    REQUIRE(report.runs.size() == 6);
    REQUIRE(report.summaries.size() == 2);
    REQUIRE(report.results_json.size() == 6);

    for (const RunRecord& rec : report.runs) CHECK(rec.valid);
    CHECK(report.runs[0].seed == 100);
    CHECK(report.runs[1].seed == 101);
    CHECK(report.runs[2].seed == 102);

    // Triangle plus a pendant: best single clique covers 3 vertices.
    CHECK(report.summaries[0].best_w == 3);
    CHECK(report.summaries[0].runs == 3);
    CHECK(report.summaries[0].avg_w == doctest::Approx(3.0));
    // 5-cycle with k=2: two disjoint edges cover 4.
    CHECK(report.summaries[1].best_w == 4);

    SUBCASE("emitted JSON documents re-parse and match their run records") {
        for (std::size_t i = 0; i < report.runs.size(); ++i) {
            const auto j = nlohmann::json::parse(report.results_json[i]);
            CHECK(j["bestW"] == report.runs[i].best_w);
            CHECK(j["k"] == report.runs[i].k);
            CHECK(j["seed"] == report.runs[i].seed);
            CHECK(j["instance"] == report.runs[i].instance);
        }
    }

    SUBCASE("CSV emission") {
        std::istringstream runs_csv(runs_to_csv(report));
        std::string line;
        REQUIRE(std::getline(runs_csv, line));
        CHECK(line == "instance,k,seed,bestW");
        int rows = 0;
        while (std::getline(runs_csv, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 6);

        std::istringstream sums_csv(summaries_to_csv(report));
        REQUIRE(std::getline(sums_csv, line));
        CHECK(line == "instance,k,runs,bestW,avgW");
        rows = 0;
        while (std::getline(sums_csv, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 2);
    }

    SUBCASE("self-comparison is a wash") {
        const Comparison c = compare_reports(report, report);
        CHECK(c.n_plus_best == 0);
        CHECK(c.n_minus_best == 0);
        CHECK(c.n_plus_avg == 0);
        CHECK(c.n_minus_avg == 0);

        std::istringstream scatter(scatter_csv(report, report));
        std::string line;
        REQUIRE(std::getline(scatter, line));
        CHECK(line == "instance,k,bestW,otherBestW,relative");
        int rows = 0;
        while (std::getline(scatter, line)) {
            if (line.empty()) continue;
            ++rows;
            CHECK(line.substr(line.rfind(',') + 1) == "1"); // relative = other/self
        }
        CHECK(rows == 2);
    }

    SUBCASE("a single run makes best equal average") {
        std::vector<BenchEntry> one;
        one.push_back({p1.string(), "dimacs", 1});
        const BenchReport solo = run_benchmark(one, base, Budget::deterministic(3, 2), 1);
        REQUIRE(solo.summaries.size() == 1);
        CHECK(solo.summaries[0].best_w == doctest::Approx(solo.summaries[0].avg_w));
    }

    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}
