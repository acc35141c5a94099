#pragma once

#include <cstdint>
#include <string>

#include "dtkc/genetic.hpp"
#include "dtkc/graph.hpp"
#include "dtkc/local_search.hpp"

namespace dtkc {

enum class BudgetMode { WallClock, Deterministic };

// Stage budget. WallClock follows the reserve formulas below; Deterministic
// replaces wall-clock stopping with fixed work counts and ignores time
// entirely (timings are reported as zero so outputs are reproducible).
struct Budget {
    double t_max = 600.0;
    double post_reserve = 6.0;       // final-pass reserve
    double ga_base_reserve = 10.0;   // flat crossover reserve on top of post_reserve
    double ga_per_individual = 0.1;  // extra crossover seconds per individual, times k
    BudgetMode mode = BudgetMode::WallClock;
    std::uint64_t ls_individuals = 0; // Deterministic: individuals to build
    std::uint64_t ga_generations = 0; // Deterministic: crossover generations

    static Budget wall_clock(double t_max) {
        Budget b;
        b.t_max = t_max;
        return b;
    }
    static Budget deterministic(std::uint64_t ls_individuals, std::uint64_t ga_generations) {
        Budget b;
        b.mode = BudgetMode::Deterministic;
        b.ls_individuals = ls_individuals;
        b.ga_generations = ga_generations;
        return b;
    }
};

// Stage cutoffs in seconds from run start. ls_threshold shrinks as the
// population grows, so it is re-evaluated before each new individual.
struct Deadlines {
    double ls_threshold;
    double ga_deadline;
    double end;
};

// ga_deadline = t_max - post_reserve; ls_threshold = ga_deadline -
// ga_base_reserve - p_size*k*ga_per_individual, clamped so the construction
// stage gets at least 1 s and crossover at least 1 s. The reserves scale by
// t_max/30 when t_max < 30 s. Throws when t_max is too small to fit both
// stages, or on a Deterministic budget.
Deadlines compute_deadlines(const Budget& b, int p_size, int k);

struct SolveConfig {
    int k = 1;
    LsParams params;
    WeightScheme weights = WeightScheme::Unit;
    std::uint64_t seed = 0;
    std::size_t tabu_length = TabuList::kDefaultLength;
    bool reduction_enabled = true;
    bool tabu_enabled = true;
    bool ga_enabled = true;
    bool post_enabled = true;
};

struct SolveResult {
    Weight best_w = 0;
    int covered_count = 0;
    std::vector<std::vector<Vertex>> cliques; // best solution, empty cliques dropped
    double ls_seconds = 0.0;
    double ga_seconds = 0.0;
    double post_seconds = 0.0;
    int population_size = 0; // when construction ended
    std::uint64_t generations = 0;
    std::uint64_t tabu_inserted = 0;
    std::uint64_t tabu_blocked = 0;
    bool valid = false; // set only after from-scratch verification
    SolveConfig config;
    Budget budget;
    std::string instance;
};

// Best-ever covered weight observed at each stage boundary; non-decreasing.
struct StageTrace {
    Weight best_after_ls = 0;
    Weight best_after_ga = 0;
    Weight best_after_post = 0;
};

// Full pipeline: degree-0/1 reduction, repeated local search with per-
// individual repair until the construction threshold, crossover generations
// until the crossover deadline, final rebuild/absorb pass until t_max.
// Disabled crossover keeps building individuals through its stage instead.
// The returned best solution is re-verified from scratch before valid is set.
SolveResult solve(const Graph& g, const SolveConfig& cfg, const Budget& b,
                  StageTrace* trace = nullptr);

// From-scratch check of a reported result against the instance it came from:
// clique count within k, every clique valid, and best_w / covered_count equal
// to a recount under the configured weight scheme.
bool verify_result(const Graph& input, const SolveResult& r);

} // namespace dtkc
