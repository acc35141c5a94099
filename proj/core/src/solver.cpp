#include "dtkc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "dtkc/postprocess.hpp"
#include "dtkc/reduce.hpp"

namespace dtkc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Clock::time_point offset(Clock::time_point t0, double seconds) {
    return t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

// Random-stream ids hung off the master seed; fixed so runs are replayable.
constexpr std::uint64_t kTabuStream = 1;
constexpr std::uint64_t kLsStream = 2;
constexpr std::uint64_t kGaStream = 3;

} // namespace

Deadlines compute_deadlines(const Budget& b, int p_size, int k) {
    if (b.mode != BudgetMode::WallClock)
        throw std::logic_error("stage deadlines are a wall-clock concept");
    const double scale = b.t_max < 30.0 ? b.t_max / 30.0 : 1.0;
    const double post_r = b.post_reserve * scale;
    const double ga_base = b.ga_base_reserve * scale;
    const double per_ind = b.ga_per_individual * scale;
    const double ga_deadline = b.t_max - post_r;
    if (!(ga_deadline >= 2.0))
        throw std::invalid_argument("time budget too small: need at least 1 s each for "
                                    "construction and crossover after the final-pass reserve");
    double ls = ga_deadline - ga_base - static_cast<double>(p_size) * static_cast<double>(k) * per_ind;
    ls = std::clamp(ls, 1.0, ga_deadline - 1.0);
    return {ls, ga_deadline, b.t_max};
}

SolveResult solve(const Graph& input, const SolveConfig& cfg, const Budget& b, StageTrace* trace) {
    if (cfg.k < 1) throw std::invalid_argument("k must be at least 1");
    const bool det = b.mode == BudgetMode::Deterministic;
    if (!det) compute_deadlines(b, 0, cfg.k); // validates the budget up front

    const Graph g = assign_weights(input, cfg.weights);
    const Clock::time_point t0 = Clock::now();

    const Reduction red = cfg.reduction_enabled ? classify_vertices(g) : no_reduction(g);

    std::optional<TabuList> tabu_store;
    if (cfg.tabu_enabled)
        tabu_store.emplace(g.vertex_count(), cfg.tabu_length, derive_seed(cfg.seed, kTabuStream));
    TabuList* tabu = tabu_store ? &*tabu_store : nullptr;

    Rng ls_rng(derive_seed(cfg.seed, kLsStream));
    Rng ga_rng(derive_seed(cfg.seed, kGaStream));

    Population pop;
    Solution best(g);
    std::uint64_t tabu_inserted = 0;

    // One individual: search the reduced graph, lift to original ids, replay
    // the reduced-away vertices, remember it.
    const auto make_individual = [&](const Deadline& deadline) {
        Solution reduced_sol = local_search(red.reduced, cfg.k, cfg.params, ls_rng, deadline);
        Solution ind = map_to_original(g, red, reduced_sol);
        post_reduction(red, ind, cfg.k);
        if (tabu) {
            tabu->insert(tabu->hash(ind));
            ++tabu_inserted;
        }
        if (ind.covered_weight() > best.covered_weight()) best = ind;
        pop.push_back(std::move(ind));
    };

    // Construction stage: the threshold tightens as the population grows.
    const Clock::time_point ls_start = Clock::now();
    if (det) {
        const std::uint64_t target = std::max<std::uint64_t>(2, b.ls_individuals);
        while (pop.size() < target) make_individual(Deadline::never());
    } else {
        for (;;) {
            const Deadlines d = compute_deadlines(b, static_cast<int>(pop.size()), cfg.k);
            if (pop.size() >= 2 && seconds_since(t0) >= d.ls_threshold) break;
            make_individual(Deadline::at(offset(t0, d.ls_threshold)));
        }
    }
    const double ls_seconds = seconds_since(ls_start);
    const int population_size = static_cast<int>(pop.size());
    if (trace) trace->best_after_ls = best.covered_weight();

    // Crossover stage; with crossover disabled, construction keeps going
    // through its window instead.
    const Clock::time_point ga_start = Clock::now();
    GaResult ga;
    const double ga_deadline_s = det ? 0.0 : compute_deadlines(b, population_size, cfg.k).ga_deadline;
    if (cfg.ga_enabled) {
        const Deadline d = det ? Deadline::never() : Deadline::at(offset(t0, ga_deadline_s));
        const std::uint64_t max_gen = det ? b.ga_generations : UINT64_MAX;
        ga = genetic_stage(pop, tabu, d, max_gen, ga_rng, &best);
    } else if (det) {
        for (std::uint64_t i = 0; i < b.ga_generations; ++i) make_individual(Deadline::never());
    } else {
        const Deadline d = Deadline::at(offset(t0, ga_deadline_s));
        while (!d.expired()) make_individual(d);
    }
    const double ga_seconds = seconds_since(ga_start);
    if (trace) trace->best_after_ga = best.covered_weight();

    // Final pass over the population.
    const Clock::time_point post_start = Clock::now();
    if (cfg.post_enabled) {
        const Deadline d = det ? Deadline::never() : Deadline::at(offset(t0, b.t_max));
        post_processing(pop, d);
        for (const Solution& s : pop)
            if (s.covered_weight() > best.covered_weight()) best = s;
    }
    const double post_seconds = seconds_since(post_start);
    if (trace) trace->best_after_post = best.covered_weight();

    SolveResult r;
    r.best_w = best.covered_weight();
    r.covered_count = best.covered_count();
    for (const Clique& c : best.cliques())
        if (!c.empty()) r.cliques.emplace_back(c.vertices().begin(), c.vertices().end());
    r.ls_seconds = det ? 0.0 : ls_seconds;
    r.ga_seconds = det ? 0.0 : ga_seconds;
    r.post_seconds = det ? 0.0 : post_seconds;
    r.population_size = population_size;
    r.generations = ga.generations;
    r.tabu_inserted = tabu_inserted + ga.tabu.inserted;
    r.tabu_blocked = ga.tabu.blocked;
    r.config = cfg;
    r.budget = b;
    r.instance = input.name();
    r.valid = verify_result(input, r);
    return r;
}

bool verify_result(const Graph& input, const SolveResult& r) {
    if (static_cast<int>(r.cliques.size()) > r.config.k) return false;
    const Graph g = assign_weights(input, r.config.weights);
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& vs : r.cliques) {
        for (Vertex v : vs)
            if (v < 0 || v >= g.vertex_count()) return false;
        if (!is_clique(g, vs)) return false;
        for (Vertex v : vs) covered[static_cast<std::size_t>(v)] = 1;
    }
    Weight w = 0;
    int count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (covered[static_cast<std::size_t>(v)]) {
            w += g.weight(v);
            ++count;
        }
    return w == r.best_w && count == r.covered_count;
}

} // namespace dtkc
