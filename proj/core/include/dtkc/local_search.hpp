#pragma once

#include "dtkc/deadline.hpp"
#include "dtkc/graph.hpp"
#include "dtkc/rng.hpp"
#include "dtkc/solution.hpp"

namespace dtkc {

enum class StartBias { Uniform, WeightProportional };

struct LsParams {
    int m_step = 100;     // unimproved steps before the individual is final
    int bms_samples = 64; // extension candidates sampled per pick
    StartBias start_bias = StartBias::Uniform;
};

// Randomized maximal clique: sample a start vertex per start_bias, then
// repeatedly extend with the best of min(bms_samples, |cand|) uniformly
// sampled candidates from the common neighborhood, scored by weight with
// ties broken by candidate-subgraph degree then lowest id. Empty graph
// yields the empty clique.
Clique find_clique(const Graph& g, Rng& rng, const LsParams& params);

// W after the initial construction and after each accepted move; always
// non-decreasing.
struct LsTrace {
    std::vector<Weight> accepted_w;
};

// One individual: build k cliques, then repeat { add a fresh clique, drop
// the min-score clique of the enlarged solution, keep iff W strictly
// improves } until m_step consecutive non-improvements or the deadline.
// Always returns exactly k cliques.
Solution local_search(const Graph& g, int k, const LsParams& params, Rng& rng,
                      const Deadline& deadline, LsTrace* trace = nullptr);

} // namespace dtkc
