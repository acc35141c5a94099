#pragma once

#include <cstddef>

#include "dtkc/graph.hpp"
#include "dtkc/solution.hpp"

namespace dtkc {

// All maximal cliques via pivoting branch-and-bound enumeration: vertices
// ascending within each clique, cliques in lexicographic order. Meant for
// tiny instances; cost is exponential in the worst case.
std::vector<Clique> enumerate_maximal_cliques(const Graph& g);

struct ExactResult {
    Weight best_w;
    Solution witness;
};

// Exhaustive optimum of covered weight over all subsets of at most k maximal
// cliques. Restricting to maximal cliques loses nothing: enlarging a clique
// never shrinks coverage. Prunes on the best-remaining coverage bound.
// Throws std::runtime_error when the maximal-clique count exceeds the cap.
ExactResult exact_solve(const Graph& g, int k, std::size_t max_maximal_cliques = 100000);

} // namespace dtkc
