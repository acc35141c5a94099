#pragma once

#include "dtkc/graph.hpp"
#include "dtkc/solution.hpp"

namespace dtkc {

// Degree-0/degree-1 vertices set aside before search, plus the induced
// subgraph on everything else. Degrees are taken in the original graph only;
// the reduction is not iterated.
struct Reduction {
    std::vector<Vertex> isolated;        // degree 0 in G, ascending
    std::vector<Vertex> leaf;            // degree 1 in G, ascending
    Graph reduced;                       // G[V \ (IV u LV)]
    std::vector<Vertex> orig_of_reduced; // reduced id -> original id
};

Reduction classify_vertices(const Graph& g);

// Identity reduction: nothing removed, reduced graph == g.
Reduction no_reduction(const Graph& g);

// Lift a solution on the reduced graph back to original vertex ids.
Solution map_to_original(const Graph& g, const Reduction& r, const Solution& reduced_solution);

// Replays the ignored vertices against a finished individual: each isolated
// or leaf vertex v proposes c' = N(v) u {v}; when w(c') beats the minimum
// clique score (or while the solution still has room below k), c' enters and
// the minimum-score clique of the enlarged solution leaves. Never decreases
// the covered weight.
void post_reduction(const Reduction& r, Solution& s, int k);

} // namespace dtkc
