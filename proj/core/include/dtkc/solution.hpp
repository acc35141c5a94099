#pragma once

#include <vector>

#include "dtkc/graph.hpp"

namespace dtkc {

// Sorted list of distinct, pairwise-adjacent vertex ids. May be empty.
class Clique {
public:
    Clique() = default;
    explicit Clique(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    bool contains(Vertex v) const;

    Weight weight_in(const Graph& g) const;

    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    friend bool operator==(const Clique&, const Clique&) = default;

private:
    std::vector<Vertex> vertices_;
};

bool is_clique(const Graph& g, std::span<const Vertex> vs);

// Ordered multiset of cliques with incremental per-vertex coverage counts and
// a cached covered weight, so score/priv/swap queries stay O(clique size).
// Callers cap the multiset at k cliques; the type itself does not (local
// search transiently holds k+1).
class Solution {
public:
    explicit Solution(const Graph& g);

    const Graph& graph() const { return *graph_; }

    int clique_count() const { return static_cast<int>(cliques_.size()); }
    const Clique& clique(int idx) const;
    const std::vector<Clique>& cliques() const { return cliques_; }

    Weight covered_weight() const { return covered_weight_; }
    int covered_count() const { return covered_count_; }
    int coverage(Vertex v) const { return coverage_[static_cast<std::size_t>(v)]; }

    void add(Clique c);
    void insert(int idx, Clique c);
    void remove(int idx);
    void replace(int idx, Clique c);

    // Vertices of clique idx covered by no other clique in the multiset.
    std::vector<Vertex> private_vertices(int idx) const;
    Weight score(int idx) const;
    // Lowest-index clique of minimum score; -1 on an empty solution.
    int argmin_score() const;

    // Covered-weight change of replacing clique out_idx by c_in; equals the
    // from-scratch recomputation of W after the swap minus W before.
    Weight swap_delta(int out_idx, const Clique& c_in) const;

    // From-scratch recount of coverage and weights; false on any mismatch.
    bool check_consistent() const;

private:
    void check_index(int idx) const;
    void cover(const Clique& c);
    void uncover(const Clique& c);

    const Graph* graph_;
    std::vector<Clique> cliques_;
    std::vector<int> coverage_;
    Weight covered_weight_ = 0;
    int covered_count_ = 0;
};

} // namespace dtkc
