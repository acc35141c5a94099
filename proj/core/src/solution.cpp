#include "dtkc/solution.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtkc {

Clique::Clique(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex in clique");
}

bool Clique::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Weight Clique::weight_in(const Graph& g) const {
    Weight w = 0;
    for (Vertex v : vertices_) w += g.weight(v);
    return w;
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
    for (Vertex v : vs)
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("vertex id out of range");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) return false;
            if (!g.adjacent(vs[i], vs[j])) return false;
        }
    return true;
}

Solution::Solution(const Graph& g)
    : graph_(&g), coverage_(static_cast<std::size_t>(g.vertex_count()), 0) {}

const Clique& Solution::clique(int idx) const {
    check_index(idx);
    return cliques_[static_cast<std::size_t>(idx)];
}

void Solution::check_index(int idx) const {
    if (idx < 0 || idx >= clique_count()) throw std::out_of_range("clique index out of range");
}

void Solution::cover(const Clique& c) {
    for (Vertex v : c) {
        if (coverage_[static_cast<std::size_t>(v)]++ == 0) {
            covered_weight_ += graph_->weight(v);
            ++covered_count_;
        }
    }
}

void Solution::uncover(const Clique& c) {
    for (Vertex v : c) {
        if (--coverage_[static_cast<std::size_t>(v)] == 0) {
            covered_weight_ -= graph_->weight(v);
            --covered_count_;
        }
    }
}

void Solution::add(Clique c) {
    for (Vertex v : c)
        if (v < 0 || v >= graph_->vertex_count())
            throw std::invalid_argument("clique vertex out of range");
    cover(c);
    cliques_.push_back(std::move(c));
}

void Solution::insert(int idx, Clique c) {
    if (idx < 0 || idx > clique_count()) throw std::out_of_range("clique index out of range");
    for (Vertex v : c)
        if (v < 0 || v >= graph_->vertex_count())
            throw std::invalid_argument("clique vertex out of range");
    cover(c);
    cliques_.insert(cliques_.begin() + idx, std::move(c));
}

void Solution::remove(int idx) {
    check_index(idx);
    uncover(cliques_[static_cast<std::size_t>(idx)]);
    cliques_.erase(cliques_.begin() + idx);
}

void Solution::replace(int idx, Clique c) {
    check_index(idx);
    for (Vertex v : c)
        if (v < 0 || v >= graph_->vertex_count())
            throw std::invalid_argument("clique vertex out of range");
    uncover(cliques_[static_cast<std::size_t>(idx)]);
    cover(c);
    cliques_[static_cast<std::size_t>(idx)] = std::move(c);
}

std::vector<Vertex> Solution::private_vertices(int idx) const {
    check_index(idx);
    std::vector<Vertex> out;
    for (Vertex v : cliques_[static_cast<std::size_t>(idx)])
        if (coverage_[static_cast<std::size_t>(v)] == 1) out.push_back(v);
    return out;
}

Weight Solution::score(int idx) const {
    check_index(idx);
    Weight s = 0;
    for (Vertex v : cliques_[static_cast<std::size_t>(idx)])
        if (coverage_[static_cast<std::size_t>(v)] == 1) s += graph_->weight(v);
    return s;
}

int Solution::argmin_score() const {
    int best = -1;
    Weight best_score = 0;
    for (int idx = 0; idx < clique_count(); ++idx) {
        Weight s = score(idx);
        if (best == -1 || s < best_score) {
            best = idx;
            best_score = s;
        }
    }
    return best;
}

Weight Solution::swap_delta(int out_idx, const Clique& c_in) const {
    check_index(out_idx);
    const Clique& c_out = cliques_[static_cast<std::size_t>(out_idx)];
    const auto& out_v = c_out.vertices();
    const auto& in_v = c_in.vertices();
    Weight delta = 0;
    std::size_t i = 0, j = 0;
    while (i < out_v.size() || j < in_v.size()) {
        if (j == in_v.size() || (i < out_v.size() && out_v[i] < in_v[j])) {
            // Leaves with c_out; lost iff nothing else covers it.
            if (coverage_[static_cast<std::size_t>(out_v[i])] == 1)
                delta -= graph_->weight(out_v[i]);
            ++i;
        } else if (i == out_v.size() || in_v[j] < out_v[i]) {
            // Arrives with c_in; gained iff currently uncovered.
            if (coverage_[static_cast<std::size_t>(in_v[j])] == 0)
                delta += graph_->weight(in_v[j]);
            ++j;
        } else {
            // In both: coverage unchanged by the swap.
            ++i;
            ++j;
        }
    }
    return delta;
}

bool Solution::check_consistent() const {
    std::vector<int> counts(coverage_.size(), 0);
    for (const Clique& c : cliques_)
        for (Vertex v : c) ++counts[static_cast<std::size_t>(v)];
    if (counts != coverage_) return false;
    Weight w = 0;
    int covered = 0;
    for (Vertex v = 0; v < graph_->vertex_count(); ++v) {
        if (counts[static_cast<std::size_t>(v)] > 0) {
            w += graph_->weight(v);
            ++covered;
        }
    }
    return w == covered_weight_ && covered == covered_count_;
}

} // namespace dtkc
