#include "dtkc/local_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtkc {

namespace {

Vertex sample_start(const Graph& g, Rng& rng, StartBias bias) {
    const Vertex n = g.vertex_count();
    if (bias == StartBias::Uniform || g.total_weight() <= 0)
        return static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    std::uint64_t r = rng.below(static_cast<std::uint64_t>(g.total_weight()));
    for (Vertex v = 0; v < n; ++v) {
        const std::uint64_t w = static_cast<std::uint64_t>(g.weight(v));
        if (r < w) return v;
        r -= w;
    }
    return n - 1; // unreachable: weights sum to total_weight
}

// Degree of v inside cand (v itself excluded by construction).
std::size_t subgraph_degree(const Graph& g, Vertex v, const std::vector<Vertex>& cand) {
    std::size_t d = 0;
    for (Vertex u : cand)
        if (u != v && g.adjacent(u, v)) ++d;
    return d;
}

} // namespace

Clique find_clique(const Graph& g, Rng& rng, const LsParams& params) {
    if (g.vertex_count() == 0) return Clique{};
    const Vertex start = sample_start(g, rng, params.start_bias);
    std::vector<Vertex> members{start};
    const auto nb = g.neighbors(start);
    std::vector<Vertex> cand(nb.begin(), nb.end());
    std::vector<Vertex> picks;
    while (!cand.empty()) {
        const std::size_t t =
            std::min<std::size_t>(static_cast<std::size_t>(params.bms_samples), cand.size());
        picks.clear();
        for (std::size_t s = 0; s < t; ++s)
            picks.push_back(cand[static_cast<std::size_t>(rng.below(cand.size()))]);
        Weight best_w = -1;
        for (Vertex v : picks) best_w = std::max(best_w, g.weight(v));
        Vertex chosen = -1;
        std::size_t chosen_deg = 0;
        for (Vertex v : picks) {
            if (g.weight(v) != best_w || v == chosen) continue;
            const std::size_t d = subgraph_degree(g, v, cand);
            if (chosen == -1 || d > chosen_deg || (d == chosen_deg && v < chosen)) {
                chosen = v;
                chosen_deg = d;
            }
        }
        members.push_back(chosen);
        std::vector<Vertex> next;
        next.reserve(cand.size());
        for (Vertex u : cand)
            if (u != chosen && g.adjacent(u, chosen)) next.push_back(u);
        cand.swap(next);
    }
    return Clique(std::move(members));
}

Solution local_search(const Graph& g, int k, const LsParams& params, Rng& rng,
                      const Deadline& deadline, LsTrace* trace) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (params.m_step < 1 || params.bms_samples < 1)
        throw std::invalid_argument("m_step and bms_samples must be at least 1");

    Solution s(g);
    for (int i = 0; i < k; ++i) s.add(find_clique(g, rng, params));
    if (trace) trace->accepted_w.push_back(s.covered_weight());

    int step = 0;
    while (step < params.m_step) {
        if (deadline.expired()) break;
        ++step;
        const Weight w_before = s.covered_weight();
        s.add(find_clique(g, rng, params));
        const int drop = s.argmin_score();
        Clique dropped = s.clique(drop);
        s.remove(drop);
        if (s.covered_weight() > w_before) {
            step = 0;
            if (trace) trace->accepted_w.push_back(s.covered_weight());
        } else if (drop != k) {
            // Revert: discard the freshly added clique (now at the tail) and
            // put the dropped one back where it was.
            s.remove(k - 1);
            s.insert(drop, std::move(dropped));
        }
    }
    return s;
}

} // namespace dtkc
