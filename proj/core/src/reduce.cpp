#include "dtkc/reduce.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace dtkc {

Reduction classify_vertices(const Graph& g) {
    Reduction r;
    const Vertex n = g.vertex_count();
    std::vector<Vertex> reduced_id(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        const Vertex d = g.degree(v);
        if (d == 0) {
            r.isolated.push_back(v);
        } else if (d == 1) {
            r.leaf.push_back(v);
        } else {
            reduced_id[static_cast<std::size_t>(v)] = static_cast<Vertex>(r.orig_of_reduced.size());
            r.orig_of_reduced.push_back(v);
        }
    }
    EdgeList edges;
    std::vector<Weight> weights;
    weights.reserve(r.orig_of_reduced.size());
    for (Vertex u : r.orig_of_reduced) {
        weights.push_back(g.weight(u));
        for (Vertex v : g.neighbors(u)) {
            const Vertex rv = reduced_id[static_cast<std::size_t>(v)];
            if (u < v && rv >= 0)
                edges.emplace_back(reduced_id[static_cast<std::size_t>(u)], rv);
        }
    }
    r.reduced = Graph(static_cast<Vertex>(r.orig_of_reduced.size()), std::move(edges), g.name())
                    .with_weights(std::move(weights));
    return r;
}

Reduction no_reduction(const Graph& g) {
    Reduction r;
    r.reduced = g;
    r.orig_of_reduced.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(r.orig_of_reduced.begin(), r.orig_of_reduced.end(), 0);
    return r;
}

Solution map_to_original(const Graph& g, const Reduction& r, const Solution& reduced_solution) {
    Solution s(g);
    for (const Clique& c : reduced_solution.cliques()) {
        std::vector<Vertex> vs;
        vs.reserve(c.size());
        for (Vertex v : c) vs.push_back(r.orig_of_reduced[static_cast<std::size_t>(v)]);
        s.add(Clique(std::move(vs)));
    }
    return s;
}

void post_reduction(const Reduction& r, Solution& s, int k) {
    const Graph& g = s.graph();
    std::vector<Vertex> order;
    order.reserve(r.isolated.size() + r.leaf.size());
    std::merge(r.isolated.begin(), r.isolated.end(), r.leaf.begin(), r.leaf.end(),
               std::back_inserter(order));
    for (Vertex v : order) {
        const auto nb = g.neighbors(v);
        std::vector<Vertex> vs(nb.begin(), nb.end());
        vs.push_back(v);
        Clique cand(std::move(vs));
        const Weight cand_w = cand.weight_in(g);
        if (s.clique_count() == 0) {
            s.add(std::move(cand));
            continue;
        }
        if (cand_w <= s.score(s.argmin_score())) continue;
        s.add(std::move(cand));
        if (s.clique_count() > k) s.remove(s.argmin_score());
    }
}

} // namespace dtkc
