#include "dtkc/postprocess.hpp"

#include <algorithm>
#include <cassert>

namespace dtkc {

namespace {

// Max-weight vertex of cand with the given coverage status, ties to lowest
// id; -1 when none qualifies.
Vertex pick_extension(const Graph& g, const Solution& building, const std::vector<Vertex>& cand,
                      bool want_uncovered) {
    Vertex best = -1;
    for (Vertex v : cand) {
        if ((building.coverage(v) == 0) != want_uncovered) continue;
        if (best == -1 || g.weight(v) > g.weight(best)) best = v;
    }
    return best;
}

// Grow members into a maximal clique; cand holds the current common
// neighborhood and is consumed.
void expand_to_maximal(const Graph& g, const Solution& building, std::vector<Vertex>& members,
                       std::vector<Vertex>& cand) {
    while (!cand.empty()) {
        Vertex chosen = pick_extension(g, building, cand, true);
        if (chosen == -1) chosen = pick_extension(g, building, cand, false);
        members.push_back(chosen);
        std::vector<Vertex> next;
        next.reserve(cand.size());
        for (Vertex u : cand)
            if (u != chosen && g.adjacent(u, chosen)) next.push_back(u);
        cand.swap(next);
    }
}

} // namespace

Solution rebuild_individual(const Solution& s) {
    const Graph& g = s.graph();
    Solution out(g);
    for (const Clique& c : s.cliques()) {
        std::vector<Vertex> members;
        for (Vertex v : c)
            if (out.coverage(v) == 0) members.push_back(v);
        std::vector<Vertex> cand;
        if (members.empty()) {
            // Nothing survives the strip: seed from the heaviest uncovered
            // vertex, or the heaviest overall when everything is covered.
            Vertex seed = -1;
            for (int pass = 0; pass < 2 && seed == -1; ++pass)
                for (Vertex v = 0; v < g.vertex_count(); ++v) {
                    if (pass == 0 && out.coverage(v) != 0) continue;
                    if (seed == -1 || g.weight(v) > g.weight(seed)) seed = v;
                }
            if (seed == -1) {
                out.add(Clique{}); // empty graph
                continue;
            }
            members.push_back(seed);
            const auto nb = g.neighbors(seed);
            cand.assign(nb.begin(), nb.end());
        } else {
            const auto nb = g.neighbors(members[0]);
            cand.assign(nb.begin(), nb.end());
            for (std::size_t i = 1; i < members.size(); ++i) {
                std::vector<Vertex> next;
                for (Vertex u : cand)
                    if (u != members[i] && g.adjacent(u, members[i])) next.push_back(u);
                cand.swap(next);
            }
        }
        expand_to_maximal(g, out, members, cand);
        out.add(Clique(std::move(members)));
    }
    assert(out.covered_weight() >= s.covered_weight());
    assert(out.clique_count() == s.clique_count());
    return out;
}

void absorb_uncovered(Solution& s) {
    const Graph& g = s.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (s.coverage(v) > 0) continue;
        for (int idx = 0; idx < s.clique_count(); ++idx) {
            std::vector<Vertex> vs;
            for (Vertex u : s.clique(idx))
                if (g.adjacent(u, v)) vs.push_back(u);
            vs.push_back(v);
            Clique cand(std::move(vs));
            if (s.swap_delta(idx, cand) > 0) {
                s.replace(idx, std::move(cand));
                break;
            }
        }
    }
}

void post_processing(std::vector<Solution>& population, const Deadline& deadline) {
    std::stable_sort(population.begin(), population.end(),
                     [](const Solution& a, const Solution& b) {
                         return a.covered_weight() > b.covered_weight();
                     });
    for (Solution& s : population) {
        if (deadline.expired()) break;
        const Weight before = s.covered_weight();
        Solution rebuilt = rebuild_individual(s);
        absorb_uncovered(rebuilt);
        assert(rebuilt.covered_weight() >= before);
        (void)before;
        s = std::move(rebuilt);
    }
}

} // namespace dtkc
