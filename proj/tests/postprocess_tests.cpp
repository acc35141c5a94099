#include <doctest.h>

#include <algorithm>

#include "dtkc/oracle.hpp"
#include "dtkc/postprocess.hpp"
#include "dtkc/rng.hpp"

using namespace dtkc;

namespace {

Graph random_graph(Rng& rng, Vertex n, double p, Weight max_w) {
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    std::vector<Weight> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = 1 + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(max_w)));
    return Graph(n, edges).with_weights(std::move(w));
}

Solution random_solution(const Graph& g, int k, Rng& rng) {
    Solution s(g);
    for (int i = 0; i < k; ++i) {
        std::vector<Vertex> members;
        if (g.vertex_count() > 0 && rng.bernoulli(0.9)) {
            Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
            members.push_back(v);
            for (Vertex u : g.neighbors(v)) {
                const bool ok = std::all_of(members.begin(), members.end(),
                                            [&](Vertex m) { return g.adjacent(m, u); });
                if (ok && rng.bernoulli(0.6)) members.push_back(u);
            }
        }
        s.add(Clique(std::move(members)));
    }
    return s;
}

bool all_maximal(const Solution& s) {
    const Graph& g = s.graph();
    for (const Clique& c : s.cliques()) {
        if (c.empty()) {
            if (g.vertex_count() > 0) return false;
            continue;
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (c.contains(v)) continue;
            if (std::all_of(c.begin(), c.end(), [&](Vertex u) { return g.adjacent(u, v); }))
                return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("rebuild on pinned shapes") {
    SUBCASE("overlapping triangle halves: first expands, second restarts") {
        Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
        Solution s(g);
        s.add(Clique({0, 1}));
        s.add(Clique({1, 2}));
        Solution out = rebuild_individual(s);
        CHECK(out.clique_count() == 2);
        CHECK(out.clique(0).vertices() == std::vector<Vertex>{0, 1, 2});
        CHECK(out.covered_weight() == 3);
    }
    SUBCASE("maximal disjoint cliques are a coverage fixed point") {
        Graph g(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
        Solution s(g);
        s.add(Clique({0, 1}));
        s.add(Clique({2, 3, 4}));
        Solution out = rebuild_individual(s);
        CHECK(out.covered_weight() == s.covered_weight());
        CHECK(out.clique(0).vertices() == std::vector<Vertex>{0, 1});
        CHECK(out.clique(1).vertices() == std::vector<Vertex>{2, 3, 4});
    }
    SUBCASE("a sub-clique grows to the full clique") {
        Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        Solution s(k4);
        s.add(Clique({0, 1}));
        Solution out = rebuild_individual(s);
        CHECK(out.clique(0).vertices() == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(out.covered_weight() == 4);
    }
    SUBCASE("uncovered candidates are preferred over heavier covered ones") {
        // Clique {0,1,2}; 3 attaches to {0,1}; after the first clique takes
        // {0,1,2}, the second strips to empty, reseeds at 3 (uncovered),
        // and must extend with 0 or 1 (covered, by weight then id).
        Graph g = Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}})
                      .with_weights({5, 9, 1, 2});
        Solution s(g);
        s.add(Clique({0, 1, 2}));
        s.add(Clique({0, 1}));
        Solution out = rebuild_individual(s);
        CHECK(out.clique(0).vertices() == std::vector<Vertex>{0, 1, 2});
        CHECK(out.clique(1).vertices() == std::vector<Vertex>{0, 1, 3});
        CHECK(out.covered_weight() == 17);
    }
}

TEST_CASE("rebuild output covers at least the input and is maximal") {
    Rng rng(808);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g = random_graph(rng, 2 + static_cast<Vertex>(rng.below(14)), 0.4, 6);
        Solution s = random_solution(g, 1 + static_cast<int>(rng.below(4)), rng);
        Solution out = rebuild_individual(s);
        CHECK(out.clique_count() == s.clique_count());
        CHECK(out.covered_weight() >= s.covered_weight());
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (s.coverage(v) > 0) CHECK(out.coverage(v) > 0);
        CHECK(all_maximal(out));
        CHECK(out.check_consistent());
        for (const Clique& c : out.cliques()) CHECK(is_clique(g, c.vertices()));
    }
}

TEST_CASE("absorption on pinned shapes") {
    SUBCASE("equal trades around a unit square are rejected") {
        // v=2 offers {1,2} (gain 2, drop 0) and v=3 offers {0,3} (gain 3,
        // drop 1); both are zero-delta, so nothing strictly improves.
        Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        Solution s(cycle);
        s.add(Clique({0, 1}));
        absorb_uncovered(s);
        CHECK(s.covered_weight() == 2);
        CHECK(s.clique(0).vertices() == std::vector<Vertex>{0, 1});
    }
    SUBCASE("fully covered solutions are untouched") {
        Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
        Solution s(g);
        s.add(Clique({0, 1, 2}));
        Solution before = s;
        absorb_uncovered(s);
        CHECK(s.cliques() == before.cliques());
    }
    SUBCASE("a losing trade is rejected") {
        // Vertex 3 (w=1) could join {0,1} only by dropping vertex 1 (w=5).
        Graph g = Graph(4, {{0, 1}, {0, 3}}).with_weights({1, 5, 1, 1});
        Solution s(g);
        s.add(Clique({0, 1}));
        absorb_uncovered(s);
        CHECK(s.clique(0).vertices() == std::vector<Vertex>{0, 1});
    }
}

TEST_CASE("absorption example from a square") {
    Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    // Heavier far corner: picking up vertex 2 via {1,2} is a strict win.
    Graph g = cycle.with_weights({1, 1, 3, 1});
    Solution s(g);
    s.add(Clique({0, 1}));
    absorb_uncovered(s);
    CHECK(s.covered_weight() == 4); // {1,2} keeps 1, gains 2(w3), drops 0(w1)
    CHECK(s.clique(0).vertices() == std::vector<Vertex>{1, 2});
}

TEST_CASE("absorption never lowers the covered weight") {
    Rng rng(909);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g = random_graph(rng, 2 + static_cast<Vertex>(rng.below(14)), 0.35, 6);
        Solution s = random_solution(g, 1 + static_cast<int>(rng.below(4)), rng);
        const Weight before = s.covered_weight();
        absorb_uncovered(s);
        CHECK(s.covered_weight() >= before);
        CHECK(s.check_consistent());
        for (const Clique& c : s.cliques()) CHECK(is_clique(g, c.vertices()));
    }
}

TEST_CASE("final pass composes both repairs under a deadline") {
    Rng rng(1010);
    SUBCASE("expired deadline leaves the population ranked but unchanged") {
        Graph g = random_graph(rng, 12, 0.4, 5);
        std::vector<Solution> pop;
        for (int i = 0; i < 4; ++i) pop.push_back(random_solution(g, 2, rng));
        std::vector<Solution> before = pop;
        post_processing(pop, Deadline::after(0.0));
        std::stable_sort(before.begin(), before.end(), [](const Solution& a, const Solution& b) {
            return a.covered_weight() > b.covered_weight();
        });
        REQUIRE(pop.size() == before.size());
        for (std::size_t i = 0; i < pop.size(); ++i)
            CHECK(pop[i].cliques() == before[i].cliques());
    }
    SUBCASE("ample budget processes everyone, never worsening") {
        for (int rep = 0; rep < 50; ++rep) {
            Graph g = random_graph(rng, 4 + static_cast<Vertex>(rng.below(10)), 0.4, 5);
            std::vector<Solution> pop;
            for (int i = 0; i < 5; ++i)
                pop.push_back(random_solution(g, 1 + static_cast<int>(rng.below(3)), rng));
            std::vector<Weight> before;
            for (const Solution& s : pop) before.push_back(s.covered_weight());
            std::stable_sort(before.begin(), before.end(), std::greater<>());
            post_processing(pop, Deadline::never());
            for (std::size_t i = 0; i < pop.size(); ++i) {
                CHECK(pop[i].covered_weight() >= before[i]);
                CHECK(pop[i].check_consistent());
            }
        }
    }
}
