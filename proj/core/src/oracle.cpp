#include "dtkc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace dtkc {

namespace {

// Bron-Kerbosch with pivoting. r is the growing clique, p the candidates,
// x the excluded set; p and x stay sorted ascending.
void expand(const Graph& g, std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x,
            std::vector<Clique>& out) {
    if (p.empty() && x.empty()) {
        out.emplace_back(r);
        return;
    }
    // Pivot: vertex of p u x with the most neighbors in p, ties to lowest id.
    Vertex pivot = -1;
    std::size_t best = 0;
    bool have_pivot = false;
    for (const auto* side : {&p, &x}) {
        for (Vertex u : *side) {
            std::size_t cnt = 0;
            for (Vertex v : p)
                if (g.adjacent(u, v)) ++cnt;
            if (!have_pivot || cnt > best) {
                have_pivot = true;
                best = cnt;
                pivot = u;
            }
        }
    }
    std::vector<Vertex> branch;
    for (Vertex v : p)
        if (!g.adjacent(pivot, v)) branch.push_back(v);
    for (Vertex v : branch) {
        std::vector<Vertex> np, nx;
        for (Vertex u : p)
            if (g.adjacent(v, u)) np.push_back(u);
        for (Vertex u : x)
            if (g.adjacent(v, u)) nx.push_back(u);
        r.push_back(v);
        expand(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

} // namespace

std::vector<Clique> enumerate_maximal_cliques(const Graph& g) {
    std::vector<Clique> out;
    if (g.vertex_count() == 0) return out;
    std::vector<Vertex> r, p(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) p[static_cast<std::size_t>(v)] = v;
    expand(g, r, std::move(p), {}, out);
    std::sort(out.begin(), out.end(),
              [](const Clique& a, const Clique& b) { return a.vertices() < b.vertices(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct ExactSearch {
    const Graph* g;
    const std::vector<Clique>* cliques;
    std::size_t words;
    std::vector<std::uint64_t> masks;        // per clique, vertex bitset
    std::vector<std::uint64_t> suffix_union; // union of masks[i..m)
    int k;
    Weight best_w = 0;
    std::vector<int> chosen, best_chosen;

    std::uint64_t* mask(std::size_t i) { return masks.data() + i * words; }
    const std::uint64_t* suffix(std::size_t i) { return suffix_union.data() + i * words; }

    Weight uncovered_weight(const std::uint64_t* m, const std::vector<std::uint64_t>& cur) {
        Weight w = 0;
        for (std::size_t wd = 0; wd < words; ++wd) {
            std::uint64_t bits = m[wd] & ~cur[wd];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                w += g->weight(static_cast<Vertex>(wd * 64 + static_cast<std::size_t>(b)));
            }
        }
        return w;
    }

    void dfs(std::size_t i, std::vector<std::uint64_t>& cur, Weight cur_w) {
        if (cur_w > best_w) {
            best_w = cur_w;
            best_chosen = chosen;
        }
        const std::size_t m = cliques->size();
        if (static_cast<int>(chosen.size()) == k || i == m) return;
        if (cur_w + uncovered_weight(suffix(i), cur) <= best_w) return;
        for (std::size_t j = i; j < m; ++j) {
            const Weight gain = uncovered_weight(mask(j), cur);
            std::vector<std::uint64_t> next = cur;
            for (std::size_t wd = 0; wd < words; ++wd) next[wd] |= mask(j)[wd];
            chosen.push_back(static_cast<int>(j));
            dfs(j + 1, next, cur_w + gain);
            chosen.pop_back();
        }
    }
};

} // namespace

ExactResult exact_solve(const Graph& g, int k, std::size_t max_maximal_cliques) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<Clique> cliques = enumerate_maximal_cliques(g);
    if (cliques.size() > max_maximal_cliques)
        throw std::runtime_error("instance exceeds the maximal-clique cap for exact solving");

    ExactSearch search;
    search.g = &g;
    search.cliques = &cliques;
    search.k = k;
    search.words = (static_cast<std::size_t>(g.vertex_count()) + 63) / 64;
    const std::size_t m = cliques.size();
    search.masks.assign(m * search.words, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (Vertex v : cliques[i])
            search.mask(i)[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    search.suffix_union.assign((m + 1) * search.words, 0);
    for (std::size_t i = m; i-- > 0;)
        for (std::size_t wd = 0; wd < search.words; ++wd)
            search.suffix_union[i * search.words + wd] =
                search.suffix_union[(i + 1) * search.words + wd] | search.mask(i)[wd];

    std::vector<std::uint64_t> cur(search.words, 0);
    if (k > 0 && m > 0) search.dfs(0, cur, 0);

    ExactResult result{search.best_w, Solution(g)};
    for (int idx : search.best_chosen) result.witness.add(cliques[static_cast<std::size_t>(idx)]);
    return result;
}

} // namespace dtkc
