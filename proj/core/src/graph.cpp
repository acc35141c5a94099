#include "dtkc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dtkc {

namespace {

// Bit rows cost n*n/8 bytes; never build them past this many vertices.
constexpr Vertex kMaxBitRowVertices = 32768;

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    std::ostringstream os;
    os << "line " << line_no << ": " << what;
    throw ParseError(os.str());
}

bool parse_int(const std::string& token, long long& out) {
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

Weight scheme_weight(WeightScheme scheme, Vertex index) {
    switch (scheme) {
    case WeightScheme::Unit: return 1;
    case WeightScheme::Mod200: return index % 200 + 1;
    }
    return 1;
}

Graph::Graph(Vertex n, EdgeList edges, std::string name, double dense_threshold)
    : n_(n), name_(std::move(name)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edge_count_ = edges.size();

    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    adj_start_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        adj_start_[static_cast<std::size_t>(v) + 1] =
            adj_start_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    adj_.resize(adj_start_.back());

    std::vector<std::size_t> cursor(adj_start_.begin(), adj_start_.end() - 1);
    for (const auto& [u, v] : edges) {
        adj_[cursor[static_cast<std::size_t>(u)]++] = v;
        adj_[cursor[static_cast<std::size_t>(v)]++] = u;
    }
    // Edges were sorted, so each neighbor list is already ascending except for
    // the interleaving of the two directions; restore order per vertex.
    for (Vertex v = 0; v < n; ++v) {
        auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(adj_start_[static_cast<std::size_t>(v)]);
        auto end = adj_.begin() + static_cast<std::ptrdiff_t>(adj_start_[static_cast<std::size_t>(v) + 1]);
        std::sort(begin, end);
    }

    weights_.assign(static_cast<std::size_t>(n), 1);
    total_weight_ = n;

    if (n >= 2 && n <= kMaxBitRowVertices && density() >= dense_threshold) {
        row_words_ = (static_cast<std::size_t>(n) + 63) / 64;
        bit_rows_.assign(row_words_ * static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : edges) {
            bit_rows_[static_cast<std::size_t>(u) * row_words_ + static_cast<std::size_t>(v) / 64] |=
                1ULL << (v % 64);
            bit_rows_[static_cast<std::size_t>(v) * row_words_ + static_cast<std::size_t>(u) / 64] |=
                1ULL << (u % 64);
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (!bit_rows_.empty())
        return (bit_rows_[static_cast<std::size_t>(u) * row_words_ + static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1ULL;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::density() const {
    if (n_ < 2) return 0.0;
    return 2.0 * static_cast<double>(edge_count_) /
           (static_cast<double>(n_) * (static_cast<double>(n_) - 1.0));
}

Graph Graph::with_weights(std::vector<Weight> weights) const {
    if (static_cast<Vertex>(weights.size()) != n_)
        throw std::invalid_argument("weight vector size mismatch");
    for (Weight w : weights)
        if (w < 1) throw std::invalid_argument("vertex weight must be >= 1");
    Graph g = *this;
    g.total_weight_ = std::accumulate(weights.begin(), weights.end(), Weight{0});
    g.weights_ = std::move(weights);
    return g;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph assign_weights(const Graph& g, WeightScheme scheme) {
    std::vector<Weight> weights(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        weights[static_cast<std::size_t>(v)] = scheme_weight(scheme, v);
    return g.with_weights(std::move(weights));
}

Graph parse_dimacs(std::istream& in, std::string name) {
    std::string line;
    std::size_t line_no = 0;
    bool have_problem = false;
    long long n = 0;
    EdgeList edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;
        if (head == "p") {
            if (have_problem) parse_fail(line_no, "duplicate problem line");
            std::string fmt, n_tok, m_tok;
            if (!(ls >> fmt >> n_tok >> m_tok))
                parse_fail(line_no, "malformed problem line, expected 'p edge <n> <m>'");
            long long m = 0;
            if (!parse_int(n_tok, n) || !parse_int(m_tok, m))
                parse_fail(line_no, "non-integer token in problem line");
            if (n < 0) parse_fail(line_no, "negative vertex count");
            have_problem = true;
        } else if (head == "e") {
            if (!have_problem) parse_fail(line_no, "edge line before problem line");
            std::string u_tok, v_tok;
            if (!(ls >> u_tok >> v_tok)) parse_fail(line_no, "malformed edge line");
            long long u = 0, v = 0;
            if (!parse_int(u_tok, u) || !parse_int(v_tok, v))
                parse_fail(line_no, "non-integer token in edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(line_no, "vertex id out of range [1, n]");
            if (u == v) parse_fail(line_no, "self-loop");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            parse_fail(line_no, "unrecognized line type '" + head + "'");
        }
    }
    if (!have_problem) parse_fail(line_no, "missing problem line");
    return Graph(static_cast<Vertex>(n), std::move(edges), std::move(name));
}

Graph parse_dimacs(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_dimacs(in, std::move(name));
}

void write_dimacs(const Graph& g, std::ostream& out) {
    EdgeList edges = g.edges();
    out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream os;
    write_dimacs(g, os);
    return os.str();
}

Graph parse_edge_list(std::istream& in, std::string name) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<long long, long long>> raw;
    long long min_id = std::numeric_limits<long long>::max();
    long long max_id = -1;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#' || tok[0] == '%') continue;
        std::string tok2;
        for (;;) {
            if (!(ls >> tok2)) parse_fail(line_no, "dangling vertex id, expected 'u v' pairs");
            long long u = 0, v = 0;
            if (!parse_int(tok, u) || !parse_int(tok2, v))
                parse_fail(line_no, "non-integer token");
            if (u < 0 || v < 0) parse_fail(line_no, "negative vertex id");
            if (u == v) parse_fail(line_no, "self-loop");
            raw.emplace_back(u, v);
            min_id = std::min({min_id, u, v});
            max_id = std::max({max_id, u, v});
            if (!(ls >> tok)) break;
        }
    }

    if (raw.empty()) return Graph(0, {}, std::move(name));
    long long base = min_id >= 1 ? 1 : 0;
    EdgeList edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw)
        edges.emplace_back(static_cast<Vertex>(u - base), static_cast<Vertex>(v - base));
    return Graph(static_cast<Vertex>(max_id - base + 1), std::move(edges), std::move(name));
}

Graph parse_edge_list(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_edge_list(in, std::move(name));
}

Graph gen_er(Vertex n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
    Rng rng(derive_seed(seed, 0x6572ULL)); // "er"
    EdgeList edges;
    if (p > 0.0) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
    std::ostringstream label;
    label << "er_n" << n << "_p" << p << "_s" << seed;
    return Graph(n, std::move(edges), label.str());
}

Graph gen_ba(Vertex n, Vertex m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("attachment count must satisfy 1 <= m < n");
    Rng rng(derive_seed(seed, 0x6261ULL)); // "ba"
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n - m) +
                  static_cast<std::size_t>(m) * (static_cast<std::size_t>(m) - 1) / 2);
    // Every edge contributes both endpoints; sampling an entry uniformly is
    // degree-proportional sampling.
    std::vector<Vertex> endpoints;

    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    std::vector<Vertex> picked;
    std::vector<char> is_picked(static_cast<std::size_t>(n), 0);
    for (Vertex w = m; w < n; ++w) {
        picked.clear();
        if (w == m || endpoints.empty()) {
            // All existing vertices must be taken (first attachment), or no
            // edges exist yet (m == 1): fall back to uniform choice.
            if (w <= m) {
                for (Vertex u = 0; u < w; ++u) picked.push_back(u);
            } else {
                while (static_cast<Vertex>(picked.size()) < m) {
                    Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(w)));
                    if (!is_picked[static_cast<std::size_t>(u)]) {
                        is_picked[static_cast<std::size_t>(u)] = 1;
                        picked.push_back(u);
                    }
                }
            }
        } else {
            while (static_cast<Vertex>(picked.size()) < m) {
                Vertex u = endpoints[rng.below(endpoints.size())];
                if (!is_picked[static_cast<std::size_t>(u)]) {
                    is_picked[static_cast<std::size_t>(u)] = 1;
                    picked.push_back(u);
                }
            }
        }
        for (Vertex u : picked) {
            is_picked[static_cast<std::size_t>(u)] = 0;
            edges.emplace_back(u, w);
            endpoints.push_back(u);
            endpoints.push_back(w);
        }
    }
    std::ostringstream label;
    label << "ba_n" << n << "_m" << m << "_s" << seed;
    return Graph(n, std::move(edges), label.str());
}

} // namespace dtkc
