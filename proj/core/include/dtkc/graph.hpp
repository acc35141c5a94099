#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtkc/rng.hpp"

namespace dtkc {

using Vertex = std::int32_t;
using Weight = std::int64_t;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WeightScheme { Unit, Mod200 };

Weight scheme_weight(WeightScheme scheme, Vertex index);

// Vertex-weighted undirected graph. Immutable once constructed: adjacency is
// stored as sorted CSR neighbor lists, with per-vertex bit rows added for
// dense instances so adjacency tests are O(1) there.
class Graph {
public:
    static constexpr double kDefaultDenseThreshold = 0.05;

    Graph() = default;

    // Edges may contain duplicates (collapsed) but not self-loops or ids
    // outside [0, n).
    Graph(Vertex n, EdgeList edges, std::string name = "",
          double dense_threshold = kDefaultDenseThreshold);

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + adj_start_[static_cast<std::size_t>(v)],
                adj_.data() + adj_start_[static_cast<std::size_t>(v) + 1]};
    }

    Vertex degree(Vertex v) const {
        return static_cast<Vertex>(adj_start_[static_cast<std::size_t>(v) + 1] -
                                   adj_start_[static_cast<std::size_t>(v)]);
    }

    bool adjacent(Vertex u, Vertex v) const;

    Weight weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
    Weight total_weight() const { return total_weight_; }

    double density() const;
    bool has_bit_rows() const { return !bit_rows_.empty(); }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Returns a copy with the given per-vertex weights; structure unchanged.
    Graph with_weights(std::vector<Weight> weights) const;

    EdgeList edges() const;

private:
    Vertex n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<Vertex> adj_;
    std::vector<std::size_t> adj_start_{0};
    std::vector<Weight> weights_;
    Weight total_weight_ = 0;
    std::vector<std::uint64_t> bit_rows_;
    std::size_t row_words_ = 0;
    std::string name_;
};

Graph assign_weights(const Graph& g, WeightScheme scheme);

// DIMACS ascii clique format: `c` comments, one `p edge <n> <m>` line, then
// `e <u> <v>` lines with 1-based ids. Errors carry the offending line number.
Graph parse_dimacs(std::istream& in, std::string name = "");
Graph parse_dimacs(const std::string& text, std::string name = "");
void write_dimacs(const Graph& g, std::ostream& out);
std::string write_dimacs(const Graph& g);

// Whitespace-separated `u v` pairs; 0- or 1-based ids auto-detected from the
// minimum id seen. Lines starting with '#' or '%' are skipped.
Graph parse_edge_list(std::istream& in, std::string name = "");
Graph parse_edge_list(const std::string& text, std::string name = "");

// G(n, p): every unordered pair is an edge independently with probability p.
Graph gen_er(Vertex n, double p, std::uint64_t seed);

// Preferential attachment from an m-vertex seed clique; every later vertex
// attaches to m distinct existing vertices with probability proportional to
// degree, so |E| = m(m-1)/2 + m(n-m) exactly.
Graph gen_ba(Vertex n, Vertex m, std::uint64_t seed);

} // namespace dtkc
