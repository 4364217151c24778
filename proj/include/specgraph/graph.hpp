// graph.hpp — undirected simple graph over vertex indices 0..n-1.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specgraph {

using Edge = std::pair<int, int>;

/// Undirected simple graph: vertex count plus a symmetric irreflexive
/// adjacency relation, stored as bitset rows. Values are cheap to copy and
/// meant to be treated as immutable once built; all free functions below are
/// pure.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_(n > 0 ? (n + 63) / 64 : 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    }

    static Graph from_edges(int n, std::span<const Edge> edges) {
        Graph g(n);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops not allowed");
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return;
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    }

    int degree(int v) const;
    int edge_count() const;

    std::vector<Edge> edges() const;

    /// Bitset row of vertex v (words_per_row() words, low bit = vertex 0).
    const std::uint64_t* row(int v) const {
        check_vertex(v);
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    int words_per_row() const { return words_; }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Witness that a graph is semi-regular bipartite: the two sides of a
/// bipartition together with the uniform degree on each side.
struct BipartitionWitness {
    std::vector<int> side_x;
    std::vector<int> side_y;
    int deg_x = 0;
    int deg_y = 0;
};

// Standard constructions.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int n);

// Complement, join, and disjoint union (second operand's indices shifted by
// g1.order()).
Graph complement(const Graph& g);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Subgraph induced on the given vertices; vertex i of the result is
/// vertices[i] of g.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

int min_degree(const Graph& g);   // n >= 1
bool is_connected(const Graph& g);   // n >= 1
int component_count(const Graph& g);
std::vector<int> component_labels(const Graph& g);

/// Common degree if every vertex has the same degree (n >= 1), else nullopt.
std::optional<int> is_regular(const Graph& g);

/// Witness iff the graph is bipartite with a globally consistent bipartition
/// in which each side has uniform degree. Requires minimum degree >= 1
/// (isolated vertices make side-degree uniformity ill-posed). The side
/// containing vertex 0 is reported as X.
std::optional<BipartitionWitness> is_semiregular_bipartite(const Graph& g);

}  // namespace specgraph
