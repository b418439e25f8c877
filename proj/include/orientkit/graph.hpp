#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orientkit/bits.hpp"

namespace orientkit {

/// Sorted list of distinct vertex ids of some host graph.
using VertexSet = std::vector<int>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges;
/// isolated vertices are representable.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bits(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }
    int m() const { return m_; }

    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    const Bits& neighbors(int v) const { return adj_[v]; }
    Bits closed_neighborhood(int v) const {
        Bits b = adj_[v];
        b.set(v);
        return b;
    }
    int degree(int v) const { return adj_[v].count(); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    template <class F>
    void for_each_edge(F f) const {
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) f(u, v);
    }

    /// New graph with one extra vertex adjacent exactly to `nbrs`.
    Graph with_added_vertex(const VertexSet& nbrs) const {
        Graph g(n_ + 1);
        for_each_edge([&](int u, int v) { g.add_edge(u, v); });
        for (int w : nbrs) g.add_edge(w, n_);
        return g;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bits> adj_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, const VertexSet& s);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_clique(const Graph& g, const Bits& s);
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);
bool is_co_bipartite(const Graph& g);
std::optional<int> distance(const Graph& g, int u, int v);

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);
Graph parse_edge_list(const std::string& text, std::vector<std::string>* warnings = nullptr);
std::string to_edge_list(const Graph& g);

}  // namespace orientkit
