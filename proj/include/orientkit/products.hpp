#pragma once

#include <string>
#include <utility>

#include "orientkit/graph.hpp"

namespace orientkit {

enum class ProductKind { Cartesian, Lexicographic, Direct, Strong };

std::string to_string(ProductKind kind);

/// Row-major pairing of factor vertices: (u, v) <-> u * h_n + v. All four
/// products use this labeling so fixtures and witnesses are stable.
struct PairIndex {
    int g_n;
    int h_n;
    int id(int u, int v) const { return u * h_n + v; }
    std::pair<int, int> pair_of(int id) const { return {id / h_n, id % h_n}; }
};

Graph cartesian(const Graph& g, const Graph& h);
Graph lexicographic(const Graph& g, const Graph& h);
Graph direct(const Graph& g, const Graph& h);
Graph strong(const Graph& g, const Graph& h);
Graph product(ProductKind kind, const Graph& g, const Graph& h);

/// Replaces vertex v of g by a copy of h joined to N_g(v). The remaining
/// vertices of g keep their relative order; h's copy is appended after them.
Graph substitution(const Graph& g, int v, const Graph& h);

}  // namespace orientkit
