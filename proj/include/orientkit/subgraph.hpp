#pragma once

#include <optional>
#include <vector>

#include "orientkit/graph.hpp"

namespace orientkit {

/// Injective map from pattern vertices to host vertices that preserves both
/// adjacency and non-adjacency.
struct Embedding {
    std::vector<int> mapping;
};

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// Backtracking isomorphism test with degree/neighborhood refinement.
/// Intended for small graphs (everything in this codebase is <= a few dozen
/// vertices with near-discrete refinements).
bool is_isomorphic(const Graph& g, const Graph& h);

/// Finds an induced copy of `pattern` inside `host`, or nullopt.
/// A non-negative `node_budget` caps the number of search-tree nodes; when the
/// budget runs out the search gives up and reports nullopt.
std::optional<Embedding> find_induced_subgraph(const Graph& host, const Graph& pattern,
                                               long long node_budget = -1);

}  // namespace orientkit
