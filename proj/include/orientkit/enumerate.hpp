#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "orientkit/graph.hpp"

namespace orientkit {

/// Edge masks use slot order (0,1),(0,2),...,(0,n-1),(1,2),...: pairs (u,v)
/// with u < v sorted lexicographically. Limited to n <= 11 (55 slots).
std::uint64_t mask_of(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

/// Label-invariant canonical form: the minimum edge mask over all relabelings
/// compatible with iterated degree refinement.
std::uint64_t canonical_form(const Graph& g);

/// One representative per isomorphism class on exactly n vertices, built by
/// vertex augmentation with canonical deduplication. Cached; warm the cache
/// before using from several threads.
const std::vector<Graph>& canonical_graphs(int n);
std::vector<Graph> canonical_connected_graphs(int n);

std::vector<Graph> all_labeled_graphs(int n);

/// All labeled trees on n vertices via Pruefer sequences.
std::vector<Graph> labeled_trees(int n);

/// Maximum-cardinality-search chordality test.
bool is_chordal(const Graph& g);

/// All chordal graphs on exactly n vertices up to isomorphism, generated by
/// simplicial vertex additions. Cached like canonical_graphs.
const std::vector<Graph>& canonical_chordal_graphs(int n);

/// Every subset of g's vertices inducing a clique, the empty set included.
std::vector<VertexSet> all_cliques(const Graph& g);

/// Calls fn for every labeled pseudoforest on exactly n vertices (edge subsets
/// of size at most n, filtered by the per-component cycle bound).
void for_each_labeled_pseudoforest(int n, const std::function<void(const Graph&)>& fn);

Graph random_graph(int n, double p, std::mt19937& rng);

}  // namespace orientkit
