#pragma once

#include <optional>
#include <vector>

#include "orientkit/graph.hpp"

namespace orientkit {

/// Partition of a graph into two cliques X and Y whose cross-neighborhoods
/// are linearly nested: along x_order, N(x_i) ∩ Y grows monotonically under
/// inclusion, and likewise along y_order.
struct CoChainPartition {
    VertexSet x_order;
    VertexSet y_order;
};

/// True-twin classes (equal closed neighborhoods) with one kept representative
/// per class, the minimum vertex. `class_of[v]` indexes into `classes`.
struct TwinReduction {
    VertexSet kept;
    std::vector<VertexSet> classes;
    std::vector<int> class_of;

    int representative(int v) const { return classes[class_of[v]].front(); }
};

/// Which member of the connected true-twin-free co-chain family a graph is.
/// For IsRaft, `order` >= 1; for IsRaftJoinK1, `order` >= 0. `iso` maps the
/// canonical construction's vertex k to the input vertex it corresponds to.
struct CoChainTTFClass {
    enum Kind { IsK1, IsRaft, IsRaftJoinK1, NotCoChainTTF };
    Kind kind = NotCoChainTTF;
    int order = -1;
    std::vector<int> iso;
};

VertexSet simplicial_vertices(const Graph& g);
TwinReduction true_twin_reduction(const Graph& g);

std::optional<CoChainPartition> co_chain_partition(const Graph& g);
bool verify_co_chain_partition(const Graph& g, const CoChainPartition& p);
bool is_co_chain_via_forbidden(const Graph& g);

/// Precondition: g connected and true-twin-free (throws otherwise).
CoChainTTFClass classify_ttf_co_chain(const Graph& g);

/// Two (n+1)-cliques {x_0..x_n} on labels 0..n and {y_0..y_n} on labels
/// n+1..2n+1, with x_i adjacent to y_j iff i + j >= n + 1.
Graph raft(int n);

bool is_pseudoforest(const Graph& g);
bool is_pseudotree(const Graph& g);
bool is_k_linear_forest(const Graph& g, int k);
bool components_all_complete(const Graph& g);
bool components_all_2_complete(const Graph& g);
bool components_all_co_chain(const Graph& g);
bool is_cograph(const Graph& g);

}  // namespace orientkit
