#pragma once

#include <optional>
#include <vector>

#include "orientkit/graph.hpp"

namespace orientkit {

/// Certificate that `pattern` is an induced minor of a host graph: one branch
/// set per pattern vertex, pairwise disjoint, each inducing a connected
/// subgraph, with an edge between two branch sets iff the pattern has one.
/// `deleted` holds the host vertices outside every branch set.
struct MinorWitness {
    std::vector<VertexSet> branch_sets;
    VertexSet deleted;
};

bool verify_minor_witness(const Graph& host, const Graph& pattern, const MinorWitness& w);

/// Exponential search for an induced-minor model; intended for patterns of at
/// most ~6 vertices in hosts of a few dozen. With a non-negative node budget
/// the search may give up (nullopt) without proving absence.
std::optional<MinorWitness> find_induced_minor(const Graph& host, const Graph& pattern,
                                               long long node_budget = -1);

}  // namespace orientkit
