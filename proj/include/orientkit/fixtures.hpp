#pragma once

#include <optional>
#include <string>

#include "orientkit/graph.hpp"

namespace orientkit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph complete_bipartite(int a, int b);
Graph claw();
Graph bull();
Graph domino();
Graph gem();

/// Resolves built-in fixture names like "@P4", "@claw", "@raft:3",
/// "@cycle:5". Returns nullopt for unknown names.
std::optional<Graph> fixture_by_name(const std::string& name);

}  // namespace orientkit
