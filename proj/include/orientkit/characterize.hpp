#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orientkit/graph.hpp"
#include "orientkit/minor.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/products.hpp"
#include "orientkit/subgraph.hpp"

namespace orientkit {

enum class DecideKind { Cartesian, Lexicographic, Direct, Strong, Join };

std::string to_string(DecideKind kind);

/// Forbidden-structure evidence attached to a negative verdict: either an
/// induced embedding of the named pattern or an induced-minor model of it.
struct Witness {
    std::string pattern;
    std::optional<Embedding> embedding;
    std::optional<MinorWitness> minor;
};

/// Decision record produced by the theorem deciders. On a positive answer the
/// condition labels the matched theorem clause (e.g. "Thm-Cartesian (ii)",
/// with ", swapped" when it matched with the factors exchanged) and the
/// certificate is a 1-perfect orientation of the product. On a negative
/// answer the condition is "none" and a witness may be attached.
struct Verdict {
    DecideKind kind;
    bool is_1po = false;
    std::string condition;
    std::optional<Orientation> certificate;
    std::optional<Witness> witness;
};

struct DecideOptions {
    bool want_witness = true;
    long long witness_budget = 2'000'000;
};

Verdict decide_cartesian(const Graph& g, const Graph& h, const DecideOptions& opts = {});
Verdict decide_lexicographic(const Graph& g, const Graph& h, const DecideOptions& opts = {});
Verdict decide_direct(const Graph& g, const Graph& h, const DecideOptions& opts = {});
Verdict decide_strong(const Graph& g, const Graph& h, const DecideOptions& opts = {});
Verdict decide_join(const Graph& g, const Graph& h, const DecideOptions& opts = {});
Verdict decide(DecideKind kind, const Graph& g, const Graph& h, const DecideOptions& opts = {});

/// Named decomposition of strong(P3, raft(n)) minus its four simplicial
/// vertices: apexes a, b and six cliques of n vertices each, each listed in
/// the order of strictly growing closed neighborhoods. Vertex ids are product
/// ids under the row-major pairing with the path as first factor.
struct P3RaftLayout {
    int n;
    int a;
    int b;
    std::vector<int> A1, A2, A3, B1, B2, B3;
    std::array<int, 4> simplicial;
};

P3RaftLayout make_p3_raft_layout(int n);

/// Explicit 1-perfect orientation of the full product strong(P3, raft(n)),
/// n >= 1: the core is oriented by the fixed rule table over the layout parts
/// and the four simplicial vertices are re-attached afterwards.
Orientation orient_p3_strong_raft(int n);

/// The identifiable small non-1-perfectly-orientable fixtures, each verified
/// against the brute-force oracle once per process.
const std::vector<std::pair<std::string, Graph>>& forbidden_catalog();

/// Searches the catalog for a forbidden structure inside `host`; embeddings
/// are preferred over minor models.
std::optional<Witness> find_forbidden_witness(const Graph& host, long long budget);

}  // namespace orientkit
