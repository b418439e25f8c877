#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orientkit/graph.hpp"

namespace orientkit {

/// A graph together with one direction per edge.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(Graph base) : base_(std::move(base)), out_(base_.n(), Bits(base_.n())) {}

    const Graph& base() const { return base_; }

    /// Directs the existing edge {tail, head} as tail -> head (re-orienting is allowed).
    void orient(int tail, int head) {
        if (!base_.adjacent(tail, head))
            throw std::invalid_argument("orient: no edge " + std::to_string(tail) + "-" + std::to_string(head));
        out_[tail].set(head);
        out_[head].reset(tail);
    }

    bool directed(int tail, int head) const { return out_[tail].test(head); }
    const Bits& out_neighbors(int v) const { return out_[v]; }
    Bits in_neighbors(int v) const {
        Bits in = base_.neighbors(v);
        in.subtract(out_[v]);
        return in;
    }
    int out_degree(int v) const { return out_[v].count(); }

    bool is_fully_oriented() const {
        int arcs = 0;
        for (const Bits& b : out_) arcs += b.count();
        return arcs == base_.m();
    }

    /// Arcs as (tail, head), sorted by underlying edge (u < v order).
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(base_.m());
        base_.for_each_edge([&](int u, int v) {
            if (directed(u, v))
                out.emplace_back(u, v);
            else if (directed(v, u))
                out.emplace_back(v, u);
        });
        return out;
    }

    bool operator==(const Orientation&) const = default;

private:
    Graph base_;
    std::vector<Bits> out_;
};

/// True iff every out-neighborhood induces a clique in the base graph.
/// Requires a fully oriented input.
bool is_one_perfect(const Orientation& d);

/// Small certificate of infeasibility: a set of edges whose direction
/// variables form a contradictory strongly connected component (2-SAT route),
/// or a note that exhaustive search was completed (brute-force route).
struct UnsatCore {
    std::string reason;
    std::vector<std::pair<int, int>> edges;
};

struct RecognitionResult {
    bool is_1po = false;
    std::optional<Orientation> certificate;
    std::optional<UnsatCore> core;

    static RecognitionResult yes(Orientation d) { return {true, std::move(d), std::nullopt}; }
    static RecognitionResult no(UnsatCore c) { return {false, std::nullopt, std::move(c)}; }
};

/// Polynomial recognition. One boolean per edge {u,v} (true = directed from
/// the smaller to the larger endpoint); for every vertex u and every pair of
/// edges uv, uw with v, w non-adjacent, a clause forbids directing both out
/// of u. Solved by implication-graph strongly connected components.
RecognitionResult recognize_2sat(const Graph& g);

/// Independent oracle: tries all 2^m direction vectors in increasing numeric
/// order (bit i = direction of edge i, 0 = small-to-large) and returns the
/// first 1-perfect one. Refuses graphs with more than 24 edges.
RecognitionResult recognize_bruteforce(const Graph& g);

/// 1-perfect orientation of a pseudoforest with out-degree <= 1 everywhere:
/// cycles are oriented cyclically, tree edges toward the cycle or root (each
/// acyclic component is rooted at its minimum vertex).
Orientation orient_pseudoforest(const Graph& g);

/// Closure constructions. Each requires a 1-perfect input and produces a
/// 1-perfect orientation of the extended graph (new vertex gets id n).
Orientation extend_true_twin(const Orientation& d, int v);
Orientation extend_universal(const Orientation& d);
Orientation extend_simplicial(const Orientation& d, const VertexSet& clique);

/// New orientation with vertex v renamed to new_id_of_old[v].
Orientation relabel(const Orientation& d, const std::vector<int>& new_id_of_old);

/// Orientation text format: the base graph in edge-list format followed by
/// one line per edge, "u -> v".
std::string to_orientation_text(const Orientation& d);
Orientation parse_orientation_text(const std::string& text);

}  // namespace orientkit
