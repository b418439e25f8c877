#include "orientkit/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "orientkit/subgraph.hpp"

namespace orientkit {

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (is_clique(g, g.neighbors(v))) out.push_back(v);
    return out;
}

TwinReduction true_twin_reduction(const Graph& g) {
    TwinReduction red;
    red.class_of.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (red.class_of[v] >= 0) continue;
        int id = static_cast<int>(red.classes.size());
        VertexSet cls{v};
        red.class_of[v] = id;
        Bits nv = g.closed_neighborhood(v);
        for (int w = v + 1; w < g.n(); ++w)
            if (red.class_of[w] < 0 && g.closed_neighborhood(w) == nv) {
                red.class_of[w] = id;
                cls.push_back(w);
            }
        red.kept.push_back(v);
        red.classes.push_back(std::move(cls));
    }
    return red;
}

namespace {

Bits cross_neighborhood(const Graph& g, int v, const Bits& other) { return g.neighbors(v) & other; }

std::vector<int> sort_by_cross_degree(const Graph& g, const VertexSet& side, const Bits& other) {
    std::vector<int> out = side;
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
        int da = cross_neighborhood(g, a, other).count();
        int db = cross_neighborhood(g, b, other).count();
        return da != db ? da < db : a < b;
    });
    return out;
}

bool nested_along(const Graph& g, const std::vector<int>& order, const Bits& other) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (!cross_neighborhood(g, order[i], other).subset_of(cross_neighborhood(g, order[i + 1], other)))
            return false;
    return true;
}

}  // namespace

bool verify_co_chain_partition(const Graph& g, const CoChainPartition& p) {
    if (static_cast<int>(p.x_order.size() + p.y_order.size()) != g.n()) return false;
    Bits x = Bits::of(g.n(), p.x_order);
    Bits y = Bits::of(g.n(), p.y_order);
    if ((x & y).any() || (x | y).count() != g.n()) return false;
    if (!is_clique(g, x) || !is_clique(g, y)) return false;
    return nested_along(g, p.x_order, y) && nested_along(g, p.y_order, x);
}

// Two cliques in g are two independent sets in the complement. If the
// complement is bipartite and 2K2-free, every proper 2-coloring already has
// nested cross-neighborhoods (a nesting failure between two same-side
// vertices exhibits an induced 2K2, i.e. an induced C4 of g). So one
// deterministic coloring decides: a nesting failure means g is not co-chain.
std::optional<CoChainPartition> co_chain_partition(const Graph& g) {
    auto sides = bipartition(complement(g));
    if (!sides) return std::nullopt;
    CoChainPartition p;
    Bits x = Bits::of(g.n(), sides->first);
    Bits y = Bits::of(g.n(), sides->second);
    p.x_order = sort_by_cross_degree(g, sides->first, y);
    p.y_order = sort_by_cross_degree(g, sides->second, x);
    if (!nested_along(g, p.x_order, y) || !nested_along(g, p.y_order, x)) return std::nullopt;
    return p;
}

bool is_co_chain_via_forbidden(const Graph& g) {
    const Graph three_k1(3);
    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    return !find_induced_subgraph(g, three_k1) && !find_induced_subgraph(g, c4) &&
           !find_induced_subgraph(g, c5);
}

Graph raft(int n) {
    if (n < 0) throw std::invalid_argument("raft order must be non-negative");
    Graph g(2 * (n + 1));
    auto y = [&](int j) { return n + 1 + j; };
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            g.add_edge(i, j);
            g.add_edge(y(i), y(j));
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i + j >= n + 1) g.add_edge(i, y(j));
    return g;
}

namespace {

bool adjacency_matches(const Graph& canonical, const Graph& g, const std::vector<int>& iso) {
    if (canonical.n() != g.n()) return false;
    for (int a = 0; a < canonical.n(); ++a)
        for (int b = a + 1; b < canonical.n(); ++b)
            if (canonical.adjacent(a, b) != g.adjacent(iso[a], iso[b])) return false;
    return true;
}

}  // namespace

CoChainTTFClass classify_ttf_co_chain(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("classify_ttf_co_chain: graph must be connected");
    if (static_cast<int>(true_twin_reduction(g).kept.size()) != g.n())
        throw std::invalid_argument("classify_ttf_co_chain: graph must be true-twin-free");

    auto part = co_chain_partition(g);
    if (!part) return {};

    const auto& xs = part->x_order;
    const auto& ys = part->y_order;
    if (xs.empty() || ys.empty()) {
        if (g.n() != 1) throw std::logic_error("one-sided true-twin-free co-chain graph larger than K1");
        return {CoChainTTFClass::IsK1, -1, {0}};
    }

    Bits x = Bits::of(g.n(), xs);
    Bits y = Bits::of(g.n(), ys);
    bool x_bottom_empty = cross_neighborhood(g, xs.front(), y).none();
    bool y_bottom_empty = cross_neighborhood(g, ys.front(), x).none();

    CoChainTTFClass result;
    if (x_bottom_empty && y_bottom_empty) {
        result.kind = CoChainTTFClass::IsRaft;
        result.order = static_cast<int>(xs.size()) - 1;
        result.iso.insert(result.iso.end(), xs.begin(), xs.end());
        result.iso.insert(result.iso.end(), ys.begin(), ys.end());
        if (xs.size() != ys.size() || result.order < 1 ||
            !adjacency_matches(raft(result.order), g, result.iso))
            throw std::logic_error("raft classification failed to verify");
        return result;
    }
    if (x_bottom_empty != y_bottom_empty) {
        // the side with a non-isolated bottom contributes the universal apex
        const auto& apex_side = x_bottom_empty ? xs : ys;
        const auto& raft_side = x_bottom_empty ? ys : xs;
        result.kind = CoChainTTFClass::IsRaftJoinK1;
        result.order = static_cast<int>(apex_side.size()) - 2;
        result.iso.assign(apex_side.begin(), apex_side.end() - 1);
        result.iso.insert(result.iso.end(), raft_side.begin(), raft_side.end());
        result.iso.push_back(apex_side.back());
        Graph canonical = join(raft(result.order), Graph(1));
        if (result.order < 0 || raft_side.size() != apex_side.size() - 1 ||
            !adjacency_matches(canonical, g, result.iso))
            throw std::logic_error("raft-join classification failed to verify");
        return result;
    }
    // both bottoms non-empty would make both tops universal, hence true twins
    throw std::logic_error("co-chain case analysis reached an impossible branch");
}

namespace {

int edges_within(const Graph& g, const VertexSet& comp) {
    int deg_sum = 0;
    for (int v : comp) deg_sum += g.degree(v);
    return deg_sum / 2;  // components have no outgoing edges
}

}  // namespace

bool is_pseudoforest(const Graph& g) {
    for (const VertexSet& comp : components(g))
        if (edges_within(g, comp) > static_cast<int>(comp.size())) return false;
    return true;
}

bool is_pseudotree(const Graph& g) { return is_connected(g) && is_pseudoforest(g); }

bool is_k_linear_forest(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    for (const VertexSet& comp : components(g)) {
        if (static_cast<int>(comp.size()) > k) return false;
        int max_deg = 0;
        for (int v : comp) max_deg = std::max(max_deg, g.degree(v));
        if (max_deg > 2) return false;
        if (edges_within(g, comp) != static_cast<int>(comp.size()) - 1) return false;
    }
    return true;
}

bool components_all_complete(const Graph& g) {
    for (const VertexSet& comp : components(g)) {
        int sz = static_cast<int>(comp.size());
        if (edges_within(g, comp) != sz * (sz - 1) / 2) return false;
    }
    return true;
}

bool components_all_2_complete(const Graph& g) {
    // 2-complete graphs are exactly those whose true-twin reduction is K1 or P3
    for (const VertexSet& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        Graph reduced = induced_subgraph(sub, true_twin_reduction(sub).kept);
        bool k1 = reduced.n() == 1;
        bool p3 = reduced.n() == 3 && reduced.m() == 2;
        if (!k1 && !p3) return false;
    }
    return true;
}

bool components_all_co_chain(const Graph& g) {
    for (const VertexSet& comp : components(g))
        if (!co_chain_partition(induced_subgraph(g, comp))) return false;
    return true;
}

bool is_cograph(const Graph& g) {
    const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    return !find_induced_subgraph(g, p4);
}

}  // namespace orientkit
