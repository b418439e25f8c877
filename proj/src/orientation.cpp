#include "orientkit/orientation.hpp"

#include <algorithm>
#include <sstream>

#include "orientkit/structure.hpp"

namespace orientkit {

bool is_one_perfect(const Orientation& d) {
    if (!d.is_fully_oriented()) throw std::invalid_argument("is_one_perfect: orientation is incomplete");
    const Graph& g = d.base();
    for (int v = 0; v < g.n(); ++v) {
        const Bits& out = d.out_neighbors(v);
        for (int w = out.first(); w >= 0; w = out.next(w)) {
            Bits rest = out;
            rest.reset(w);
            if (!rest.subset_of(g.neighbors(w))) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 2-SAT recognizer

namespace {

// Iterative Tarjan. Component ids are assigned in completion order, so a
// component reachable from another always has the smaller id.
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj, int& count) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    count = 0;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] >= 0) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = count;
                        if (w == f.v) break;
                    }
                    ++count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

RecognitionResult recognize_2sat(const Graph& g) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());

    // literal nodes: 2e = "edge e directed small->large", 2e+1 = the reverse
    auto node = [](int var, bool value) { return 2 * var + (value ? 0 : 1); };
    std::vector<std::vector<int>> implies(2 * m);

    std::vector<std::vector<int>> incident(g.n());
    for (int e = 0; e < m; ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    for (int u = 0; u < g.n(); ++u) {
        const auto& inc = incident[u];
        for (std::size_t i = 0; i < inc.size(); ++i) {
            int e1 = inc[i];
            int v = edges[e1].first == u ? edges[e1].second : edges[e1].first;
            bool out1 = edges[e1].first == u;  // variable value meaning "e1 points out of u"
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                int e2 = inc[j];
                int w = edges[e2].first == u ? edges[e2].second : edges[e2].first;
                if (g.adjacent(v, w)) continue;
                bool out2 = edges[e2].first == u;
                // clause: not both e1 and e2 point out of u
                implies[node(e1, out1)].push_back(node(e2, !out2));
                implies[node(e2, out2)].push_back(node(e1, !out1));
            }
        }
    }

    int comp_count = 0;
    std::vector<int> comp = strongly_connected_components(implies, comp_count);

    for (int e = 0; e < m; ++e) {
        if (comp[node(e, true)] != comp[node(e, false)]) continue;
        UnsatCore core;
        core.reason = "an edge-direction variable and its negation share an implication-graph "
                      "strongly connected component";
        int target = comp[node(e, true)];
        std::vector<char> seen(m, 0);
        for (int e2 = 0; e2 < m; ++e2)
            for (bool value : {true, false})
                if (comp[node(e2, value)] == target && !seen[e2]) {
                    seen[e2] = 1;
                    core.edges.push_back(edges[e2]);
                }
        return RecognitionResult::no(std::move(core));
    }

    Orientation d(g);
    for (int e = 0; e < m; ++e) {
        // a lower component id lies later in topological order; pick that side
        bool forward = comp[node(e, true)] < comp[node(e, false)];
        d.orient(forward ? edges[e].first : edges[e].second,
                 forward ? edges[e].second : edges[e].first);
    }
    if (!is_one_perfect(d)) throw std::logic_error("2-SAT certificate failed verification");
    return RecognitionResult::yes(std::move(d));
}

// ---------------------------------------------------------------------------
// brute-force oracle

namespace {

// Assigns directions from the highest edge index down, 0 before 1, which
// visits direction bit vectors in increasing numeric order; a branch is cut
// as soon as some vertex's partial out-set stops being a clique.
struct BruteSearch {
    const Graph& g;
    const std::vector<std::pair<int, int>>& edges;
    std::vector<Bits> out;
    std::vector<int> dir;

    bool assign(int e) {
        if (e < 0) return true;
        auto [u, v] = edges[e];
        for (int bit = 0; bit <= 1; ++bit) {
            int tail = bit == 0 ? u : v;
            int head = bit == 0 ? v : u;
            if (out[tail].subset_of(g.neighbors(head))) {
                out[tail].set(head);
                dir[e] = bit;
                if (assign(e - 1)) return true;
                out[tail].reset(head);
            }
        }
        return false;
    }
};

}  // namespace

RecognitionResult recognize_bruteforce(const Graph& g) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > 24)
        throw std::invalid_argument("recognize_bruteforce: refusing graphs with more than 24 edges");

    BruteSearch search{g, edges, std::vector<Bits>(g.n(), Bits(g.n())), std::vector<int>(m, -1)};
    if (!search.assign(m - 1))
        return RecognitionResult::no(
            {"exhaustive enumeration of all 2^" + std::to_string(m) + " orientations found none", {}});

    Orientation d(g);
    for (int e = 0; e < m; ++e)
        d.orient(search.dir[e] == 0 ? edges[e].first : edges[e].second,
                 search.dir[e] == 0 ? edges[e].second : edges[e].first);
    if (!is_one_perfect(d)) throw std::logic_error("brute-force certificate failed verification");
    return RecognitionResult::yes(std::move(d));
}

// ---------------------------------------------------------------------------
// pseudoforest orientation

Orientation orient_pseudoforest(const Graph& g) {
    if (!is_pseudoforest(g)) throw std::invalid_argument("orient_pseudoforest: not a pseudoforest");
    Orientation d(g);
    for (const VertexSet& comp : components(g)) {
        int edge_count = 0;
        for (int v : comp) edge_count += g.degree(v);
        edge_count /= 2;

        std::vector<int> roots;
        if (edge_count == static_cast<int>(comp.size())) {
            // unicyclic: the cycle is what survives repeated leaf peeling
            std::vector<int> deg(g.n(), 0);
            std::vector<int> peel;
            for (int v : comp) deg[v] = g.degree(v);
            for (int v : comp)
                if (deg[v] == 1) peel.push_back(v);
            Bits removed(g.n());
            while (!peel.empty()) {
                int v = peel.back();
                peel.pop_back();
                removed.set(v);
                g.neighbors(v).for_each([&](int w) {
                    if (!removed.test(w) && --deg[w] == 1) peel.push_back(w);
                });
            }
            std::vector<int> cycle;
            for (int v : comp)
                if (!removed.test(v)) cycle.push_back(v);
            // walk from the minimum cycle vertex toward its smaller cycle neighbor
            int start = cycle.front();
            Bits on_cycle = Bits::of(g.n(), cycle);
            int prev = start;
            int cur = (g.neighbors(start) & on_cycle).first();
            d.orient(start, cur);
            while (cur != start) {
                Bits next_cands = g.neighbors(cur) & on_cycle;
                next_cands.reset(prev);
                int next = next_cands.first();
                d.orient(cur, next);
                prev = cur;
                cur = next;
            }
            roots = cycle;
        } else {
            roots.push_back(comp.front());  // minimum vertex roots the tree
        }

        Bits settled = Bits::of(g.n(), roots);
        std::vector<int> queue = roots;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            g.neighbors(v).for_each([&](int w) {
                if (!settled.test(w)) {
                    settled.set(w);
                    d.orient(w, v);
                    queue.push_back(w);
                }
            });
        }
    }
    if (!is_one_perfect(d)) throw std::logic_error("pseudoforest orientation failed verification");
    return d;
}

// ---------------------------------------------------------------------------
// closure constructions

namespace {

void require_one_perfect(const Orientation& d, const char* who) {
    if (!is_one_perfect(d))
        throw std::invalid_argument(std::string(who) + ": input orientation is not 1-perfect");
}

void copy_arcs(const Orientation& from, Orientation& to) {
    for (auto [tail, head] : from.arcs()) to.orient(tail, head);
}

}  // namespace

Orientation extend_true_twin(const Orientation& d, int v) {
    require_one_perfect(d, "extend_true_twin");
    const Graph& g = d.base();
    g.check_vertex(v);
    Orientation ext(g.with_added_vertex(g.closed_neighborhood(v).to_vector()));
    int twin = g.n();
    copy_arcs(d, ext);
    // the twin copies v's edge directions and points at v itself
    g.neighbors(v).for_each([&](int w) {
        if (d.directed(v, w))
            ext.orient(twin, w);
        else
            ext.orient(w, twin);
    });
    ext.orient(twin, v);
    return ext;
}

Orientation extend_universal(const Orientation& d) {
    require_one_perfect(d, "extend_universal");
    const Graph& g = d.base();
    VertexSet all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    Orientation ext(g.with_added_vertex(all));
    int u = g.n();
    copy_arcs(d, ext);
    for (int w = 0; w < g.n(); ++w) ext.orient(w, u);
    return ext;
}

Orientation extend_simplicial(const Orientation& d, const VertexSet& clique) {
    require_one_perfect(d, "extend_simplicial");
    const Graph& g = d.base();
    if (!is_clique(g, Bits::of(g.n(), clique)))
        throw std::invalid_argument("extend_simplicial: attachment set is not a clique");
    Orientation ext(g.with_added_vertex(clique));
    int s = g.n();
    copy_arcs(d, ext);
    for (int w : clique) ext.orient(s, w);
    return ext;
}

Orientation relabel(const Orientation& d, const std::vector<int>& new_id_of_old) {
    const Graph& g = d.base();
    Graph relabeled(g.n());
    g.for_each_edge([&](int u, int v) { relabeled.add_edge(new_id_of_old[u], new_id_of_old[v]); });
    Orientation out(relabeled);
    for (auto [tail, head] : d.arcs()) out.orient(new_id_of_old[tail], new_id_of_old[head]);
    return out;
}

// ---------------------------------------------------------------------------
// text format

std::string to_orientation_text(const Orientation& d) {
    std::ostringstream out;
    out << to_edge_list(d.base());
    for (auto [tail, head] : d.arcs()) out << tail << " -> " << head << '\n';
    return out.str();
}

Orientation parse_orientation_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> graph_lines, arc_lines;
    while (std::getline(in, line)) {
        if (line.find("->") != std::string::npos)
            arc_lines.push_back(line);
        else
            graph_lines.push_back(line);
    }
    std::string graph_text;
    for (const auto& l : graph_lines) graph_text += l + '\n';
    Graph g = parse_edge_list(graph_text);
    Orientation d(g);
    int arcs = 0;
    for (const auto& l : arc_lines) {
        std::istringstream fields(l);
        int tail = 0, head = 0;
        std::string arrow;
        if (!(fields >> tail >> arrow >> head) || arrow != "->")
            throw ParseError("malformed arc line '" + l + "'", 0);
        d.orient(tail, head);
        ++arcs;
    }
    if (arcs != g.m()) throw ParseError("arc lines do not cover every edge", 0);
    return d;
}

}  // namespace orientkit
