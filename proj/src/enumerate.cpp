#include "orientkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "orientkit/structure.hpp"

namespace orientkit {

namespace {

int slot_of(int n, int u, int v) {
    // pairs (u, v), u < v, lexicographic
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace

std::uint64_t mask_of(const Graph& g) {
    if (g.n() > 11) throw std::invalid_argument("edge masks support at most 11 vertices");
    std::uint64_t mask = 0;
    g.for_each_edge([&](int u, int v) { mask |= std::uint64_t{1} << slot_of(g.n(), u, v); });
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int slot = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++slot)
            if ((mask >> slot) & 1) g.add_edge(u, v);
    return g;
}

std::uint64_t canonical_form(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;

    // iterated degree refinement; colors are label-invariant by construction
    std::vector<int> color(n, 0);
    int color_count = 1;
    for (int round = 0; round <= n; ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        std::vector<Sig> sig(n);
        std::map<Sig, int> ids;
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            g.neighbors(v).for_each([&](int w) { nb.push_back(color[w]); });
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
            ids.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
        if (next == color_count) break;
        color_count = next;
    }

    // vertices sorted by color; labelings permute only within equal colors
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::sort(base.begin(), base.end(),
              [&](int a, int b) { return std::pair(color[a], a) < std::pair(color[b], b); });
    std::vector<std::pair<int, int>> blocks;  // [begin, end) in base
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[base[j]] == color[base[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    const auto edges = g.edges();
    std::vector<int> label(n);
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            std::uint64_t mask = 0;
            for (auto [u, v] : edges) {
                int a = label[u], b = label[v];
                mask |= std::uint64_t{1} << slot_of(n, std::min(a, b), std::max(a, b));
            }
            best = std::min(best, mask);
            return;
        }
        auto [lo, hi] = blocks[bi];
        std::vector<int> perm(base.begin() + lo, base.begin() + hi);
        do {
            for (int k = 0; k < hi - lo; ++k) label[perm[k]] = lo + k;
            rec(bi + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    return best;
}

const std::vector<Graph>& canonical_graphs(int n) {
    static std::vector<std::vector<Graph>> cache{{Graph(0)}};
    while (static_cast<int>(cache.size()) <= n) {
        int k = static_cast<int>(cache.size());
        std::set<std::uint64_t> seen;
        for (const Graph& parent : cache[k - 1]) {
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (k - 1)); ++nbrs) {
                Graph g(k);
                parent.for_each_edge([&](int u, int v) { g.add_edge(u, v); });
                for (int v = 0; v < k - 1; ++v)
                    if ((nbrs >> v) & 1) g.add_edge(v, k - 1);
                seen.insert(canonical_form(g));
            }
        }
        std::vector<Graph> level;
        level.reserve(seen.size());
        for (std::uint64_t mask : seen) level.push_back(graph_from_mask(k, mask));
        cache.push_back(std::move(level));
    }
    return cache[n];
}

std::vector<Graph> canonical_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : canonical_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> all_labeled_graphs(int n) {
    int slots = n * (n - 1) / 2;
    if (slots > 30) throw std::invalid_argument("too many labeled graphs to materialize");
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << slots);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask)
        out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<Graph> labeled_trees(int n) {
    if (n < 1) return {};
    if (n == 1) return {Graph(1)};
    if (n == 2) return {Graph::from_edges(2, {{0, 1}})};
    std::vector<Graph> out;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        // decode the Pruefer sequence
        std::vector<int> deg(n, 1);
        for (int s : seq) ++deg[s];
        Graph t(n);
        std::vector<char> used(n, 0);
        for (int s : seq) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            t.add_edge(leaf, s);
            deg[leaf] = 0;
            --deg[s];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) (a < 0 ? a : b) = v;
        t.add_edge(a, b);
        out.push_back(std::move(t));

        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

bool is_chordal(const Graph& g) {
    const int n = g.n();
    if (n == 0) return true;
    // maximum cardinality search, then verify the reverse order is a perfect
    // elimination order via the parent trick
    std::vector<int> weight(n, 0), order;
    std::vector<char> taken(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!taken[v] && (best < 0 || weight[v] > weight[best])) best = v;
        taken[best] = 1;
        order.push_back(best);
        g.neighbors(best).for_each([&](int w) {
            if (!taken[w]) ++weight[w];
        });
    }
    std::reverse(order.begin(), order.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int parent = -1;
        Bits later(n);
        g.neighbors(v).for_each([&](int w) {
            if (pos[w] > i) {
                later.set(w);
                if (parent < 0 || pos[w] < pos[parent]) parent = w;
            }
        });
        if (parent < 0) continue;
        later.reset(parent);
        if (!later.subset_of(g.neighbors(parent))) return false;
    }
    return true;
}

std::vector<VertexSet> all_cliques(const Graph& g) {
    std::vector<VertexSet> out{{}};
    VertexSet current;
    std::function<void(int)> rec = [&](int from) {
        for (int v = from; v < g.n(); ++v) {
            bool ok = true;
            for (int u : current)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            out.push_back(current);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

const std::vector<Graph>& canonical_chordal_graphs(int n) {
    static std::vector<std::vector<Graph>> cache{{Graph(0)}};
    while (static_cast<int>(cache.size()) <= n) {
        int k = static_cast<int>(cache.size());
        std::set<std::uint64_t> seen;
        for (const Graph& parent : cache[k - 1])
            for (const VertexSet& clique : all_cliques(parent))
                seen.insert(canonical_form(parent.with_added_vertex(clique)));
        std::vector<Graph> level;
        level.reserve(seen.size());
        for (std::uint64_t mask : seen) level.push_back(graph_from_mask(k, mask));
        cache.push_back(std::move(level));
    }
    return cache[n];
}

void for_each_labeled_pseudoforest(int n, const std::function<void(const Graph&)>& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);

    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        Graph g(n);
        for (auto [u, v] : chosen) g.add_edge(u, v);
        if (is_pseudoforest(g)) {
            fn(g);
        } else {
            return;  // supersets of a non-pseudoforest stay non-pseudoforests
        }
        if (static_cast<int>(chosen.size()) == n) return;
        for (std::size_t i = from; i < slots.size(); ++i) {
            chosen.push_back(slots[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace orientkit
