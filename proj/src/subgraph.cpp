#include "orientkit/subgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orientkit {

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.mapping.size()) != pattern.n()) return false;
    std::vector<char> used(host.n(), 0);
    for (int img : e.mapping) {
        if (img < 0 || img >= host.n() || used[img]) return false;
        used[img] = 1;
    }
    for (int a = 0; a < pattern.n(); ++a)
        for (int b = a + 1; b < pattern.n(); ++b)
            if (pattern.adjacent(a, b) != host.adjacent(e.mapping[a], e.mapping[b])) return false;
    return true;
}

namespace {

// Iterated neighborhood refinement over both graphs at once, so color ids are
// comparable across the two. Returns false if the class profiles ever diverge.
bool joint_refinement(const Graph& g, const Graph& h, std::vector<int>& gc, std::vector<int>& hc) {
    gc.assign(g.n(), 0);
    hc.assign(h.n(), 0);
    int colors = 1;
    for (int round = 0; round <= g.n(); ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& gr, const std::vector<int>& col, int v) {
            std::vector<int> nb;
            gr.neighbors(v).for_each([&](int w) { nb.push_back(col[w]); });
            std::sort(nb.begin(), nb.end());
            return Sig{col[v], std::move(nb)};
        };
        std::map<Sig, int> ids;
        std::vector<Sig> gs(g.n()), hs(h.n());
        for (int v = 0; v < g.n(); ++v) ids.emplace(gs[v] = signature(g, gc, v), 0);
        for (int v = 0; v < h.n(); ++v) ids.emplace(hs[v] = signature(h, hc, v), 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        std::vector<int> g_hist(next, 0), h_hist(next, 0);
        for (int v = 0; v < g.n(); ++v) ++g_hist[gc[v] = ids[gs[v]]];
        for (int v = 0; v < h.n(); ++v) ++h_hist[hc[v] = ids[hs[v]]];
        if (g_hist != h_hist) return false;
        if (next == colors) break;
        colors = next;
    }
    return true;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& gc;
    const std::vector<int>& hc;
    std::vector<int> order;
    std::vector<int> image;
    std::vector<char> used;

    bool run() {
        // map rare color classes first
        std::vector<int> class_size(*std::max_element(gc.begin(), gc.end()) + 1, 0);
        for (int c : gc) ++class_size[c];
        order.resize(g.n());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(class_size[gc[a]], gc[a]) < std::pair(class_size[gc[b]], gc[b]);
        });
        image.assign(g.n(), -1);
        used.assign(h.n(), 0);
        return place(0);
    }

    bool place(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < h.n(); ++w) {
            if (used[w] || hc[w] != gc[v]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i)
                ok = g.adjacent(v, order[i]) == h.adjacent(w, image[order[i]]);
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (place(depth + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.m() != h.m()) return false;
    if (g.n() == 0) return true;
    std::vector<int> gc, hc;
    if (!joint_refinement(g, h, gc, hc)) return false;
    IsoSearch search{g, h, gc, hc, {}, {}, {}};
    return search.run();
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    long long budget;
    std::vector<int> order;        // pattern vertices, most-constrained first
    std::vector<Bits> non_nbrs;    // host non-neighbors, self excluded
    std::vector<int> image;

    explicit InducedSearch(const Graph& host_, const Graph& pattern_, long long budget_)
        : host(host_), pattern(pattern_), budget(budget_) {
        non_nbrs.reserve(host.n());
        for (int v = 0; v < host.n(); ++v) {
            Bits b(host.n());
            for (int w = 0; w < host.n(); ++w)
                if (w != v && !host.adjacent(v, w)) b.set(w);
            non_nbrs.push_back(std::move(b));
        }
        // order: max degree seed, then prefer vertices with most placed neighbors
        std::vector<char> placed(pattern.n(), 0);
        for (int step = 0; step < pattern.n(); ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int p = 0; p < pattern.n(); ++p) {
                if (placed[p]) continue;
                int links = 0;
                for (int q : order)
                    if (pattern.adjacent(p, q)) ++links;
                if (std::pair(links, pattern.degree(p)) > std::pair(best_links, best_deg)) {
                    best = p;
                    best_links = links;
                    best_deg = pattern.degree(p);
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
        image.assign(pattern.n(), -1);
    }

    std::optional<Embedding> run() {
        std::vector<Bits> domains;
        domains.reserve(pattern.n());
        for (int idx = 0; idx < pattern.n(); ++idx) {
            int p = order[idx];
            Bits d(host.n());
            for (int v = 0; v < host.n(); ++v)
                if (host.degree(v) >= pattern.degree(p)) d.set(v);
            domains.push_back(std::move(d));
        }
        if (extend(0, domains)) return Embedding{image};
        return std::nullopt;
    }

    bool extend(std::size_t depth, const std::vector<Bits>& domains) {
        if (depth == order.size()) return true;
        if (budget == 0) return false;  // exhausted: give up everywhere
        if (budget > 0) --budget;
        int p = order[depth];
        for (int v = domains[depth].first(); v >= 0; v = domains[depth].next(v)) {
            std::vector<Bits> next = domains;
            bool dead = false;
            for (std::size_t later = depth + 1; later < order.size(); ++later) {
                int q = order[later];
                next[later] &= pattern.adjacent(p, q) ? host.neighbors(v) : non_nbrs[v];
                next[later].reset(v);
                if (next[later].none()) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            image[p] = v;
            if (extend(depth + 1, next)) return true;
            image[p] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_induced_subgraph(const Graph& host, const Graph& pattern,
                                               long long node_budget) {
    if (pattern.n() > host.n()) return std::nullopt;
    if (pattern.n() == 0) return Embedding{{}};
    InducedSearch search(host, pattern, node_budget);
    return search.run();
}

}  // namespace orientkit
