#include "orientkit/products.hpp"

#include <stdexcept>

namespace orientkit {

std::string to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::Cartesian: return "cartesian";
        case ProductKind::Lexicographic: return "lexicographic";
        case ProductKind::Direct: return "direct";
        case ProductKind::Strong: return "strong";
    }
    return "?";
}

namespace {

template <class Rule>
Graph build_product(const Graph& g, const Graph& h, Rule adjacent) {
    PairIndex ix{g.n(), h.n()};
    Graph p(g.n() * h.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v)
            for (int u2 = u; u2 < g.n(); ++u2)
                for (int v2 = (u2 == u ? v + 1 : 0); v2 < h.n(); ++v2)
                    if (adjacent(u, v, u2, v2)) p.add_edge(ix.id(u, v), ix.id(u2, v2));
    return p;
}

}  // namespace

Graph cartesian(const Graph& g, const Graph& h) {
    return build_product(g, h, [&](int u, int v, int u2, int v2) {
        return (u == u2 && h.adjacent(v, v2)) || (v == v2 && g.adjacent(u, u2));
    });
}

Graph lexicographic(const Graph& g, const Graph& h) {
    return build_product(g, h, [&](int u, int v, int u2, int v2) {
        return g.adjacent(u, u2) || (u == u2 && h.adjacent(v, v2));
    });
}

Graph direct(const Graph& g, const Graph& h) {
    return build_product(g, h, [&](int u, int v, int u2, int v2) {
        return g.adjacent(u, u2) && h.adjacent(v, v2);
    });
}

Graph strong(const Graph& g, const Graph& h) {
    return build_product(g, h, [&](int u, int v, int u2, int v2) {
        return (u == u2 || g.adjacent(u, u2)) && (v == v2 || h.adjacent(v, v2));
    });
}

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    switch (kind) {
        case ProductKind::Cartesian: return cartesian(g, h);
        case ProductKind::Lexicographic: return lexicographic(g, h);
        case ProductKind::Direct: return direct(g, h);
        case ProductKind::Strong: return strong(g, h);
    }
    throw std::invalid_argument("unknown product kind");
}

Graph substitution(const Graph& g, int v, const Graph& h) {
    g.check_vertex(v);
    int gn = g.n();
    auto relabel = [&](int w) { return w < v ? w : w - 1; };
    Graph out(gn - 1 + h.n());
    g.for_each_edge([&](int a, int b) {
        if (a != v && b != v) out.add_edge(relabel(a), relabel(b));
    });
    h.for_each_edge([&](int a, int b) { out.add_edge(gn - 1 + a, gn - 1 + b); });
    g.neighbors(v).for_each([&](int w) {
        for (int x = 0; x < h.n(); ++x) out.add_edge(relabel(w), gn - 1 + x);
    });
    return out;
}

}  // namespace orientkit
