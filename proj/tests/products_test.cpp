#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orientkit/enumerate.hpp"
#include "orientkit/fixtures.hpp"
#include "orientkit/products.hpp"
#include "orientkit/subgraph.hpp"
#include "test_support.hpp"

using namespace orientkit;

TEST_CASE("pair index is a bijection") {
    PairIndex ix{4, 7};
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 7; ++v) {
            auto [u2, v2] = ix.pair_of(ix.id(u, v));
            CHECK(u2 == u);
            CHECK(v2 == v);
        }
}

TEST_CASE("cartesian product landmarks") {
    CHECK(is_isomorphic(cartesian(path_graph(3), complete_graph(2)), domino()));
    CHECK(is_isomorphic(cartesian(complete_graph(3), complete_graph(2)), complement(cycle_graph(6))));
    Graph h = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    CHECK(cartesian(complete_graph(1), h) == h);
    std::mt19937 rng(21);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(4, 0.5, rng), k = random_graph(5, 0.5, rng);
        CHECK(cartesian(g, k).m() == g.n() * k.m() + k.n() * g.m());
    }
}

TEST_CASE("lexicographic product landmarks") {
    std::mt19937 rng(22);
    for (int i = 0; i < 20; ++i) {
        Graph h = random_graph(4, 0.5, rng);
        CHECK(is_isomorphic(lexicographic(complete_graph(2), h), join(h, h)));
    }
    CHECK(is_isomorphic(lexicographic(path_graph(3), Graph(2)), complete_bipartite(2, 4)));
    Graph g = Graph::from_edges(4, {{0, 2}, {1, 3}, {0, 3}});
    CHECK(lexicographic(g, complete_graph(1)) == g);
}

TEST_CASE("direct product landmarks") {
    // K2 x H ~ 2H for connected bipartite H
    for (const Graph& t : labeled_trees(5))
        CHECK(is_isomorphic(direct(complete_graph(2), t), disjoint_union(t, t)));
    CHECK(is_isomorphic(direct(complete_graph(2), cycle_graph(6)),
                        disjoint_union(cycle_graph(6), cycle_graph(6))));
    CHECK(components(direct(complete_graph(2), complete_graph(2))).size() == 2);
    CHECK(direct(path_graph(4), complete_graph(1)) == Graph(4));
    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(4, 0.5, rng), h = random_graph(4, 0.5, rng);
        CHECK(direct(g, h).m() == 2 * g.m() * h.m());
    }
}

TEST_CASE("strong product landmarks") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(is_isomorphic(strong(complete_graph(m), complete_graph(n)), complete_graph(m * n)));
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(strong(g, complete_graph(1)) == g);
}

TEST_CASE("strong product edges split into cartesian and direct parts") {
    std::mt19937 rng(24);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(4, 0.5, rng), h = random_graph(5, 0.5, rng);
        Graph s = strong(g, h), c = cartesian(g, h), d = direct(g, h);
        CHECK(s.m() == c.m() + d.m());
        c.for_each_edge([&](int u, int v) { CHECK(s.adjacent(u, v)); });
        d.for_each_edge([&](int u, int v) {
            CHECK(s.adjacent(u, v));
            CHECK_FALSE(c.adjacent(u, v));
        });
    }
}

TEST_CASE("strong product degree law") {
    for (const Graph& g : canonical_graphs(4))
        for (const Graph& h : canonical_graphs(4)) {
            Graph s = strong(g, h);
            PairIndex ix{g.n(), h.n()};
            for (int u = 0; u < g.n(); ++u)
                for (int v = 0; v < h.n(); ++v)
                    CHECK(s.degree(ix.id(u, v)) == (g.degree(u) + 1) * (h.degree(v) + 1) - 1);
        }
}

TEST_CASE("closed neighborhoods multiply in the strong product") {
    std::mt19937 rng(25);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(4, 0.5, rng), h = random_graph(4, 0.5, rng);
        Graph s = strong(g, h);
        PairIndex ix{g.n(), h.n()};
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < h.n(); ++v) {
                Bits expect(s.n());
                g.closed_neighborhood(u).for_each([&](int a) {
                    h.closed_neighborhood(v).for_each([&](int b) { expect.set(ix.id(a, b)); });
                });
                CHECK(s.closed_neighborhood(ix.id(u, v)) == expect);
            }
    }
}

TEST_CASE("commutativity up to isomorphism, except lexicographic") {
    for (int ng = 1; ng <= 4; ++ng)
        for (const Graph& g : canonical_graphs(ng))
            for (int nh = 1; nh <= 4; ++nh)
                for (const Graph& h : canonical_graphs(nh)) {
                    CHECK(is_isomorphic(cartesian(g, h), cartesian(h, g)));
                    CHECK(is_isomorphic(direct(g, h), direct(h, g)));
                    CHECK(is_isomorphic(strong(g, h), strong(h, g)));
                }
    CHECK_FALSE(is_isomorphic(lexicographic(path_graph(3), complete_graph(2)),
                              lexicographic(complete_graph(2), path_graph(3))));
}

TEST_CASE("factors embed as fibers") {
    for (int ng = 1; ng <= 5; ++ng)
        for (const Graph& g : canonical_graphs(ng))
            for (int nh = 1; nh <= 5; ++nh)
                for (const Graph& h : canonical_graphs(nh)) {
                    PairIndex ix{g.n(), h.n()};
                    for (ProductKind kind :
                         {ProductKind::Cartesian, ProductKind::Lexicographic, ProductKind::Strong}) {
                        Graph p = product(kind, g, h);
                        VertexSet row;  // fiber through the first h-vertex
                        for (int u = 0; u < g.n(); ++u) row.push_back(ix.id(u, 0));
                        CHECK(induced_subgraph(p, row) == g);
                        VertexSet col;
                        for (int v = 0; v < h.n(); ++v) col.push_back(ix.id(0, v));
                        CHECK(induced_subgraph(p, col) == h);
                    }
                }
}

TEST_CASE("direct product component count is 2^(bipartite factors - 1)") {
    for (int ng = 2; ng <= 5; ++ng)
        for (const Graph& g : canonical_connected_graphs(ng))
            for (int nh = 2; nh <= 5; ++nh)
                for (const Graph& h : canonical_connected_graphs(nh)) {
                    int k = (bipartition(g).has_value() ? 1 : 0) + (bipartition(h).has_value() ? 1 : 0);
                    CHECK(static_cast<int>(components(direct(g, h)).size()) == (1 << (k > 0 ? k - 1 : 0)));
                }
}

TEST_CASE("substitution") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    for (int v = 0; v < 4; ++v) CHECK(is_isomorphic(substitution(g, v, complete_graph(1)), g));
    CHECK(substitution(complete_graph(2), 0, complete_graph(2)) == complete_graph(3));
    CHECK_THROWS(substitution(g, 9, complete_graph(1)));

    // substituting every vertex by K_m builds the lexicographic product
    for (const Graph& base : canonical_graphs(4))
        for (int m = 2; m <= 3; ++m) {
            Graph result = base;
            for (int v = base.n() - 1; v >= 0; --v) result = substitution(result, v, complete_graph(m));
            CHECK(is_isomorphic(result, lexicographic(base, complete_graph(m))));
        }
}
