#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "orientkit/enumerate.hpp"
#include "orientkit/fixtures.hpp"
#include "orientkit/products.hpp"
#include "orientkit/structure.hpp"
#include "orientkit/subgraph.hpp"

using namespace orientkit;

TEST_CASE("simplicial vertices") {
    for (int n = 1; n <= 6; ++n) {
        VertexSet all;
        for (int v = 0; v < n; ++v) all.push_back(v);
        CHECK(simplicial_vertices(complete_graph(n)) == all);
    }
    CHECK(simplicial_vertices(cycle_graph(4)).empty());
    for (int n = 1; n <= 6; ++n) {
        VertexSet s = simplicial_vertices(raft(n));
        CHECK(std::find(s.begin(), s.end(), 0) != s.end());          // x_0
        CHECK(std::find(s.begin(), s.end(), n + 1) != s.end());      // y_0
        CHECK(s.size() == 2);                                        // nothing else
    }
}

TEST_CASE("true twin reduction") {
    TwinReduction red = true_twin_reduction(complete_graph(5));
    CHECK(red.classes.size() == 1);
    CHECK(red.classes[0].size() == 5);
    CHECK(red.kept == VertexSet{0});

    red = true_twin_reduction(cycle_graph(5));
    CHECK(red.classes.size() == 5);

    // fibers {(u,0),(u,1)} of g[K2] merge into one class per twin class of g
    for (const Graph& g : canonical_graphs(4)) {
        Graph doubled = lexicographic(g, complete_graph(2));
        TwinReduction r = true_twin_reduction(doubled);
        TwinReduction base = true_twin_reduction(g);
        REQUIRE(r.classes.size() == base.classes.size());
        for (std::size_t c = 0; c < r.classes.size(); ++c)
            CHECK(r.classes[c].size() == 2 * base.classes[c].size());
        if (base.classes.size() == static_cast<std::size_t>(g.n()))  // twin-free factor
            for (const auto& cls : r.classes) CHECK(cls.size() == 2);
    }

    // idempotence
    for (const Graph& g : canonical_graphs(5)) {
        Graph reduced = induced_subgraph(g, true_twin_reduction(g).kept);
        CHECK(static_cast<int>(true_twin_reduction(reduced).kept.size()) == reduced.n());
    }
}

TEST_CASE("co-chain partition examples") {
    CHECK_FALSE(co_chain_partition(cycle_graph(4)).has_value());
    for (int n = 0; n <= 8; ++n) {
        auto p = co_chain_partition(raft(n));
        REQUIRE(p.has_value());
        CHECK(verify_co_chain_partition(raft(n), *p));
    }
    auto k1 = co_chain_partition(Graph(1));
    REQUIRE(k1.has_value());
    CHECK(k1->x_order == VertexSet{0});
    CHECK(k1->y_order.empty());
}

TEST_CASE("co-chain partition presence matches the forbidden-set test on all small graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : canonical_graphs(n)) {
            auto p = co_chain_partition(g);
            if (p) CHECK(verify_co_chain_partition(g, *p));
            CHECK(p.has_value() == is_co_chain_via_forbidden(g));
        }
}

TEST_CASE("forbidden-set membership examples") {
    CHECK_FALSE(is_co_chain_via_forbidden(cycle_graph(5)));
    CHECK(is_co_chain_via_forbidden(path_graph(4)));
    CHECK_FALSE(is_co_chain_via_forbidden(claw()));
}

TEST_CASE("connected co-chain graphs are exactly the {P5,C4,C5,claw,bull}-free ones (<= 6)") {
    const std::vector<Graph> patterns = {path_graph(5), cycle_graph(4), cycle_graph(5), claw(), bull()};
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : canonical_connected_graphs(n)) {
            bool free = true;
            for (const Graph& pat : patterns)
                if (pat.n() <= g.n() && find_induced_subgraph(g, pat)) {
                    free = false;
                    break;
                }
            CHECK(co_chain_partition(g).has_value() == free);
        }
}

TEST_CASE("classification of connected true-twin-free co-chain graphs") {
    CHECK(classify_ttf_co_chain(path_graph(3)).kind == CoChainTTFClass::IsRaftJoinK1);
    CHECK(classify_ttf_co_chain(path_graph(3)).order == 0);
    CHECK(classify_ttf_co_chain(path_graph(4)).kind == CoChainTTFClass::IsRaft);
    CHECK(classify_ttf_co_chain(path_graph(4)).order == 1);
    CHECK(classify_ttf_co_chain(Graph(1)).kind == CoChainTTFClass::IsK1);
    CHECK(classify_ttf_co_chain(cycle_graph(5)).kind == CoChainTTFClass::NotCoChainTTF);

    for (int n = 1; n <= 20; ++n) {
        CoChainTTFClass cls = classify_ttf_co_chain(raft(n));
        CHECK(cls.kind == CoChainTTFClass::IsRaft);
        CHECK(cls.order == n);
    }
    for (int n = 0; n <= 20; ++n) {
        CoChainTTFClass cls = classify_ttf_co_chain(join(raft(n), Graph(1)));
        CHECK(cls.kind == CoChainTTFClass::IsRaftJoinK1);
        CHECK(cls.order == n);
    }
}

TEST_CASE("classification preconditions") {
    CHECK_THROWS_AS(classify_ttf_co_chain(Graph(2)), std::invalid_argument);           // disconnected
    CHECK_THROWS_AS(classify_ttf_co_chain(complete_graph(2)), std::invalid_argument);  // twins
}

TEST_CASE("raft construction") {
    CHECK(raft(0) == Graph(2));
    CHECK(is_isomorphic(raft(1), path_graph(4)));
    CHECK_THROWS(raft(-1));
    for (int n = 0; n <= 30; ++n) {
        Graph r = raft(n);
        CHECK(r.n() == 2 * (n + 1));
        int cross = 0;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (i + j >= n + 1) ++cross;
        CHECK(r.m() == 2 * ((n + 1) * n / 2) + cross);
        CHECK(r.m() == 3 * n * (n + 1) / 2);
    }
}

TEST_CASE("nested neighborhoods step by one in twin-free co-chain graphs") {
    // rafts and their joins with K1 are the connected twin-free co-chain graphs
    for (int n = 1; n <= 6; ++n) {
        Graph g = raft(n);
        auto p = co_chain_partition(g);
        REQUIRE(p.has_value());
        Bits y = Bits::of(g.n(), p->y_order);
        for (std::size_t i = 0; i + 1 < p->x_order.size(); ++i) {
            int a = (g.neighbors(p->x_order[i]) & y).count();
            int b = (g.neighbors(p->x_order[i + 1]) & y).count();
            CHECK(b == a + 1);
        }
    }
}

TEST_CASE("pseudoforest predicates") {
    Graph c5_pendant = cycle_graph(5).with_added_vertex({0});
    CHECK(is_pseudotree(c5_pendant));
    CHECK_FALSE(is_pseudoforest(complete_graph(4)));
    for (const Graph& t : labeled_trees(6)) CHECK(is_pseudoforest(t));
    CHECK(is_pseudoforest(disjoint_union(cycle_graph(3), cycle_graph(4))));
    CHECK_FALSE(is_pseudotree(disjoint_union(cycle_graph(3), cycle_graph(4))));
}

TEST_CASE("k-linear forests") {
    CHECK(is_k_linear_forest(Graph(3), 1));
    CHECK_FALSE(is_k_linear_forest(complete_graph(2), 1));
    CHECK(is_k_linear_forest(disjoint_union(Graph(1), complete_graph(2)), 2));
    CHECK_FALSE(is_k_linear_forest(path_graph(5), 4));
    CHECK(is_k_linear_forest(path_graph(4), 4));
    CHECK_FALSE(is_k_linear_forest(cycle_graph(3), 3));
    CHECK_FALSE(is_k_linear_forest(claw(), 4));
    CHECK_THROWS(is_k_linear_forest(Graph(1), 0));
}

TEST_CASE("complete and 2-complete components") {
    CHECK(components_all_complete(disjoint_union(complete_graph(3), Graph(1))));
    CHECK_FALSE(components_all_complete(path_graph(3)));
    CHECK(components_all_2_complete(path_graph(3)));
    CHECK_FALSE(components_all_2_complete(path_graph(4)));
    CHECK(components_all_2_complete(disjoint_union(complete_graph(4), path_graph(3))));
    // two triangles sharing a vertex: twin reduction is P3
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(components_all_2_complete(bowtie));
    CHECK_FALSE(components_all_2_complete(cycle_graph(5)));
}

TEST_CASE("cograph recognition") {
    CHECK(is_cograph(complete_bipartite(2, 3)));
    CHECK_FALSE(is_cograph(path_graph(4)));
    CHECK_FALSE(is_cograph(raft(1)));
    for (int n = 2; n <= 5; ++n) CHECK_FALSE(is_cograph(raft(n)));
    CHECK(is_cograph(complete_graph(5)));
    CHECK(is_cograph(Graph(4)));
}

TEST_CASE("co-chain graphs stay co-chain under twin and universal additions") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : canonical_graphs(n)) {
            if (!co_chain_partition(g)) continue;
            for (int v = 0; v < g.n(); ++v)
                CHECK(co_chain_partition(g.with_added_vertex(g.closed_neighborhood(v).to_vector()))
                          .has_value());
            VertexSet all;
            for (int v = 0; v < g.n(); ++v) all.push_back(v);
            CHECK(co_chain_partition(g.with_added_vertex(all)).has_value());
        }
}
