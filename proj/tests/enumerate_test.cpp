#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "orientkit/enumerate.hpp"
#include "orientkit/fixtures.hpp"
#include "orientkit/structure.hpp"

using namespace orientkit;

TEST_CASE("masks round-trip") {
    std::mt19937 rng(51);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(8, 0.5, rng);
        CHECK(graph_from_mask(8, mask_of(g)) == g);
    }
}

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937 rng(52);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        g.for_each_edge([&](int u, int v) { h.add_edge(perm[u], perm[v]); });
        CHECK(canonical_form(g) == canonical_form(h));
    }
    CHECK(canonical_form(cycle_graph(6)) != canonical_form(disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("unlabeled graph counts match the literature") {
    const int expected_all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    const int expected_connected[] = {1, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 0; n <= 7; ++n) {
        CHECK(static_cast<int>(canonical_graphs(n).size()) == expected_all[n]);
        CHECK(static_cast<int>(canonical_connected_graphs(n).size()) == expected_connected[n]);
    }
}

TEST_CASE("labeled graph enumeration") {
    CHECK(all_labeled_graphs(4).size() == 64);
    CHECK(all_labeled_graphs(5).size() == 1024);
}

TEST_CASE("labeled trees via Pruefer sequences") {
    const long long counts[] = {0, 1, 1, 3, 16, 125, 1296};
    for (int n = 1; n <= 6; ++n) {
        auto trees = labeled_trees(n);
        CHECK(static_cast<long long>(trees.size()) == counts[n]);
        for (const Graph& t : trees) {
            CHECK(t.m() == n - 1);
            CHECK(is_connected(t));
        }
    }
}

TEST_CASE("chordality test") {
    CHECK(is_chordal(complete_graph(5)));
    CHECK(is_chordal(path_graph(6)));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK_FALSE(is_chordal(cycle_graph(6)));
    CHECK(is_chordal(cycle_graph(3)));
    CHECK(is_chordal(Graph(4)));
    for (const Graph& t : labeled_trees(6)) CHECK(is_chordal(t));
}

TEST_CASE("chordal generation matches filtering the full catalog") {
    for (int n = 1; n <= 6; ++n) {
        int filtered = 0;
        for (const Graph& g : canonical_graphs(n))
            if (is_chordal(g)) ++filtered;
        const auto& generated = canonical_chordal_graphs(n);
        CHECK(static_cast<int>(generated.size()) == filtered);
        for (const Graph& g : generated) CHECK(is_chordal(g));
    }
}

TEST_CASE("clique enumeration") {
    CHECK(all_cliques(complete_graph(3)).size() == 8);   // empty, 3 vertices, 3 edges, 1 triangle
    CHECK(all_cliques(cycle_graph(4)).size() == 9);      // empty, 4 vertices, 4 edges
    CHECK(all_cliques(Graph(3)).size() == 4);
}

TEST_CASE("pseudoforest enumeration matches filtering all labeled graphs") {
    for (int n = 1; n <= 4; ++n) {
        int filtered = 0;
        for (const Graph& g : all_labeled_graphs(n))
            if (is_pseudoforest(g)) ++filtered;
        int generated = 0;
        for_each_labeled_pseudoforest(n, [&](const Graph& g) {
            CHECK(is_pseudoforest(g));
            ++generated;
        });
        CHECK(generated == filtered);
    }
}

TEST_CASE("random graphs are reproducible") {
    std::mt19937 a(7), b(7);
    for (int i = 0; i < 20; ++i) CHECK(random_graph(8, 0.5, a) == random_graph(8, 0.5, b));
}
