#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orientkit/characterize.hpp"
#include "orientkit/enumerate.hpp"
#include "orientkit/fixtures.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/products.hpp"
#include "orientkit/structure.hpp"

using namespace orientkit;

namespace {

void check_verdict_consistency(const Verdict& v, const Graph& prod) {
    if (v.certificate) {
        CHECK(v.certificate->base() == prod);
        CHECK(is_one_perfect(*v.certificate));
    }
    if (v.witness) {
        const Graph* pattern = nullptr;
        for (const auto& [name, g] : forbidden_catalog())
            if (name == v.witness->pattern) pattern = &g;
        REQUIRE(pattern != nullptr);
        if (v.witness->embedding) CHECK(verify_embedding(prod, *pattern, *v.witness->embedding));
        if (v.witness->minor) CHECK(verify_minor_witness(prod, *pattern, *v.witness->minor));
        CHECK_FALSE(recognize_bruteforce(*pattern).is_1po);
    }
}

}  // namespace

TEST_CASE("cartesian decider") {
    Verdict v = decide_cartesian(complete_graph(2), complete_graph(2));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Cartesian (ii)");
    CHECK(is_isomorphic(v.certificate->base(), cycle_graph(4)));
    check_verdict_consistency(v, cartesian(complete_graph(2), complete_graph(2)));

    v = decide_cartesian(complete_graph(3), complete_graph(2));
    CHECK_FALSE(v.is_1po);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->pattern == "complement-of-C6");
    check_verdict_consistency(v, cartesian(complete_graph(3), complete_graph(2)));

    v = decide_cartesian(Graph(2), cycle_graph(5));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Cartesian (i)");
    check_verdict_consistency(v, cartesian(Graph(2), cycle_graph(5)));

    v = decide_cartesian(cycle_graph(5), Graph(2));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Cartesian (i, swapped)");
}

TEST_CASE("lexicographic decider") {
    Verdict v = decide_lexicographic(path_graph(3), Graph(2));
    CHECK_FALSE(v.is_1po);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->pattern == "K2,3");
    check_verdict_consistency(v, lexicographic(path_graph(3), Graph(2)));

    v = decide_lexicographic(cycle_graph(5), complete_graph(3));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Lexicographic (ii)");
    check_verdict_consistency(v, lexicographic(cycle_graph(5), complete_graph(3)));

    v = decide_lexicographic(complete_graph(2), cycle_graph(4));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Lexicographic (iii)");
    check_verdict_consistency(v, lexicographic(complete_graph(2), cycle_graph(4)));

    v = decide_lexicographic(Graph(3), bull());
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Lexicographic (i)");
}

TEST_CASE("direct decider") {
    Verdict v = decide_direct(path_graph(3), path_graph(4));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Direct (iii)");
    check_verdict_consistency(v, direct(path_graph(3), path_graph(4)));

    v = decide_direct(path_graph(4), path_graph(4));
    CHECK_FALSE(v.is_1po);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->pattern == "domino");
    CHECK(v.witness->embedding.has_value());
    check_verdict_consistency(v, direct(path_graph(4), path_graph(4)));

    // K2 x pseudotree
    std::mt19937 rng(41);
    for (const Graph& t : labeled_trees(6)) {
        if (rng() % 37 != 0) continue;
        Verdict w = decide_direct(complete_graph(2), t);
        CHECK(w.is_1po);
        CHECK(w.condition == "Thm-Direct (ii)");
    }
    Graph unicyclic = cycle_graph(5).with_added_vertex({3});
    Verdict w = decide_direct(unicyclic, complete_graph(2));
    CHECK(w.is_1po);
    CHECK(w.condition == "Thm-Direct (ii, swapped)");
    check_verdict_consistency(w, direct(unicyclic, complete_graph(2)));
}

TEST_CASE("strong decider") {
    Verdict v = decide_strong(path_graph(3), claw());
    CHECK_FALSE(v.is_1po);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->pattern == "K2,3");
    check_verdict_consistency(v, strong(path_graph(3), claw()));

    v = decide_strong(path_graph(3), raft(2));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Strong (ii)");
    check_verdict_consistency(v, strong(path_graph(3), raft(2)));

    Graph k3_k2 = disjoint_union(complete_graph(3), complete_graph(2));
    v = decide_strong(k3_k2, cycle_graph(5));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Strong (i)");
    check_verdict_consistency(v, strong(k3_k2, cycle_graph(5)));

    v = decide_strong(cycle_graph(5), k3_k2);
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Strong (i, swapped)");
    check_verdict_consistency(v, strong(cycle_graph(5), k3_k2));

    // swapped clause (ii), with true twins sprinkled on both sides
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    Graph twin_raft = raft(1).with_added_vertex(raft(1).closed_neighborhood(2).to_vector());
    v = decide_strong(twin_raft, bowtie);
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Strong (ii, swapped)");
    check_verdict_consistency(v, strong(twin_raft, bowtie));
}

TEST_CASE("strong decider assembles certificates across mixed components and twins") {
    // 2-complete side: two triangles sharing a vertex, plus a complete component
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    Graph g = disjoint_union(bowtie, complete_graph(3));
    // co-chain side: a raft, plus a path with a true twin added
    Graph p3_twin = path_graph(3).with_added_vertex(path_graph(3).closed_neighborhood(1).to_vector());
    Graph h = disjoint_union(raft(2), p3_twin);
    REQUIRE(components_all_2_complete(g));
    REQUIRE(components_all_co_chain(h));
    Verdict v = decide_strong(g, h);
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Strong (ii)");
    check_verdict_consistency(v, strong(g, h));
    CHECK(recognize_2sat(strong(g, h)).is_1po);
}

TEST_CASE("strong decider handles raft-join components") {
    // P3 x (raft(n) * K1) goes through the embedding into raft(n+2)
    for (int n = 0; n <= 3; ++n) {
        Graph g = join(raft(n), Graph(1));
        Verdict v = decide_strong(path_graph(3), g);
        CHECK(v.is_1po);
        CHECK(v.condition == "Thm-Strong (ii)");
        check_verdict_consistency(v, strong(path_graph(3), g));
    }
}

TEST_CASE("join decider") {
    Verdict v = decide_join(complete_graph(1), path_graph(4));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Join (i)");
    check_verdict_consistency(v, join(complete_graph(1), path_graph(4)));

    v = decide_join(Graph(2), Graph(3));
    CHECK_FALSE(v.is_1po);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->pattern == "K2,3");

    v = decide_join(cycle_graph(4), cycle_graph(4));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Join (ii)");
    check_verdict_consistency(v, join(cycle_graph(4), cycle_graph(4)));

    v = decide_join(path_graph(4), complete_graph(2));
    CHECK(v.is_1po);
    CHECK(v.condition == "Thm-Join (i, swapped)");
}

TEST_CASE("join decider agrees with the recognizer on small pairs") {
    for (int ng = 1; ng <= 4; ++ng)
        for (const Graph& g : canonical_graphs(ng))
            for (int nh = 1; nh <= 4; ++nh)
                for (const Graph& h : canonical_graphs(nh)) {
                    DecideOptions opts;
                    opts.want_witness = false;
                    CHECK(decide_join(g, h, opts).is_1po == recognize_2sat(join(g, h)).is_1po);
                }
}

TEST_CASE("trivial products defer to the recognizer") {
    Verdict v = decide_cartesian(Graph(1), path_graph(4));
    CHECK(v.condition == "trivial-product");
    CHECK(v.is_1po);
    v = decide_strong(Graph(1), domino());
    CHECK(v.condition == "trivial-product");
    CHECK_FALSE(v.is_1po);
}

TEST_CASE("deciders match the recognizer on all connected factor pairs up to 4 vertices") {
    DecideOptions opts;
    opts.want_witness = false;
    const std::vector<std::pair<DecideKind, ProductKind>> kinds = {
        {DecideKind::Cartesian, ProductKind::Cartesian},
        {DecideKind::Lexicographic, ProductKind::Lexicographic},
        {DecideKind::Direct, ProductKind::Direct},
        {DecideKind::Strong, ProductKind::Strong},
    };
    for (int ng = 1; ng <= 4; ++ng)
        for (const Graph& g : canonical_connected_graphs(ng))
            for (int nh = 1; nh <= 4; ++nh)
                for (const Graph& h : canonical_connected_graphs(nh))
                    for (auto [dk, pk] : kinds)
                        CHECK(decide(dk, g, h, opts).is_1po == recognize_2sat(product(pk, g, h)).is_1po);
}

TEST_CASE("deciders match the recognizer on random factors beyond the canonical catalog") {
    DecideOptions opts;
    opts.want_witness = false;
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    const std::vector<std::pair<DecideKind, ProductKind>> kinds = {
        {DecideKind::Cartesian, ProductKind::Cartesian},
        {DecideKind::Lexicographic, ProductKind::Lexicographic},
        {DecideKind::Direct, ProductKind::Direct},
        {DecideKind::Strong, ProductKind::Strong},
    };
    for (int i = 0; i < 400; ++i) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 5), density(rng), rng);
        Graph h = random_graph(2 + static_cast<int>(rng() % 3), density(rng), rng);
        for (auto [dk, pk] : kinds)
            CHECK(decide(dk, g, h, opts).is_1po == recognize_2sat(product(pk, g, h)).is_1po);
    }
}

TEST_CASE("every negative verdict's witness re-verifies") {
    DecideOptions opts;  // witnesses on
    for (const Graph& g : canonical_connected_graphs(4))
        for (const Graph& h : canonical_connected_graphs(4)) {
            Verdict v = decide_strong(g, h, opts);
            if (!v.is_1po && v.witness) check_verdict_consistency(v, strong(g, h));
        }
}

TEST_CASE("raft product layout") {
    for (int n = 1; n <= 6; ++n) {
        P3RaftLayout layout = make_p3_raft_layout(n);
        Graph prod = strong(path_graph(3), raft(n));
        // the parts partition the vertices outside the four simplicial ones
        Bits seen(prod.n());
        auto mark = [&](int v) {
            CHECK_FALSE(seen.test(v));
            seen.set(v);
        };
        mark(layout.a);
        mark(layout.b);
        for (const auto* clique : {&layout.A1, &layout.A2, &layout.A3, &layout.B1, &layout.B2, &layout.B3}) {
            CHECK(static_cast<int>(clique->size()) == n);
            Bits b(prod.n());
            for (int v : *clique) {
                mark(v);
                b.set(v);
            }
            CHECK(is_clique(prod, b));
            // closed neighborhoods grow along each clique's order
            for (std::size_t i = 0; i + 1 < clique->size(); ++i) {
                Bits lo = prod.closed_neighborhood((*clique)[i]);
                Bits hi = prod.closed_neighborhood((*clique)[i + 1]);
                CHECK(lo.subset_of(hi));
            }
        }
        for (int s : layout.simplicial) mark(s);
        CHECK(seen.count() == prod.n());
        for (int s : layout.simplicial) CHECK(is_clique(prod, prod.neighbors(s)));
    }
}

TEST_CASE("raft product orientation") {
    Orientation d1 = orient_p3_strong_raft(1);
    CHECK(d1.base().n() == 12);
    CHECK(is_one_perfect(d1));
    CHECK(d1.base() == strong(path_graph(3), raft(1)));
    CHECK_THROWS_AS(orient_p3_strong_raft(0), std::invalid_argument);

    P3RaftLayout layout = make_p3_raft_layout(3);
    Orientation d3 = orient_p3_strong_raft(3);
    Bits expect(d3.base().n());
    for (int v : layout.A2) expect.set(v);
    for (int v : layout.A3) expect.set(v);
    CHECK(d3.out_neighbors(layout.a) == expect);
}

TEST_CASE("forbidden catalog") {
    const auto& catalog = forbidden_catalog();
    REQUIRE(catalog.size() == 3);
    for (const auto& [name, g] : catalog) {
        CHECK_FALSE(recognize_bruteforce(g).is_1po);
        CHECK_FALSE(recognize_2sat(g).is_1po);
    }
    CHECK(catalog[0].first == "K2,3");
    CHECK(catalog[1].first == "domino");
    CHECK(is_isomorphic(catalog[1].second, cartesian(path_graph(3), complete_graph(2))));
    CHECK(catalog[2].first == "complement-of-C6");
}

TEST_CASE("direct products of a path with small cycles or long paths fail") {
    for (const Graph& other : {cycle_graph(3), cycle_graph(5), path_graph(5)})
        CHECK_FALSE(recognize_2sat(direct(path_graph(3), other)).is_1po);
}

TEST_CASE("strong products of a path with the five obstructions fail") {
    for (const Graph& other : {cycle_graph(4), cycle_graph(5), claw(), bull(), path_graph(5)})
        CHECK_FALSE(recognize_2sat(strong(path_graph(3), other)).is_1po);
    CHECK_FALSE(recognize_2sat(strong(path_graph(4), path_graph(4))).is_1po);
}

TEST_CASE("simplicial pairs stay simplicial in strong products") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    int done = 0;
    while (done < 200) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 3), density(rng), rng);
        Graph h = random_graph(3 + static_cast<int>(rng() % 3), density(rng), rng);
        VertexSet sg = simplicial_vertices(g), sh = simplicial_vertices(h);
        if (sg.empty() || sh.empty()) continue;
        Graph p = strong(g, h);
        PairIndex ix{g.n(), h.n()};
        for (int u : sg)
            for (int v : sh) CHECK(is_clique(p, p.neighbors(ix.id(u, v))));
        ++done;
    }
}
