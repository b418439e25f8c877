#include "orientkit/selftest.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "orientkit/characterize.hpp"
#include "orientkit/enumerate.hpp"
#include "orientkit/fixtures.hpp"
#include "orientkit/minor.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/parallel.hpp"
#include "orientkit/products.hpp"
#include "orientkit/structure.hpp"
#include "orientkit/subgraph.hpp"

namespace orientkit {

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult timed(int id, const std::string& name,
                      const std::function<std::string(std::string&)>& body) {
    CriterionResult r{id, name, false, "", 0.0};
    auto t0 = Clock::now();
    try {
        std::string err = body(r.detail);
        r.pass = err.empty();
        if (!err.empty()) r.detail = err;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string check_oracle_pair(const Graph& g) {
    bool fast = recognize_2sat(g).is_1po;
    bool slow = recognize_bruteforce(g).is_1po;
    if (fast == slow) return "";
    std::ostringstream msg;
    msg << "verdict mismatch on " << to_graph6(g) << ": 2sat=" << fast << " brute=" << slow;
    return msg.str();
}

// Expected out-neighborhoods of the raft-product orientation, one rule per
// layout part; returns an error description or "".
std::string raft_case_errors(const Orientation& d, const P3RaftLayout& layout) {
    const Graph& prod = d.base();
    const int n = layout.n;
    auto expect = [&](int v, const std::vector<int>& want) -> std::string {
        Bits w(prod.n());
        for (int x : want) w.set(x);
        if (d.out_neighbors(v) == w) return "";
        return "out-neighborhood mismatch at vertex " + std::to_string(v) + " for order " +
               std::to_string(n);
    };
    auto from = [&](const std::vector<int>& clique, int first_pos) {
        std::vector<int> out;
        for (int s = first_pos; s <= n; ++s) out.push_back(clique[s - 1]);
        return out;
    };
    auto cat = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    std::string err;
    auto check = [&](int v, const std::vector<int>& want) {
        if (err.empty()) err = expect(v, want);
    };
    check(layout.a, cat(from(layout.A2, 1), from(layout.A3, 1)));
    check(layout.b, cat(from(layout.B2, 1), from(layout.B3, 1)));
    for (int t = 1; t <= n; ++t) {
        check(layout.A1[t - 1], cat(cat({layout.a}, from(layout.A1, t + 1)), from(layout.A2, 1)));
        check(layout.B1[t - 1], cat(cat({layout.b}, from(layout.B1, t + 1)), from(layout.B2, 1)));
        check(layout.A2[t - 1], cat(cat(from(layout.A2, t + 1), from(layout.A3, t + 1)),
                                    cat(from(layout.B1, n - t + 1), from(layout.B2, n - t + 1))));
        check(layout.A3[t - 1], cat(cat(from(layout.A2, t), from(layout.A3, t + 1)),
                                    cat(from(layout.B1, n - t + 1), from(layout.B2, n - t + 1))));
        check(layout.B2[t - 1], cat(cat(from(layout.B2, t + 1), from(layout.B3, t + 1)),
                                    from(layout.A1, n - t + 1)));
        check(layout.B3[t - 1], cat(cat(from(layout.B2, t), from(layout.B3, t + 1)),
                                    cat(from(layout.A1, n - t + 1), from(layout.A2, n - t + 1))));
    }
    for (int s : layout.simplicial) check(s, prod.neighbors(s).to_vector());
    return err;
}

// Every co-chain graph up to isomorphism arises from clique sizes (p, q) and a
// non-decreasing cross-degree sequence; x_i sees the top c_i vertices of Y.
void for_each_co_chain_graph(int max_n, const std::function<void(const Graph&)>& fn) {
    for (int total = 1; total <= max_n; ++total) {
        for (int p = 0; p <= total; ++p) {
            int q = total - p;
            std::vector<int> c(p, 0);
            std::function<void(int, int)> rec = [&](int i, int low) {
                if (i == p) {
                    Graph g(total);
                    for (int a = 0; a < p; ++a)
                        for (int b = a + 1; b < p; ++b) g.add_edge(a, b);
                    for (int a = 0; a < q; ++a)
                        for (int b = a + 1; b < q; ++b) g.add_edge(p + a, p + b);
                    for (int a = 0; a < p; ++a)
                        for (int j = q - c[a]; j < q; ++j) g.add_edge(a, p + j);
                    fn(g);
                    return;
                }
                for (int v = low; v <= q; ++v) {
                    c[i] = v;
                    rec(i + 1, v);
                }
            };
            rec(0, 0);
        }
    }
}

}  // namespace

CriterionResult criterion_recognizer_oracle() {
    return timed(1, "recognizer agrees with the brute-force oracle", [](std::string& detail) {
        auto t0 = Clock::now();
        int checked = 0;
        for (const Graph& g : all_labeled_graphs(5)) {
            if (std::string err = check_oracle_pair(g); !err.empty()) return err;
            ++checked;
        }
        std::mt19937 rng(20250810);
        std::uniform_int_distribution<int> order(6, 8);
        std::uniform_real_distribution<double> density(0.15, 0.85);
        int random_checked = 0;
        while (random_checked < 10000) {
            Graph g = random_graph(order(rng), density(rng), rng);
            if (g.m() > 24) continue;
            if (std::string err = check_oracle_pair(g); !err.empty()) return err;
            ++random_checked;
        }
        double secs = seconds_since(t0);
        std::ostringstream d;
        d << checked << " labeled 5-vertex graphs + " << random_checked << " random 6-8-vertex graphs";
        detail = d.str();
        if (secs >= 60.0) return std::string("runtime budget exceeded (60 s)");
        return std::string();
    });
}

CriterionResult criterion_theorem_sweep(int jobs) {
    return timed(2, "product deciders agree with the recognizer on all 2..5-vertex factor pairs",
                 [jobs](std::string& detail) {
                     auto t0 = Clock::now();
                     std::vector<Graph> catalog;
                     for (int n = 2; n <= 5; ++n)
                         for (const Graph& g : canonical_graphs(n)) catalog.push_back(g);
                     if (catalog.size() != 51)
                         return std::string("catalog size is ") + std::to_string(catalog.size()) +
                                ", expected 51";

                     const std::vector<std::pair<DecideKind, ProductKind>> kinds = {
                         {DecideKind::Cartesian, ProductKind::Cartesian},
                         {DecideKind::Lexicographic, ProductKind::Lexicographic},
                         {DecideKind::Direct, ProductKind::Direct},
                         {DecideKind::Strong, ProductKind::Strong},
                     };
                     const int per_kind = static_cast<int>(catalog.size() * catalog.size());
                     const int total = per_kind * static_cast<int>(kinds.size());
                     DecideOptions opts;
                     opts.want_witness = false;

                     std::atomic<int> mismatches{0};
                     std::mutex example_mutex;
                     std::string example;
                     parallel_for(0, total, jobs, [&](int task) {
                         int kind_ix = task / per_kind;
                         int rest = task % per_kind;
                         const Graph& g = catalog[rest / catalog.size()];
                         const Graph& h = catalog[rest % catalog.size()];
                         Verdict v = decide(kinds[kind_ix].first, g, h, opts);
                         bool truth = recognize_2sat(product(kinds[kind_ix].second, g, h)).is_1po;
                         if (v.is_1po != truth) {
                             mismatches.fetch_add(1);
                             std::lock_guard<std::mutex> lock(example_mutex);
                             if (example.empty())
                                 example = to_string(kinds[kind_ix].first) + " " + to_graph6(g) + " x " +
                                           to_graph6(h);
                         }
                     });
                     double secs = seconds_since(t0);
                     std::ostringstream d;
                     d << total << " ordered factor pairs across four products";
                     detail = d.str();
                     if (mismatches.load() > 0)
                         return std::to_string(mismatches.load()) + " disagreements, first at " + example;
                     if (secs >= 600.0) return std::string("runtime budget exceeded (10 min)");
                     return std::string();
                 });
}

CriterionResult criterion_raft_orientation() {
    return timed(3, "raft-product construction is 1-perfect with the expected out-neighborhoods",
                 [](std::string& detail) {
                     auto t0 = Clock::now();
                     for (int n = 1; n <= 50; ++n) {
                         Orientation d = orient_p3_strong_raft(n);
                         if (!is_one_perfect(d))
                             return "orientation for order " + std::to_string(n) + " is not 1-perfect";
                         if (n <= 10) {
                             if (std::string err = raft_case_errors(d, make_p3_raft_layout(n)); !err.empty())
                                 return err;
                         }
                     }
                     detail = "orders 1..50 verified, out-neighborhood shapes checked for 1..10";
                     if (seconds_since(t0) >= 10.0) return std::string("runtime budget exceeded (10 s)");
                     return std::string();
                 });
}

CriterionResult criterion_co_chain_equivalence() {
    return timed(4, "co-chain partition <=> {P5,C4,C5,claw,bull}-free <=> {3K1,C4,C5}-free (connected, <=7)",
                 [](std::string& detail) {
                     const std::vector<Graph> patterns = {path_graph(5), cycle_graph(4), cycle_graph(5),
                                                          claw(), bull()};
                     int checked = 0;
                     for (int n = 1; n <= 7; ++n) {
                         for (const Graph& g : canonical_connected_graphs(n)) {
                             auto part = co_chain_partition(g);
                             if (part && !verify_co_chain_partition(g, *part))
                                 return "invalid partition emitted for " + to_graph6(g);
                             bool five_free = true;
                             for (const Graph& pat : patterns)
                                 if (pat.n() <= g.n() && find_induced_subgraph(g, pat)) {
                                     five_free = false;
                                     break;
                                 }
                             bool three_free = is_co_chain_via_forbidden(g);
                             if (part.has_value() != five_free || five_free != three_free)
                                 return "three-way disagreement on " + to_graph6(g);
                             ++checked;
                         }
                     }
                     detail = std::to_string(checked) + " connected graphs on up to 7 vertices";
                     return std::string();
                 });
}

CriterionResult criterion_ttf_classification() {
    return timed(5, "connected true-twin-free co-chain graphs classify and rebuild (<=12 vertices)",
                 [](std::string& detail) {
                     int classified = 0;
                     std::string err;
                     std::set<std::pair<int, int>> seen_kinds;  // (kind, order)
                     for_each_co_chain_graph(12, [&](const Graph& g) {
                         if (!err.empty()) return;
                         if (!is_connected(g)) return;
                         if (static_cast<int>(true_twin_reduction(g).kept.size()) != g.n()) return;
                         CoChainTTFClass cls = classify_ttf_co_chain(g);
                         Graph rebuilt;
                         switch (cls.kind) {
                             case CoChainTTFClass::IsK1: rebuilt = Graph(1); break;
                             case CoChainTTFClass::IsRaft: rebuilt = raft(cls.order); break;
                             case CoChainTTFClass::IsRaftJoinK1:
                                 rebuilt = join(raft(cls.order), Graph(1));
                                 break;
                             case CoChainTTFClass::NotCoChainTTF:
                                 err = "classification failed on " + to_graph6(g);
                                 return;
                         }
                         if (!is_isomorphic(rebuilt, g)) {
                             err = "rebuilt form is not isomorphic to " + to_graph6(g);
                             return;
                         }
                         seen_kinds.emplace(static_cast<int>(cls.kind), cls.order);
                         ++classified;
                     });
                     if (!err.empty()) return err;
                     // the family members of each order up to 12 vertices must all appear
                     for (int n = 1; n <= 5; ++n)
                         if (!seen_kinds.count({CoChainTTFClass::IsRaft, n}))
                             return "raft of order " + std::to_string(n) + " never enumerated";
                     for (int n = 0; n <= 4; ++n)
                         if (!seen_kinds.count({CoChainTTFClass::IsRaftJoinK1, n}))
                             return "raft-join of order " + std::to_string(n) + " never enumerated";
                     detail = std::to_string(classified) + " connected true-twin-free co-chain graphs";
                     return std::string();
                 });
}

CriterionResult criterion_figure_reproductions() {
    return timed(6, "forbidden structures found inside the expected products", [](std::string& detail) {
        const Graph k23 = complete_bipartite(2, 3);
        const std::vector<std::pair<std::string, Graph>> minor_hosts = {
            {"strong(P3,C4)", strong(path_graph(3), cycle_graph(4))},
            {"strong(P3,C5)", strong(path_graph(3), cycle_graph(5))},
            {"strong(P3,claw)", strong(path_graph(3), claw())},
            {"strong(P3,bull)", strong(path_graph(3), bull())},
            {"direct(P3,claw)", direct(path_graph(3), claw())},
            {"direct(P3,C4)", direct(path_graph(3), cycle_graph(4))},
            {"direct(C3,claw)", direct(cycle_graph(3), claw())},
        };
        for (const auto& [name, host] : minor_hosts) {
            auto w = find_induced_minor(host, k23);
            if (!w) return "no K2,3 induced minor found in " + name;
            if (!verify_minor_witness(host, k23, *w)) return "K2,3 witness for " + name + " is invalid";
        }
        const std::vector<std::tuple<std::string, Graph, Graph>> embedding_hosts = {
            {"direct(P4,P4)", direct(path_graph(4), path_graph(4)), domino()},
            {"strong(P4,P4)", strong(path_graph(4), path_graph(4)), domino()},
            {"direct(C3,C3)", direct(cycle_graph(3), cycle_graph(3)), complement(cycle_graph(6))},
        };
        for (const auto& [name, host, pattern] : embedding_hosts) {
            auto e = find_induced_subgraph(host, pattern);
            if (!e) return "pattern not found inside " + name;
            if (!verify_embedding(host, pattern, *e)) return "embedding for " + name + " is invalid";
        }
        detail = "7 induced-minor models and 3 induced embeddings, all re-verified";
        return std::string();
    });
}

CriterionResult criterion_closure_suite() {
    return timed(7, "twin/universal/simplicial extensions and disjoint unions preserve the property",
                 [](std::string& detail) {
                     int extensions = 0;
                     for (int n = 1; n <= 6; ++n) {
                         for (const Graph& g : canonical_graphs(n)) {
                             auto rec = recognize_2sat(g);
                             if (!rec.is_1po) continue;
                             const Orientation& d = *rec.certificate;
                             for (int v = 0; v < g.n(); ++v) {
                                 if (!is_one_perfect(extend_true_twin(d, v)))
                                     return "twin extension broke 1-perfection on " + to_graph6(g);
                                 ++extensions;
                             }
                             if (!is_one_perfect(extend_universal(d)))
                                 return "universal extension broke 1-perfection on " + to_graph6(g);
                             ++extensions;
                             for (const VertexSet& clique : all_cliques(g)) {
                                 if (!is_one_perfect(extend_simplicial(d, clique)))
                                     return "simplicial extension broke 1-perfection on " + to_graph6(g);
                                 ++extensions;
                             }
                         }
                     }
                     int unions = 0;
                     std::vector<Graph> small;
                     for (int n = 1; n <= 5; ++n)
                         for (const Graph& g : canonical_graphs(n))
                             if (recognize_2sat(g).is_1po) small.push_back(g);
                     for (const Graph& a : small)
                         for (const Graph& b : small) {
                             if (!recognize_2sat(disjoint_union(a, b)).is_1po)
                                 return "disjoint union of " + to_graph6(a) + " and " + to_graph6(b) +
                                        " not recognized";
                             ++unions;
                         }
                     detail = std::to_string(extensions) + " extensions, " + std::to_string(unions) +
                              " disjoint unions";
                     return std::string();
                 });
}

CriterionResult criterion_known_classes() {
    return timed(8, "trees, cycles, chordal graphs and pseudoforests recognized; fixtures rejected",
                 [](std::string& detail) {
                     long long yes = 0;
                     for (int n = 1; n <= 8; ++n)
                         for (const Graph& t : labeled_trees(n)) {
                             if (!recognize_2sat(t).is_1po) return "tree not recognized: " + to_graph6(t);
                             ++yes;
                         }
                     for (int n = 3; n <= 8; ++n) {
                         if (!recognize_2sat(cycle_graph(n)).is_1po)
                             return "cycle C" + std::to_string(n) + " not recognized";
                         ++yes;
                     }
                     for (int n = 1; n <= 8; ++n)
                         for (const Graph& g : canonical_chordal_graphs(n)) {
                             if (!recognize_2sat(g).is_1po)
                                 return "chordal graph not recognized: " + to_graph6(g);
                             ++yes;
                         }
                     std::string err;
                     long long pf = 0;
                     for (int n = 1; n <= 8; ++n)
                         for_each_labeled_pseudoforest(n, [&](const Graph& g) {
                             if (!err.empty()) return;
                             if (!recognize_2sat(g).is_1po) err = "pseudoforest not recognized: " + to_graph6(g);
                             ++pf;
                         });
                     if (!err.empty()) return err;
                     for (const auto& [name, g] : forbidden_catalog())
                         if (recognize_2sat(g).is_1po) return name + " wrongly recognized as orientable";
                     std::ostringstream d;
                     d << yes << " member graphs accepted, " << pf << " pseudoforests accepted, 3 fixtures rejected";
                     detail = d.str();
                     return std::string();
                 });
}

std::vector<CriterionResult> run_quick(int jobs, bool inject_failure) {
    (void)jobs;
    std::vector<CriterionResult> out;
    out.push_back(timed(1, "oracle equivalence on all labeled graphs with up to 4 vertices",
                        [](std::string& detail) {
                            int checked = 0;
                            for (int n = 1; n <= 4; ++n)
                                for (const Graph& g : all_labeled_graphs(n)) {
                                    if (std::string err = check_oracle_pair(g); !err.empty()) return err;
                                    ++checked;
                                }
                            detail = std::to_string(checked) + " graphs";
                            return std::string();
                        }));
    out.push_back(timed(2, "forbidden catalog self-checks", [inject_failure](std::string& detail) {
        for (const auto& [name, g] : forbidden_catalog()) {
            bool expected = inject_failure;  // the catalog must never be recognized
            if (recognize_2sat(g).is_1po != expected)
                return "catalog check failed for " + name;
        }
        detail = "3 fixtures";
        return std::string();
    }));
    out.push_back(timed(3, "raft-product orientations up to order 5", [](std::string& detail) {
        for (int n = 1; n <= 5; ++n) {
            Orientation d = orient_p3_strong_raft(n);
            if (!is_one_perfect(d)) return "order " + std::to_string(n) + " not 1-perfect";
            if (std::string err = raft_case_errors(d, make_p3_raft_layout(n)); !err.empty()) return err;
        }
        detail = "orders 1..5";
        return std::string();
    }));
    return out;
}

std::vector<CriterionResult> run_full(int jobs) {
    canonical_graphs(5);  // warm the shared caches before any parallel section
    std::vector<CriterionResult> out;
    out.push_back(criterion_recognizer_oracle());
    out.push_back(criterion_theorem_sweep(jobs));
    out.push_back(criterion_raft_orientation());
    out.push_back(criterion_co_chain_equivalence());
    out.push_back(criterion_ttf_classification());
    out.push_back(criterion_figure_reproductions());
    out.push_back(criterion_closure_suite());
    out.push_back(criterion_known_classes());
    return out;
}

}  // namespace orientkit
