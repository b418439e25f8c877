#include "orientkit/characterize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "orientkit/fixtures.hpp"
#include "orientkit/structure.hpp"

namespace orientkit {

std::string to_string(DecideKind kind) {
    switch (kind) {
        case DecideKind::Cartesian: return "cartesian";
        case DecideKind::Lexicographic: return "lexicographic";
        case DecideKind::Direct: return "direct";
        case DecideKind::Strong: return "strong";
        case DecideKind::Join: return "join";
    }
    return "?";
}

const std::vector<std::pair<std::string, Graph>>& forbidden_catalog() {
    static const std::vector<std::pair<std::string, Graph>> catalog = [] {
        std::vector<std::pair<std::string, Graph>> c{
            {"K2,3", complete_bipartite(2, 3)},
            {"domino", domino()},
            {"complement-of-C6", complement(cycle_graph(6))},
        };
        for (const auto& [name, g] : c)
            if (recognize_bruteforce(g).is_1po)
                throw std::logic_error("catalog fixture " + name + " failed its negative self-check");
        return c;
    }();
    return catalog;
}

std::optional<Witness> find_forbidden_witness(const Graph& host, long long budget) {
    for (const auto& [name, pat] : forbidden_catalog()) {
        if (pat.n() > host.n()) continue;
        if (auto emb = find_induced_subgraph(host, pat, budget)) return Witness{name, emb, std::nullopt};
    }
    for (const auto& [name, pat] : forbidden_catalog()) {
        if (pat.n() > host.n()) continue;
        if (auto mw = find_induced_minor(host, pat, budget)) return Witness{name, std::nullopt, mw};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// the explicit orientation of strong(P3, raft(n))

P3RaftLayout make_p3_raft_layout(int n) {
    if (n < 1) throw std::invalid_argument("raft-product layout needs order >= 1");
    PairIndex ix{3, 2 * (n + 1)};
    auto y = [&](int j) { return n + 1 + j; };
    P3RaftLayout layout;
    layout.n = n;
    layout.a = ix.id(1, 0);
    layout.b = ix.id(1, y(0));
    for (int i = 1; i <= n; ++i) {
        layout.A1.push_back(ix.id(0, i));
        layout.A2.push_back(ix.id(1, i));
        layout.A3.push_back(ix.id(2, i));
        layout.B1.push_back(ix.id(2, y(i)));
        layout.B2.push_back(ix.id(1, y(i)));
        layout.B3.push_back(ix.id(0, y(i)));
    }
    layout.simplicial = {ix.id(0, 0), ix.id(2, 0), ix.id(0, y(0)), ix.id(2, y(0))};
    return layout;
}

namespace {

enum class Part { ApexA, ApexB, A1, A2, A3, B1, B2, B3, Simplicial };

struct PartPos {
    Part part;
    int pos;  // 1-based within the clique, 0 for apexes
};

std::vector<PartPos> part_map(const P3RaftLayout& layout, int total) {
    std::vector<PartPos> map(total, {Part::Simplicial, 0});
    map[layout.a] = {Part::ApexA, 0};
    map[layout.b] = {Part::ApexB, 0};
    auto tag = [&](const std::vector<int>& clique, Part part) {
        for (std::size_t i = 0; i < clique.size(); ++i) map[clique[i]] = {part, static_cast<int>(i) + 1};
    };
    tag(layout.A1, Part::A1);
    tag(layout.A2, Part::A2);
    tag(layout.A3, Part::A3);
    tag(layout.B1, Part::B1);
    tag(layout.B2, Part::B2);
    tag(layout.B3, Part::B3);
    return map;
}

std::optional<bool> rule_lookup(PartPos p, PartPos q) {
    auto pair_is = [&](Part x, Part y) { return p.part == x && q.part == y; };
    if (pair_is(Part::ApexA, Part::A1)) return false;
    if (pair_is(Part::ApexA, Part::A2) || pair_is(Part::ApexA, Part::A3)) return true;
    if (pair_is(Part::ApexB, Part::B1)) return false;
    if (pair_is(Part::ApexB, Part::B2) || pair_is(Part::ApexB, Part::B3)) return true;
    if (pair_is(Part::A1, Part::A2)) return true;
    if (pair_is(Part::A2, Part::A3)) return p.pos < q.pos;
    if (pair_is(Part::B1, Part::B2)) return true;
    if (pair_is(Part::B2, Part::B3)) return p.pos < q.pos;
    if (pair_is(Part::A1, Part::B3)) return false;
    if (pair_is(Part::A3, Part::B1)) return true;
    if (pair_is(Part::A1, Part::B2)) return false;
    if (pair_is(Part::A2, Part::B1)) return true;
    if (pair_is(Part::A3, Part::B2)) return true;
    if (pair_is(Part::A2, Part::B2)) return true;
    if (pair_is(Part::A2, Part::B3)) return false;
    return std::nullopt;
}

// True when p is the tail of the edge p-q under the fixed rule table.
bool rule_tail(PartPos p, PartPos q) {
    if (p.part == q.part) return p.pos < q.pos;
    if (auto hit = rule_lookup(p, q)) return *hit;
    if (auto hit = rule_lookup(q, p)) return !*hit;
    throw std::logic_error("raft-product edge between unrelated parts");
}

}  // namespace

Orientation orient_p3_strong_raft(int n) {
    if (n < 1)
        throw std::invalid_argument("orient_p3_strong_raft needs order >= 1; route order 0 inputs "
                                    "through the raft of order 2");
    const Graph prod = strong(path_graph(3), raft(n));
    const P3RaftLayout layout = make_p3_raft_layout(n);
    const auto parts = part_map(layout, prod.n());

    VertexSet core_vertices;
    for (int v = 0; v < prod.n(); ++v)
        if (parts[v].part != Part::Simplicial) core_vertices.push_back(v);

    Graph core = induced_subgraph(prod, core_vertices);
    Orientation d(core);
    core.for_each_edge([&](int i, int j) {
        PartPos p = parts[core_vertices[i]];
        PartPos q = parts[core_vertices[j]];
        if (rule_tail(p, q))
            d.orient(i, j);
        else
            d.orient(j, i);
    });

    // re-attach the four simplicial vertices in a fixed order
    std::vector<int> cur_to_prod = core_vertices;
    std::vector<int> prod_to_cur(prod.n(), -1);
    for (std::size_t i = 0; i < cur_to_prod.size(); ++i) prod_to_cur[cur_to_prod[i]] = static_cast<int>(i);
    for (int s : layout.simplicial) {
        VertexSet clique;
        prod.neighbors(s).for_each([&](int w) { clique.push_back(prod_to_cur[w]); });
        std::sort(clique.begin(), clique.end());
        d = extend_simplicial(d, clique);
        prod_to_cur[s] = static_cast<int>(cur_to_prod.size());
        cur_to_prod.push_back(s);
    }

    Orientation out = relabel(d, [&] {
        std::vector<int> perm(prod.n());
        for (int i = 0; i < prod.n(); ++i) perm[i] = cur_to_prod[i];
        return perm;
    }());
    if (out.base() != prod) throw std::logic_error("raft-product orientation lost its base graph");
    if (!is_one_perfect(out)) throw std::logic_error("raft-product orientation failed verification");
    return out;
}

// ---------------------------------------------------------------------------
// certificate assembly helpers

namespace {

TwinReduction identity_reduction(int n) {
    TwinReduction red;
    red.class_of.resize(n);
    for (int v = 0; v < n; ++v) {
        red.kept.push_back(v);
        red.classes.push_back({v});
        red.class_of[v] = v;
    }
    return red;
}

// Rebuilds an orientation of strong(g, h) from one of the reduced product
// strong(g[gr.kept], h[hr.kept]) by re-adding true twins, first along the g
// factor and then along h. Every extension re-verifies its input.
Orientation expand_strong_orientation(const Graph& g, const TwinReduction& gr, const Graph& h,
                                      const TwinReduction& hr, Orientation d) {
    const int kept_h = static_cast<int>(hr.kept.size());
    std::vector<int> id_of(g.n() * h.n(), -1);
    auto slot = [&](int u, int v) { return u * h.n() + v; };
    std::vector<char> g_kept(g.n(), 0), h_kept(h.n(), 0);
    for (int u : gr.kept) g_kept[u] = 1;
    for (int v : hr.kept) h_kept[v] = 1;
    for (int i = 0; i < static_cast<int>(gr.kept.size()); ++i)
        for (int j = 0; j < kept_h; ++j) id_of[slot(gr.kept[i], hr.kept[j])] = i * kept_h + j;

    for (int u = 0; u < g.n(); ++u) {
        if (g_kept[u]) continue;
        int r = gr.representative(u);
        for (int v : hr.kept) {
            d = extend_true_twin(d, id_of[slot(r, v)]);
            id_of[slot(u, v)] = d.base().n() - 1;
        }
    }
    for (int v = 0; v < h.n(); ++v) {
        if (h_kept[v]) continue;
        int rv = hr.representative(v);
        for (int u = 0; u < g.n(); ++u) {
            d = extend_true_twin(d, id_of[slot(u, rv)]);
            id_of[slot(u, v)] = d.base().n() - 1;
        }
    }

    std::vector<int> perm(d.base().n(), -1);
    for (int s = 0; s < g.n() * h.n(); ++s) perm[id_of[s]] = s;
    Orientation out = relabel(d, perm);
    if (out.base() != strong(g, h)) throw std::logic_error("twin expansion produced the wrong product");
    return out;
}

// Disjoint copies of cert_h along the rows of an edgeless first factor.
Orientation copies_orientation(const Graph& prod, int rows, const Orientation& cert_h) {
    PairIndex ix{rows, cert_h.base().n()};
    Orientation d(prod);
    for (int u = 0; u < rows; ++u)
        for (auto [a, b] : cert_h.arcs()) d.orient(ix.id(u, a), ix.id(u, b));
    return d;
}

// Copies of cert_g along the columns of an edgeless second factor.
Orientation copies_orientation_cols(const Graph& prod, const Orientation& cert_g, int cols) {
    PairIndex ix{cert_g.base().n(), cols};
    Orientation d(prod);
    for (int v = 0; v < cols; ++v)
        for (auto [a, b] : cert_g.arcs()) d.orient(ix.id(a, v), ix.id(b, v));
    return d;
}

// strong(g, h) with every component of g complete and cert_h given.
Orientation strong_i_certificate(const Graph& g, const Graph& h, const Orientation& cert_h) {
    TwinReduction gr = true_twin_reduction(g);  // classes are exactly the cliques
    Graph reduced_g = induced_subgraph(g, gr.kept);
    if (!is_edgeless(reduced_g)) throw std::logic_error("complete components should reduce to K1s");
    Orientation base = copies_orientation(strong(reduced_g, h), reduced_g.n(), cert_h);
    return expand_strong_orientation(g, gr, h, identity_reduction(h.n()), std::move(base));
}

// strong(g, h) with every component of g 2-complete and every component of h
// co-chain: reduce both factors to their true-twin reductions, orient each
// reduced component product constructively, then re-expand the twins.
Orientation strong_ii_certificate(const Graph& g, const Graph& h) {
    TwinReduction gr = true_twin_reduction(g);
    TwinReduction hr = true_twin_reduction(h);
    Graph gprime = induced_subgraph(g, gr.kept);
    Graph hprime = induced_subgraph(h, hr.kept);
    Graph prod = strong(gprime, hprime);
    PairIndex ix{gprime.n(), hprime.n()};

    const auto g_comps = components(gprime);
    const auto h_comps = components(hprime);
    std::vector<int> g_comp_of(gprime.n()), h_comp_of(hprime.n()), g_local(gprime.n()), h_local(hprime.n());
    for (std::size_t c = 0; c < g_comps.size(); ++c)
        for (std::size_t i = 0; i < g_comps[c].size(); ++i) {
            g_comp_of[g_comps[c][i]] = static_cast<int>(c);
            g_local[g_comps[c][i]] = static_cast<int>(i);
        }
    for (std::size_t c = 0; c < h_comps.size(); ++c)
        for (std::size_t i = 0; i < h_comps[c].size(); ++i) {
            h_comp_of[h_comps[c][i]] = static_cast<int>(c);
            h_local[h_comps[c][i]] = static_cast<int>(i);
        }

    // per g-component: -1 when the component is a single vertex, otherwise the
    // local id of the path's center and leaves in canonical order
    struct PathShape {
        bool is_p3 = false;
        std::array<int, 3> canon_to_local{};  // canonical path 0-1-2 -> local id
        std::array<int, 3> local_to_canon{};
    };
    std::vector<PathShape> g_shapes(g_comps.size());
    for (std::size_t c = 0; c < g_comps.size(); ++c) {
        Graph gc = induced_subgraph(gprime, g_comps[c]);
        if (gc.n() == 3 && gc.m() == 2) {
            PathShape shape;
            shape.is_p3 = true;
            int center = -1;
            std::vector<int> leaves;
            for (int v = 0; v < 3; ++v) {
                if (gc.degree(v) == 2)
                    center = v;
                else
                    leaves.push_back(v);
            }
            shape.canon_to_local = {leaves[0], center, leaves[1]};
            for (int k = 0; k < 3; ++k) shape.local_to_canon[shape.canon_to_local[k]] = k;
            g_shapes[c] = shape;
        } else if (gc.n() != 1) {
            throw std::logic_error("2-complete components should reduce to K1 or P3");
        }
    }

    struct CoChainShape {
        CoChainTTFClass cls;
        std::vector<int> local_to_canon;
        Orientation direct_cert;  // used when paired with K1 rows
    };
    std::vector<CoChainShape> h_shapes(h_comps.size());
    for (std::size_t c = 0; c < h_comps.size(); ++c) {
        Graph hc = induced_subgraph(hprime, h_comps[c]);
        CoChainShape& shape = h_shapes[c];
        if (hc.n() > 1) {
            shape.cls = classify_ttf_co_chain(hc);
            if (shape.cls.kind == CoChainTTFClass::NotCoChainTTF)
                throw std::logic_error("co-chain component failed to classify");
            shape.local_to_canon.assign(hc.n(), -1);
            for (std::size_t k = 0; k < shape.cls.iso.size(); ++k)
                shape.local_to_canon[shape.cls.iso[k]] = static_cast<int>(k);
        }
        auto rec = recognize_2sat(hc);
        if (!rec.is_1po) throw std::logic_error("co-chain component is not 1-perfectly orientable");
        shape.direct_cert = std::move(*rec.certificate);
    }

    // constructive orientations of strong(P3, raft(m)), cached by order
    std::map<int, Orientation> raft_products;
    auto raft_product = [&](int m) -> const Orientation& {
        auto it = raft_products.find(m);
        if (it == raft_products.end()) it = raft_products.emplace(m, orient_p3_strong_raft(m)).first;
        return it->second;
    };

    // canonical product vertex of (path position k, co-chain canonical label c)
    auto big_id = [&](const CoChainShape& shape, int k, int c) {
        if (shape.cls.kind == CoChainTTFClass::IsRaft) {
            int m = shape.cls.order;
            return k * (2 * (m + 1)) + c;
        }
        // raft-join-K1 of order m sits inside the raft of order m+2: raft
        // vertices shift one position inward and the apex becomes the top of
        // the x side
        int m = shape.cls.order;
        int phi;
        if (c <= m)
            phi = c + 1;                     // x_c -> x_{c+1}
        else if (c <= 2 * m + 1)
            phi = (m + 2) + 1 + (c - m);     // y_l -> y_{l+1}
        else
            phi = m + 2;                     // apex -> x_{m+2}
        return k * (2 * (m + 3)) + phi;
    };
    auto big_orientation = [&](const CoChainShape& shape) -> const Orientation& {
        int m = shape.cls.order;
        return raft_product(shape.cls.kind == CoChainTTFClass::IsRaft ? m : m + 2);
    };

    Orientation d(prod);
    prod.for_each_edge([&](int p, int q) {
        auto [u, v] = ix.pair_of(p);
        auto [u2, v2] = ix.pair_of(q);
        int gc = g_comp_of[u];
        int hc = h_comp_of[v];
        bool tail_first;
        if (!g_shapes[gc].is_p3) {
            // single row: the product component is the co-chain component itself
            tail_first = h_shapes[hc].direct_cert.directed(h_local[v], h_local[v2]);
        } else if (h_comps[hc].size() == 1) {
            // strong(P3, K1): orient the path toward its low leaf
            int a = g_shapes[gc].local_to_canon[g_local[u]];
            int b = g_shapes[gc].local_to_canon[g_local[u2]];
            tail_first = a > b;
        } else {
            const CoChainShape& shape = h_shapes[hc];
            const Orientation& big = big_orientation(shape);
            int c1 = big_id(shape, g_shapes[gc].local_to_canon[g_local[u]], shape.local_to_canon[h_local[v]]);
            int c2 = big_id(shape, g_shapes[gc].local_to_canon[g_local[u2]], shape.local_to_canon[h_local[v2]]);
            tail_first = big.directed(c1, c2);
        }
        d.orient(tail_first ? p : q, tail_first ? q : p);
    });
    if (!is_one_perfect(d)) throw std::logic_error("reduced strong-product orientation failed verification");

    return expand_strong_orientation(g, gr, h, hr, std::move(d));
}

Verdict yes_verdict(DecideKind kind, std::string condition, Orientation certificate) {
    if (!is_one_perfect(certificate)) throw std::logic_error("decider certificate failed verification");
    return {kind, true, std::move(condition), std::move(certificate), std::nullopt};
}

Verdict no_verdict(DecideKind kind, const Graph& prod, const DecideOptions& opts) {
    Verdict v{kind, false, "none", std::nullopt, std::nullopt};
    if (opts.want_witness) v.witness = find_forbidden_witness(prod, opts.witness_budget);
    return v;
}

Verdict trivial_verdict(DecideKind kind, const Graph& prod, const DecideOptions& opts) {
    auto rec = recognize_2sat(prod);
    Verdict v{kind, rec.is_1po, "trivial-product", std::move(rec.certificate), std::nullopt};
    if (!v.is_1po && opts.want_witness) v.witness = find_forbidden_witness(prod, opts.witness_budget);
    return v;
}

bool nontrivial(const Graph& g, const Graph& h) { return g.n() >= 2 && h.n() >= 2; }

// transposes an orientation of strong/cartesian/direct(h, g) onto (g, h) labels
Orientation transpose_product(const Orientation& d, int g_n, int h_n) {
    std::vector<int> perm(g_n * h_n);
    for (int v = 0; v < h_n; ++v)
        for (int u = 0; u < g_n; ++u) perm[v * g_n + u] = u * h_n + v;
    return relabel(d, perm);
}

}  // namespace

Verdict decide_cartesian(const Graph& g, const Graph& h, const DecideOptions& opts) {
    const DecideKind kind = DecideKind::Cartesian;
    if (!nontrivial(g, h)) return trivial_verdict(kind, cartesian(g, h), opts);
    Graph prod = cartesian(g, h);

    for (int side = 0; side < 2; ++side) {
        const Graph& a = side ? h : g;
        const Graph& b = side ? g : h;
        if (!is_edgeless(a)) continue;
        auto rec = recognize_2sat(b);
        if (!rec.is_1po) return no_verdict(kind, prod, opts);
        Orientation cert = side ? copies_orientation_cols(prod, *rec.certificate, h.n())
                                : copies_orientation(prod, g.n(), *rec.certificate);
        return yes_verdict(kind, side ? "Thm-Cartesian (i, swapped)" : "Thm-Cartesian (i)", std::move(cert));
    }
    if (is_k_linear_forest(g, 2) && is_k_linear_forest(h, 2)) {
        // every product component is K1, K2 or C4
        return yes_verdict(kind, "Thm-Cartesian (ii)", orient_pseudoforest(prod));
    }
    return no_verdict(kind, prod, opts);
}

Verdict decide_lexicographic(const Graph& g, const Graph& h, const DecideOptions& opts) {
    const DecideKind kind = DecideKind::Lexicographic;
    if (!nontrivial(g, h)) return trivial_verdict(kind, lexicographic(g, h), opts);
    Graph prod = lexicographic(g, h);

    if (is_edgeless(g)) {
        auto rec = recognize_2sat(h);
        if (!rec.is_1po) return no_verdict(kind, prod, opts);
        return yes_verdict(kind, "Thm-Lexicographic (i)", copies_orientation(prod, g.n(), *rec.certificate));
    }
    if (is_complete(h)) {
        auto rec = recognize_2sat(g);
        if (!rec.is_1po) return no_verdict(kind, prod, opts);
        // substituting complete graphs is a sequence of true twin additions;
        // with h complete the lexicographic and strong products coincide
        Orientation cert = expand_strong_orientation(g, identity_reduction(g.n()), h,
                                                     true_twin_reduction(h), *rec.certificate);
        return yes_verdict(kind, "Thm-Lexicographic (ii)", std::move(cert));
    }
    if (components_all_complete(g) && is_co_bipartite(h)) {
        auto rec_h = recognize_2sat(h);
        if (rec_h.is_1po) {
            auto rec = recognize_2sat(prod);
            if (!rec.is_1po) throw std::logic_error("lexicographic clause (iii) disagreed with the recognizer");
            return yes_verdict(kind, "Thm-Lexicographic (iii)", std::move(*rec.certificate));
        }
    }
    return no_verdict(kind, prod, opts);
}

Verdict decide_direct(const Graph& g, const Graph& h, const DecideOptions& opts) {
    const DecideKind kind = DecideKind::Direct;
    if (!nontrivial(g, h)) return trivial_verdict(kind, direct(g, h), opts);
    Graph prod = direct(g, h);

    if (is_edgeless(g) || is_edgeless(h))
        return yes_verdict(kind, is_edgeless(g) ? "Thm-Direct (i)" : "Thm-Direct (i, swapped)",
                           Orientation(prod));
    // in clauses (ii) and (iii) every component of the product is a pseudotree
    if (is_k_linear_forest(g, 2) && is_pseudoforest(h))
        return yes_verdict(kind, "Thm-Direct (ii)", orient_pseudoforest(prod));
    if (is_k_linear_forest(h, 2) && is_pseudoforest(g))
        return yes_verdict(kind, "Thm-Direct (ii, swapped)", orient_pseudoforest(prod));
    if (is_k_linear_forest(g, 3) && is_k_linear_forest(h, 4))
        return yes_verdict(kind, "Thm-Direct (iii)", orient_pseudoforest(prod));
    if (is_k_linear_forest(h, 3) && is_k_linear_forest(g, 4))
        return yes_verdict(kind, "Thm-Direct (iii, swapped)", orient_pseudoforest(prod));
    return no_verdict(kind, prod, opts);
}

Verdict decide_strong(const Graph& g, const Graph& h, const DecideOptions& opts) {
    const DecideKind kind = DecideKind::Strong;
    if (!nontrivial(g, h)) return trivial_verdict(kind, strong(g, h), opts);
    Graph prod = strong(g, h);

    if (components_all_complete(g)) {
        auto rec = recognize_2sat(h);
        if (rec.is_1po)
            return yes_verdict(kind, "Thm-Strong (i)", strong_i_certificate(g, h, *rec.certificate));
    }
    if (components_all_complete(h)) {
        auto rec = recognize_2sat(g);
        if (rec.is_1po)
            return yes_verdict(kind, "Thm-Strong (i, swapped)",
                               transpose_product(strong_i_certificate(h, g, *rec.certificate), g.n(), h.n()));
    }
    if (components_all_2_complete(g) && components_all_co_chain(h))
        return yes_verdict(kind, "Thm-Strong (ii)", strong_ii_certificate(g, h));
    if (components_all_2_complete(h) && components_all_co_chain(g))
        return yes_verdict(kind, "Thm-Strong (ii, swapped)",
                           transpose_product(strong_ii_certificate(h, g), g.n(), h.n()));
    return no_verdict(kind, prod, opts);
}

Verdict decide_join(const Graph& g, const Graph& h, const DecideOptions& opts) {
    const DecideKind kind = DecideKind::Join;
    Graph prod = join(g, h);

    std::string condition;
    if (is_complete(g) && recognize_2sat(h).is_1po)
        condition = "Thm-Join (i)";
    else if (is_complete(h) && recognize_2sat(g).is_1po)
        condition = "Thm-Join (i, swapped)";
    else if (is_co_bipartite(g) && is_co_bipartite(h) && recognize_2sat(g).is_1po &&
             recognize_2sat(h).is_1po)
        condition = "Thm-Join (ii)";
    else
        return no_verdict(kind, prod, opts);

    auto rec = recognize_2sat(prod);
    if (!rec.is_1po) throw std::logic_error("join clause disagreed with the recognizer");
    return yes_verdict(kind, std::move(condition), std::move(*rec.certificate));
}

Verdict decide(DecideKind kind, const Graph& g, const Graph& h, const DecideOptions& opts) {
    switch (kind) {
        case DecideKind::Cartesian: return decide_cartesian(g, h, opts);
        case DecideKind::Lexicographic: return decide_lexicographic(g, h, opts);
        case DecideKind::Direct: return decide_direct(g, h, opts);
        case DecideKind::Strong: return decide_strong(g, h, opts);
        case DecideKind::Join: return decide_join(g, h, opts);
    }
    throw std::invalid_argument("unknown decide kind");
}

}  // namespace orientkit
