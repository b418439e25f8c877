#include "orientkit/minor.hpp"

#include <algorithm>
#include <numeric>

namespace orientkit {

namespace {

bool induces_connected(const Graph& g, const Bits& s) {
    int start = s.first();
    if (start < 0) return false;
    Bits seen(g.n());
    seen.set(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bits frontier = g.neighbors(v) & s;
        frontier.subtract(seen);
        frontier.for_each([&](int w) {
            seen.set(w);
            stack.push_back(w);
        });
    }
    return seen == s;
}

}  // namespace

bool verify_minor_witness(const Graph& host, const Graph& pattern, const MinorWitness& w) {
    if (static_cast<int>(w.branch_sets.size()) != pattern.n()) return false;
    Bits all(host.n());
    std::vector<Bits> sets;
    for (const VertexSet& bs : w.branch_sets) {
        if (bs.empty()) return false;
        Bits b(host.n());
        for (int v : bs) {
            if (v < 0 || v >= host.n() || all.test(v)) return false;
            all.set(v);
            b.set(v);
        }
        if (!induces_connected(host, b)) return false;
        sets.push_back(std::move(b));
    }
    for (int a = 0; a < pattern.n(); ++a) {
        Bits reach(host.n());
        sets[a].for_each([&](int v) { reach |= host.neighbors(v); });
        for (int b = a + 1; b < pattern.n(); ++b)
            if (pattern.adjacent(a, b) != reach.intersects(sets[b])) return false;
    }
    Bits deleted(host.n());
    for (int v : w.deleted) {
        if (v < 0 || v >= host.n() || all.test(v) || deleted.test(v)) return false;
        deleted.set(v);
    }
    return all.count() + deleted.count() == host.n();
}

namespace {

// Branch sets are grown one pattern vertex at a time. Candidate sets are
// enumerated as connected subsets with a fixed minimum vertex so that every
// subset is visited exactly once. Vertices adjacent to an earlier branch set
// whose pattern vertex is non-adjacent are excluded up front; the "at least
// one edge" requirement toward adjacent earlier sets is checked on completion.
struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    long long budget;
    std::vector<int> order;
    std::vector<Bits> sets;
    std::vector<Bits> set_nbhd;
    Bits used;
    bool exhausted_budget = false;

    MinorSearch(const Graph& host_, const Graph& pattern_, long long budget_)
        : host(host_), pattern(pattern_), budget(budget_), used(host_.n()) {
        order.resize(pattern.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
        sets.assign(pattern.n(), Bits(host.n()));
        set_nbhd.assign(pattern.n(), Bits(host.n()));
    }

    bool tick() {
        if (budget < 0) return true;
        if (budget == 0) {
            exhausted_budget = true;
            return false;
        }
        --budget;
        return true;
    }

    bool assign(int idx) {
        if (idx == pattern.n()) return true;
        int p = order[idx];
        Bits allowed(host.n());
        for (int v = 0; v < host.n(); ++v)
            if (!used.test(v)) allowed.set(v);
        for (int j = 0; j < idx; ++j)
            if (!pattern.adjacent(p, order[j])) allowed.subtract(set_nbhd[j]);
        int max_size = host.n() - used.count() - (pattern.n() - idx - 1);
        if (max_size <= 0) return false;
        for (int r = allowed.first(); r >= 0; r = allowed.next(r)) {
            Bits gt_r = allowed;
            for (int v = gt_r.first(); v >= 0 && v <= r; v = gt_r.next(v)) gt_r.reset(v);
            Bits seed(host.n());
            seed.set(r);
            if (grow(idx, seed, host.neighbors(r) & gt_r, gt_r, max_size)) return true;
            if (exhausted_budget) return false;
        }
        return false;
    }

    bool grow(int idx, const Bits& s, const Bits& ext, const Bits& gt_r, int max_size) {
        if (!tick()) return false;
        int p = order[idx];
        Bits nbhd(host.n());
        s.for_each([&](int v) { nbhd |= host.neighbors(v); });
        bool complete = true;
        for (int j = 0; j < idx && complete; ++j)
            if (pattern.adjacent(p, order[j]) && !nbhd.intersects(sets[j])) complete = false;
        if (complete) {
            sets[idx] = s;
            set_nbhd[idx] = nbhd;
            used |= s;
            if (assign(idx + 1)) return true;
            used.subtract(s);
            if (exhausted_budget) return false;
        }
        if (s.count() == max_size) return false;
        Bits avoid(host.n());
        for (int v = ext.first(); v >= 0; v = ext.next(v)) {
            Bits s2 = s;
            s2.set(v);
            Bits ext2 = ext | (host.neighbors(v) & gt_r);
            ext2.subtract(s2);
            ext2.subtract(avoid);
            if (grow(idx, s2, ext2, gt_r, max_size)) return true;
            if (exhausted_budget) return false;
            avoid.set(v);
        }
        return false;
    }

    MinorWitness witness() const {
        MinorWitness w;
        Bits all(host.n());
        w.branch_sets.resize(pattern.n());
        for (int idx = 0; idx < pattern.n(); ++idx) {
            w.branch_sets[order[idx]] = sets[idx].to_vector();
            all |= sets[idx];
        }
        for (int v = 0; v < host.n(); ++v)
            if (!all.test(v)) w.deleted.push_back(v);
        return w;
    }
};

}  // namespace

std::optional<MinorWitness> find_induced_minor(const Graph& host, const Graph& pattern,
                                               long long node_budget) {
    if (pattern.n() > host.n()) return std::nullopt;
    if (pattern.n() == 0) {
        MinorWitness w;
        for (int v = 0; v < host.n(); ++v) w.deleted.push_back(v);
        return w;
    }
    MinorSearch search(host, pattern, node_budget);
    if (search.assign(0)) return search.witness();
    return std::nullopt;
}

}  // namespace orientkit
