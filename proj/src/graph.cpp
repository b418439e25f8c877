#include "orientkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace orientkit {

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph u(g.n() + h.n());
    g.for_each_edge([&](int a, int b) { u.add_edge(a, b); });
    h.for_each_edge([&](int a, int b) { u.add_edge(g.n() + a, g.n() + b); });
    return u;
}

Graph join(const Graph& g, const Graph& h) {
    Graph j = disjoint_union(g, h);
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < h.n(); ++b) j.add_edge(a, g.n() + b);
    return j;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) g.check_vertex(v);
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            g.neighbors(v).for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;  // ordered by minimum vertex because seeds increase
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) { return g.m() == g.n() * (g.n() - 1) / 2; }

bool is_edgeless(const Graph& g) { return g.m() == 0; }

bool is_clique(const Graph& g, const Bits& s) {
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        Bits rest = s;
        rest.reset(v);
        if (!rest.subset_of(g.neighbors(v))) return false;
    }
    return true;
}

namespace {

// Proper 2-coloring per component; the class holding each component's minimum
// vertex gets color 0. Returns std::nullopt on an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            bool odd = false;
            g.neighbors(v).for_each([&](int w) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    return color;
}

}  // namespace

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    auto color = two_coloring(g);
    if (!color) return std::nullopt;
    VertexSet a, b;
    for (int v = 0; v < g.n(); ++v) ((*color)[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

bool is_co_bipartite(const Graph& g) { return bipartition(complement(g)).has_value(); }

std::optional<int> distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    std::vector<int> dist(g.n(), -1);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) return dist[x];
        g.neighbors(x).for_each([&](int w) {
            if (dist[w] < 0) {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        });
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// graph6: header byte 63+n for n < 63 (126-prefixed 18-bit form above that),
// then the upper triangle column-major in 6-bit groups offset by 63.

Graph parse_graph6(const std::string& raw) {
    std::string text = raw;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    std::size_t pos = 0;
    const std::string optional_header = ">>graph6<<";
    if (text.rfind(optional_header, 0) == 0) pos = optional_header.size();
    if (pos >= text.size()) throw ParseError("empty graph6 payload", pos);

    auto byte_at = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 character out of range 63..126", i);
        return c;
    };

    long long n = 0;
    int b0 = byte_at(pos);
    if (b0 < 126) {
        n = b0 - 63;
        ++pos;
    } else {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw ParseError("graph6 orders above 258047 are not supported", pos);
        if (pos + 3 > text.size()) throw ParseError("truncated graph6 order", text.size());
        for (int k = 0; k < 3; ++k) n = (n << 6) | (byte_at(pos + k) - 63);
        pos += 3;
    }

    Graph g(static_cast<int>(n));
    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(text.size() - pos) < bytes_needed)
        throw ParseError("truncated graph6 bit vector", text.size());
    if (static_cast<long long>(text.size() - pos) > bytes_needed)
        throw ParseError("trailing data after graph6 bit vector", pos + bytes_needed);

    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int value = byte_at(pos + bit / 6) - 63;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // padding bits must be zero
    for (long long b = bits_needed; b < bytes_needed * 6; ++b) {
        int value = byte_at(pos + b / 6) - 63;
        if ((value >> (5 - b % 6)) & 1) throw ParseError("nonzero graph6 padding bit", pos + b / 6);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
    } else {
        throw std::invalid_argument("graph too large for the supported graph6 encoder");
    }
    long long bits = n * (n - 1) / 2;
    std::string data((bits + 5) / 6, 0);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) data[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : data) c = static_cast<char>(c + 63);
    return out + data;
}

// ---------------------------------------------------------------------------
// edge list: "n m" then m lines "u v"; '#' starts a comment.

Graph parse_edge_list(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::string, std::size_t>> rows;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t line_offset = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) rows.emplace_back(line, line_offset);
    }
    if (rows.empty()) throw ParseError("missing edge-list header line", 0);

    auto parse_two = [](const std::string& row, std::size_t row_offset, const char* what) {
        std::istringstream fields(row);
        long long a = 0, b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError(std::string("expected two integers for ") + what, row_offset);
        return std::make_pair(a, b);
    };

    auto [n, m] = parse_two(rows[0].first, rows[0].second, "the header");
    if (n < 0 || m < 0) throw ParseError("negative count in edge-list header", rows[0].second);
    if (static_cast<long long>(rows.size()) - 1 != m)
        throw ParseError("edge-list body has " + std::to_string(rows.size() - 1) + " lines, header promises " +
                             std::to_string(m),
                         rows.size() > 1 ? rows.back().second : rows[0].second);

    Graph g(static_cast<int>(n));
    int duplicates = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto [u, v] = parse_two(rows[i].first, rows[i].second, "an edge");
        if (u == v) throw ParseError("loop edge " + std::to_string(u), rows[i].second);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range 0.." + std::to_string(n - 1), rows[i].second);
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            ++duplicates;
        else
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (duplicates > 0 && warnings)
        warnings->push_back("collapsed " + std::to_string(duplicates) + " duplicate edge line(s)");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
    return out.str();
}

}  // namespace orientkit
