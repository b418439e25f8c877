#include "orientkit/fixtures.hpp"

#include <stdexcept>

#include "orientkit/products.hpp"
#include "orientkit/structure.hpp"

namespace orientkit {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph claw() { return complete_bipartite(1, 3); }

Graph bull() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}); }

Graph domino() { return cartesian(path_graph(3), complete_graph(2)); }

Graph gem() { return join(path_graph(4), complete_graph(1)); }

std::optional<Graph> fixture_by_name(const std::string& name) {
    if (name.empty() || name[0] != '@') return std::nullopt;
    std::string body = name.substr(1);
    auto colon = body.find(':');
    std::string head = body.substr(0, colon);
    int arg = -1;
    if (colon != std::string::npos) {
        try {
            arg = std::stoi(body.substr(colon + 1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (arg < 0) return std::nullopt;
    }

    try {
        if (colon == std::string::npos) {
            if (head == "P3") return path_graph(3);
            if (head == "P4") return path_graph(4);
            if (head == "P5") return path_graph(5);
            if (head == "claw") return claw();
            if (head == "bull") return bull();
            if (head == "domino") return domino();
            if (head == "gem") return gem();
            if (head == "K2,3") return complete_bipartite(2, 3);
        } else {
            if (head == "raft") return raft(arg);
            if (head == "cycle") return cycle_graph(arg);
            if (head == "path") return path_graph(arg);
            if (head == "complete") return complete_graph(arg);
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace orientkit
