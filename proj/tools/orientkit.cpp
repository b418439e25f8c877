// Command-line front end: recognition, orientation construction, product
// building, the product/join deciders and the self-test sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orientkit/characterize.hpp"
#include "orientkit/enumerate.hpp"
#include "orientkit/fixtures.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/products.hpp"
#include "orientkit/selftest.hpp"
#include "orientkit/structure.hpp"

using nlohmann::json;
using namespace orientkit;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

Graph load_graph(const std::string& source) {
    if (!source.empty() && source[0] == '@') {
        if (auto g = fixture_by_name(source)) return *g;
        throw std::invalid_argument("unknown fixture " + source);
    }
    std::string text;
    if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(source, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open " + source);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    bool graph6_ext = source.size() > 3 && source.substr(source.size() - 3) == ".g6";
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty graph input");
    bool looks_edge_list = text[first] >= '0' && text[first] <= '9';
    std::vector<std::string> warnings;
    Graph g = (graph6_ext || !looks_edge_list) ? parse_graph6(text.substr(first))
                                               : parse_edge_list(text, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return g;
}

json orientation_json(const Orientation& d) {
    json arcs = json::array();
    for (auto [tail, head] : d.arcs()) arcs.push_back({tail, head});
    return {{"n", d.base().n()}, {"arcs", arcs}};
}

json witness_json(const Witness& w) {
    json out{{"pattern", w.pattern}};
    if (w.embedding) {
        out["kind"] = "induced-subgraph";
        out["embedding"] = w.embedding->mapping;
    } else if (w.minor) {
        out["kind"] = "induced-minor";
        out["branch_sets"] = w.minor->branch_sets;
        out["deleted"] = w.minor->deleted;
    }
    return out;
}

json verdict_json(const Verdict& v) {
    json out{{"kind", to_string(v.kind)}, {"is_1po", v.is_1po}, {"condition", v.condition}};
    if (v.certificate) out["certificate"] = orientation_json(*v.certificate);
    if (v.witness) out["witness"] = witness_json(*v.witness);
    return out;
}

void write_file_or_fail(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

struct CommonFlags {
    std::string format = "json";
};

int cmd_recognize(const std::string& input, bool brute, const CommonFlags& flags) {
    Graph g = load_graph(input);
    RecognitionResult r = brute ? recognize_bruteforce(g) : recognize_2sat(g);
    if (flags.format == "text") {
        std::cout << (r.is_1po ? "1-perfectly orientable" : "not 1-perfectly orientable") << '\n';
        if (r.certificate) std::cout << to_orientation_text(*r.certificate);
        if (r.core) std::cout << "reason: " << r.core->reason << '\n';
    } else {
        json out{{"is_1po", r.is_1po}};
        if (r.certificate) out["certificate"] = orientation_json(*r.certificate);
        if (r.core) {
            json edges = json::array();
            for (auto [u, v] : r.core->edges) edges.push_back({u, v});
            out["core"] = {{"reason", r.core->reason}, {"edges", edges}};
        }
        std::cout << out.dump() << '\n';
    }
    return r.is_1po ? kExitYes : kExitNo;
}

int cmd_orient(const std::string& input, int raft_product_order, const std::string& check_path,
               const std::string& out_path, const CommonFlags& flags) {
    if (!check_path.empty()) {
        std::ifstream in(check_path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open " + check_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        bool ok = is_one_perfect(parse_orientation_text(buf.str()));
        if (flags.format == "text")
            std::cout << (ok ? "1-perfect" : "not 1-perfect") << '\n';
        else
            std::cout << json{{"is_one_perfect", ok}}.dump() << '\n';
        return ok ? kExitYes : kExitNo;
    }
    Orientation d;
    if (raft_product_order >= 0) {
        d = orient_p3_strong_raft(raft_product_order);
    } else {
        Graph g = load_graph(input);
        RecognitionResult r = recognize_2sat(g);
        if (!r.is_1po) {
            std::cerr << "graph admits no 1-perfect orientation\n";
            return kExitNo;
        }
        d = std::move(*r.certificate);
    }
    if (!out_path.empty())
        write_file_or_fail(out_path, to_orientation_text(d));
    else if (flags.format == "text")
        std::cout << to_orientation_text(d);
    else
        std::cout << orientation_json(d).dump() << '\n';
    return kExitYes;
}

int cmd_product(const std::string& kind_name, const std::string& g_spec, const std::string& h_spec,
                const std::string& out_path) {
    ProductKind kind;
    if (kind_name == "cartesian")
        kind = ProductKind::Cartesian;
    else if (kind_name == "lex")
        kind = ProductKind::Lexicographic;
    else if (kind_name == "direct")
        kind = ProductKind::Direct;
    else if (kind_name == "strong")
        kind = ProductKind::Strong;
    else
        throw std::invalid_argument("unknown product kind " + kind_name);
    Graph p = product(kind, load_graph(g_spec), load_graph(h_spec));
    std::string line = to_graph6(p) + "\n";
    if (!out_path.empty())
        write_file_or_fail(out_path, line);
    else
        std::cout << line;
    return kExitYes;
}

int cmd_decide(const std::string& kind_name, const std::string& g_spec, const std::string& h_spec,
               const std::string& cert_path, bool no_witness, const CommonFlags& flags) {
    DecideKind kind;
    if (kind_name == "cartesian")
        kind = DecideKind::Cartesian;
    else if (kind_name == "lex")
        kind = DecideKind::Lexicographic;
    else if (kind_name == "direct")
        kind = DecideKind::Direct;
    else if (kind_name == "strong")
        kind = DecideKind::Strong;
    else if (kind_name == "join")
        kind = DecideKind::Join;
    else
        throw std::invalid_argument("unknown decide kind " + kind_name);

    Graph g = load_graph(g_spec);
    Graph h = load_graph(h_spec);
    if (kind != DecideKind::Join && (g.n() < 2 || h.n() < 2))
        throw std::invalid_argument("product deciders need both factors to have at least 2 vertices");

    DecideOptions opts;
    opts.want_witness = !no_witness;
    Verdict v = decide(kind, g, h, opts);
    if (flags.format == "text") {
        std::cout << to_string(v.kind) << ": " << (v.is_1po ? "1-perfectly orientable" : "not 1-perfectly orientable")
                  << " [" << v.condition << "]\n";
        if (v.witness) std::cout << "witness: " << witness_json(*v.witness).dump() << '\n';
    } else {
        std::cout << verdict_json(v).dump() << '\n';
    }
    if (v.certificate && !cert_path.empty()) write_file_or_fail(cert_path, to_orientation_text(*v.certificate));
    return v.is_1po ? kExitYes : kExitNo;
}

int cmd_catalog(const CommonFlags& flags) {
    json out = json::array();
    for (const auto& [name, g] : forbidden_catalog()) {
        if (flags.format == "text")
            std::cout << name << "  " << to_graph6(g) << "  n=" << g.n() << " m=" << g.m()
                      << "  is_1po=false\n";
        else
            out.push_back({{"name", name}, {"graph6", to_graph6(g)}, {"n", g.n()}, {"m", g.m()},
                           {"is_1po", false}});
    }
    if (flags.format != "text") std::cout << out.dump() << '\n';
    return kExitYes;
}

int cmd_selftest(const std::string& level, int jobs, bool inject_failure) {
    auto results = level == "full" ? run_full(jobs) : run_quick(jobs, inject_failure);
    bool all_pass = true;
    for (const auto& r : results) {
        char line[64];
        std::snprintf(line, sizeof line, "  (%.3f s)", r.seconds);
        std::cout << (r.pass ? "PASS" : "FAIL") << "  check " << r.id << ": " << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << line << '\n';
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-perfectly orientable graph toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* recognize = app.add_subcommand("recognize", "decide whether a graph is 1-perfectly orientable");
    std::string rec_input;
    bool rec_brute = false;
    recognize->add_option("input", rec_input, "graph file, '-' for stdin, or @fixture")->required();
    recognize->add_flag("--brute", rec_brute, "use the exhaustive oracle (at most 24 edges)");
    recognize->add_option("--format", flags.format)->check(CLI::IsMember({"json", "text"}));

    auto* orient = app.add_subcommand("orient", "emit or verify a 1-perfect orientation");
    std::string or_input, or_out, or_check;
    int or_raft = -1;
    orient->add_option("input", or_input, "graph file, '-' or @fixture");
    orient->add_option("--raft-product", or_raft,
                       "emit the constructive orientation of strong(P3, raft(N)) instead");
    orient->add_option("--check", or_check, "verify an orientation text file instead of emitting one");
    orient->add_option("--out", or_out, "write the orientation text format to this path");
    orient->add_option("--format", flags.format)->check(CLI::IsMember({"json", "text"}));

    auto* productc = app.add_subcommand("product", "build a product graph, output in graph6");
    std::string pr_kind, pr_g, pr_h, pr_out;
    productc->add_option("--kind", pr_kind)->required()->check(CLI::IsMember({"cartesian", "lex", "direct", "strong"}));
    productc->add_option("g-file", pr_g)->required();
    productc->add_option("h-file", pr_h)->required();
    productc->add_option("--out", pr_out);

    auto* decidec = app.add_subcommand("decide", "run a product/join characterization decider");
    std::string de_kind, de_g, de_h, de_cert;
    bool de_no_witness = false;
    decidec->add_option("kind", de_kind)->required()->check(CLI::IsMember({"cartesian", "lex", "direct", "strong", "join"}));
    decidec->add_option("g-file", de_g)->required();
    decidec->add_option("h-file", de_h)->required();
    decidec->add_option("--cert-out", de_cert, "write the certificate orientation to this path");
    decidec->add_flag("--no-witness", de_no_witness, "skip the forbidden-structure witness search");
    decidec->add_option("--format", flags.format)->check(CLI::IsMember({"json", "text"}));

    auto* catalogc = app.add_subcommand("catalog", "list the known non-orientable fixtures");
    catalogc->add_option("--format", flags.format)->check(CLI::IsMember({"json", "text"}));

    auto* selftestc = app.add_subcommand("selftest", "run the built-in verification sweeps");
    std::string st_level = "quick";
    int st_jobs = 0;
    bool st_inject = false;
    selftestc->add_option("level", st_level)->check(CLI::IsMember({"quick", "full"}));
    selftestc->add_option("--jobs", st_jobs, "worker count (default: ORIENTKIT_JOBS or 1)");
    selftestc->add_flag("--inject-failure", st_inject)->group("");  // negative control, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitYes : kExitError;
    }

    if (st_jobs <= 0) {
        if (const char* env = std::getenv("ORIENTKIT_JOBS")) st_jobs = std::atoi(env);
        if (st_jobs <= 0) st_jobs = 1;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(rec_input, rec_brute, flags);
        if (orient->parsed()) {
            if (or_input.empty() && or_raft < 0 && or_check.empty())
                throw std::invalid_argument("orient needs an input graph, --raft-product N or --check FILE");
            return cmd_orient(or_input, or_raft, or_check, or_out, flags);
        }
        if (productc->parsed()) return cmd_product(pr_kind, pr_g, pr_h, pr_out);
        if (decidec->parsed()) return cmd_decide(de_kind, de_g, de_h, de_cert, de_no_witness, flags);
        if (catalogc->parsed()) return cmd_catalog(flags);
        if (selftestc->parsed()) return cmd_selftest(st_level, st_jobs, st_inject);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
