#include "splitoff/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace splitoff {

namespace {

// Strips comments and splits into whitespace tokens; returns false at EOF.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        tokens.clear();
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) return true;
    }
    return false;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
    }
}

Rational parse_cost(const std::string& tok, int line_no) {
    try {
        return parse_rational(tok);
    } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
}

}  // namespace

MultiGraph parse_graph(std::istream& in) {
    std::vector<std::string> tok;
    int line_no = 0;
    if (!next_tokens(in, tok, line_no)) throw ParseError("empty graph file");
    if (tok.size() != 3 || tok[0] != "multigraph")
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'multigraph <n> <m>'");
    const int n = parse_int(tok[1], line_no, "vertex count");
    const int m = parse_int(tok[2], line_no, "edge count");
    if (n < 0 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": negative size");

    MultiGraph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_tokens(in, tok, line_no))
            throw ParseError("unexpected end of file: expected " + std::to_string(m) +
                             " edge lines, got " + std::to_string(i));
        if (tok.size() != 3)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected '<u> <v> <cost>'");
        const int u = parse_int(tok[0], line_no, "vertex");
        const int v = parse_int(tok[1], line_no, "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
        g.add_edge(u, v, parse_cost(tok[2], line_no), Provenance::input(i));
    }
    if (next_tokens(in, tok, line_no))
        throw ParseError("line " + std::to_string(line_no) + ": trailing content");
    return g;
}

MultiGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const MultiGraph& g) {
    std::ostringstream out;
    out << "multigraph " << g.vertex_slots() << ' ' << g.live_edge_count() << '\n';
    for (EdgeId id : g.live_edges()) {
        const EdgeRecord& rec = g.edge(id);
        out << rec.u << ' ' << rec.v << ' ' << render_rational(rec.cost) << '\n';
    }
    return out.str();
}

HalfIntegralSolution parse_solution(std::istream& in) {
    std::vector<std::string> tok;
    int line_no = 0;
    if (!next_tokens(in, tok, line_no)) throw ParseError("empty solution file");
    if (tok.size() != 2 || tok[0] != "subtour")
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'subtour <n>'");
    HalfIntegralSolution s;
    s.n = parse_int(tok[1], line_no, "vertex count");
    if (s.n < 2) throw ParseError("line " + std::to_string(line_no) + ": need n >= 2");

    bool in_costs = false;
    while (next_tokens(in, tok, line_no)) {
        if (tok.size() == 1 && tok[0] == "costs") {
            if (in_costs) throw ParseError("line " + std::to_string(line_no) +
                                           ": duplicate costs section");
            in_costs = true;
            continue;
        }
        const std::size_t want = in_costs ? 3 : 4;
        if (tok.size() != want)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             (in_costs ? "'<u> <v> <cost>'" : "'<u> <v> <x> <cost>'"));
        const int u = parse_int(tok[0], line_no, "vertex");
        const int v = parse_int(tok[1], line_no, "vertex");
        if (u < 0 || v < 0 || u >= s.n || v >= s.n || u == v)
            throw ParseError("line " + std::to_string(line_no) + ": bad vertex pair");
        const auto p = std::make_pair(std::min(u, v), std::max(u, v));
        if (in_costs) {
            if (s.cost.count(p))
                throw ParseError("line " + std::to_string(line_no) + ": duplicate cost pair");
            s.cost[p] = parse_cost(tok[2], line_no);
        } else {
            if (s.x.count(p))
                throw ParseError("line " + std::to_string(line_no) + ": duplicate pair");
            s.x[p] = parse_cost(tok[2], line_no);
            const Rational c = parse_cost(tok[3], line_no);
            if (c < 0)
                throw ParseError("line " + std::to_string(line_no) + ": negative cost");
            s.cost[p] = c;
        }
    }
    return s;
}

HalfIntegralSolution load_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solution file '" + path + "'");
    return parse_solution(in);
}

std::string serialize_solution(const HalfIntegralSolution& s) {
    std::ostringstream out;
    out << "subtour " << s.n << '\n';
    for (const auto& [p, q] : s.x)
        out << p.first << ' ' << p.second << ' ' << render_rational(q) << ' '
            << render_rational(s.cost.at(p)) << '\n';
    bool header = false;
    for (const auto& [p, c] : s.cost) {
        if (s.x.count(p)) continue;
        if (!header) {
            out << "costs\n";
            header = true;
        }
        out << p.first << ' ' << p.second << ' ' << render_rational(c) << '\n';
    }
    return out.str();
}

std::string input_hash_hex(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace {

nlohmann::json pair_edges_json(const std::map<std::pair<int, int>, int>& mult) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [p, k] : mult)
        edges.push_back({{"u", p.first}, {"v", p.second}, {"multiplicity", k}});
    return edges;
}

}  // namespace

nlohmann::json certificate_json(const TwoThirdsResult& r, const MultiGraph& g, EdgeId e,
                                const std::string& input_hash) {
    std::map<std::pair<int, int>, int> by_pair;
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& [id, k] : r.edges.mult) {
        const EdgeRecord& rec = g.edge(id);
        by_pair[{std::min(rec.u, rec.v), std::max(rec.u, rec.v)}] += k;
        ids.push_back(id);
    }
    return nlohmann::json{
        {"algorithm", "two_thirds"},
        {"input_hash", input_hash},
        {"designated_edge", e},
        {"edges", pair_edges_json(by_pair)},
        {"edge_ids", ids},
        {"cost", render_rational(r.cost)},
        {"bound", render_rational(r.bound)},
        {"bound_holds", r.bound_holds},
        {"checks",
         {{"two_edge_connected_spanning", r.two_edge_connected_spanning},
          {"multiplicity_at_most_once", r.multiplicity_ok},
          {"designated_excluded", r.designated_excluded}}},
        {"trace_length", static_cast<int>(r.trace.steps.size())},
    };
}

nlohmann::json certificate_json(const HalfIntegralResult& r, const std::string& input_hash) {
    return nlohmann::json{
        {"algorithm", "half_integral"},
        {"input_hash", input_hash},
        {"designated_edge", {r.designated.first, r.designated.second}},
        {"edges", pair_edges_json(r.multiplicity)},
        {"lp_value", render_rational(r.lp_value)},
        {"cost", render_rational(r.cost)},
        {"bound", render_rational(r.bound)},
        {"bound_holds", r.bound_holds},
        {"checks",
         {{"two_edge_connected_spanning", r.two_edge_connected_spanning},
          {"multiplicity_at_most_two", r.multiplicity_ok}}},
        {"trace_length", r.trace_length},
    };
}

nlohmann::json certificate_json(const Cubic78Result& r, const MultiGraph& g,
                                const std::string& input_hash) {
    std::map<std::pair<int, int>, int> by_pair;
    for (const auto& [id, k] : r.edges.mult) {
        const EdgeRecord& rec = g.edge(id);
        by_pair[{std::min(rec.u, rec.v), std::max(rec.u, rec.v)}] += k;
    }
    return nlohmann::json{
        {"algorithm", "cubic78"},
        {"input_hash", input_hash},
        {"edges", pair_edges_json(by_pair)},
        {"cost", render_rational(r.cost)},
        {"cost_h1", render_rational(r.cost_h1)},
        {"cost_h2", render_rational(r.cost_h2)},
        {"bound", render_rational(r.bound)},
        {"bound_holds", r.bound_holds},
        {"checks",
         {{"two_edge_connected_spanning", r.two_edge_connected_spanning},
          {"multiplicity_at_most_two", r.multiplicity_ok}}},
        {"trace_length", r.trace_length},
    };
}

nlohmann::json decomposition_json(const ConvexCombination& comb, const ConvexCheck& check,
                                  const MultiGraph& g, EdgeId e, const std::string& input_hash) {
    (void)g;
    nlohmann::json items = nlohmann::json::array();
    for (const auto& [weight, h] : comb.items) {
        nlohmann::json ids = nlohmann::json::array();
        for (const auto& [id, k] : h.mult) {
            (void)k;
            ids.push_back(id);
        }
        items.push_back({{"weight", render_rational(weight)}, {"edge_ids", ids}});
    }
    return nlohmann::json{
        {"algorithm", "convex_decomposition"},
        {"input_hash", input_hash},
        {"designated_edge", e},
        {"items", items},
        {"item_count", static_cast<int>(comb.items.size())},
        {"checks",
         {{"weights_sum_to_one", check.weights_sum_to_one},
          {"identity_holds", check.identity_holds},
          {"all_two_edge_connected", check.all_two_edge_connected},
          {"multiplicities_ok", check.multiplicities_ok}}},
    };
}

}  // namespace splitoff
