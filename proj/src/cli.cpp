#include "splitoff/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitoff/connectivity.hpp"
#include "splitoff/convex_oracle.hpp"
#include "splitoff/cubic78.hpp"
#include "splitoff/generate.hpp"
#include "splitoff/half_integral.hpp"
#include "splitoff/io.hpp"
#include "splitoff/two_thirds.hpp"

namespace splitoff {

namespace {

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw ParseError("cannot open output file '" + out + "'");
    f << text;
}

void emit_json(const nlohmann::json& j, const std::string& out) {
    emit(j.dump(2) + "\n", out);
}

// Maps library exceptions to the documented exit codes.
int guarded(const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace

Limits Limits::parse(const std::string& text) {
    Limits out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad SPLITOFF_LIMITS entry '" + item + "' (expected key=value)");
        const std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("bad SPLITOFF_LIMITS value in '" + item + "'");
        }
        if (key == "convex") out.convex = value;
        else if (key == "brute") out.brute = value;
        else if (key == "factor") out.factor = value;
        else throw ParseError("unknown SPLITOFF_LIMITS key '" + key + "'");
    }
    return out;
}

Limits Limits::from_env() {
    const char* env = std::getenv("SPLITOFF_LIMITS");
    if (!env) return Limits{};
    return parse(env);
}

int cmd_two_thirds(const std::string& graph_file, int edge, const std::string& out) {
    return guarded([&] {
        const MultiGraph g = load_graph_file(graph_file);
        if (edge < 0 || edge >= g.edge_slots())
            throw DomainError("edge id " + std::to_string(edge) + " out of range (0.." +
                              std::to_string(g.edge_slots() - 1) + ")");
        const TwoThirdsResult r = solve_two_thirds(g, edge);
        emit_json(certificate_json(r, g, edge, input_hash_hex(serialize_graph(g))), out);
    });
}

int cmd_half_integral(const std::string& solution_file,
                      std::optional<std::pair<int, int>> edge, bool best_edge,
                      const std::string& out) {
    return guarded([&] {
        const HalfIntegralSolution s = load_solution_file(solution_file);
        const SolutionValidation rep = validate_solution(s);
        if (!rep.structurally_feasible()) {
            std::ostringstream why;
            if (!rep.half_integral) {
                why << "not half-integral";
                if (rep.bad_entry)
                    why << " at pair (" << rep.bad_entry->first << "," << rep.bad_entry->second
                        << ")";
            } else if (!rep.degrees_ok) {
                why << "degree constraint violated at vertex " << *rep.bad_degree_vertex;
            } else {
                why << "cut constraint violated; witness S = {";
                for (std::size_t i = 0; i < rep.bad_cut_side.size(); ++i)
                    why << (i ? "," : "") << rep.bad_cut_side[i];
                why << "}";
            }
            throw DomainError("infeasible solution: " + why.str());
        }
        if (!rep.metric_ok)
            std::cerr << "warning: costs are not metric; the 4/3 guarantee presumes metric "
                         "costs, the reported bound still holds for this feasible point\n";
        const HalfIntegralResult r = solve_half_integral(s, edge, best_edge);
        emit_json(certificate_json(r, input_hash_hex(serialize_solution(s))), out);
    });
}

int cmd_convex(const std::string& graph_file, int edge, std::optional<int> limit,
               const std::string& out) {
    return guarded([&] {
        const MultiGraph g = load_graph_file(graph_file);
        if (edge < 0 || edge >= g.edge_slots())
            throw DomainError("edge id " + std::to_string(edge) + " out of range");
        const int fence = limit ? *limit : Limits::from_env().convex;
        const ConvexCombination comb = convex_decomposition(g, edge, fence);
        const ConvexCheck check = verify_convex_combination(g, edge, comb);
        emit_json(decomposition_json(comb, check, g, edge, input_hash_hex(serialize_graph(g))),
                  out);
    });
}

int cmd_cubic78(const std::string& graph_file, bool best_factor, const std::string& out) {
    return guarded([&] {
        const MultiGraph g = load_graph_file(graph_file);
        Cubic78Options opt;
        opt.try_all_factors = best_factor;
        opt.factor_limit = Limits::from_env().factor;
        const Cubic78Result r = solve_cubic_seven_eighths(g, opt);
        emit_json(certificate_json(r, g, input_hash_hex(serialize_graph(g))), out);
    });
}

int cmd_generate(const std::string& kind, int n, std::uint64_t seed, const std::string& costs,
                 const std::string& out) {
    return guarded([&] {
        MultiGraph g;
        if (kind == "circulant") g = make_circulant_c12(n);
        else if (kind == "doubled-cycle") g = make_doubled_cycle(n);
        else if (kind == "random-4reg4ec") g = random_4reg_4ec(n, seed);
        else if (kind == "cubic") g = random_cubic_3ec(n, seed);
        else throw DomainError("unknown kind '" + kind + "'");
        if (costs == "random") {
            // 4-regular instances may carry negative costs; cubic inputs must not.
            assign_random_costs(g, seed + 1, kind == "cubic" ? 0 : -10, 10);
        } else if (costs != "unit") {
            throw DomainError("unknown cost model '" + costs + "' (unit or random)");
        }
        emit(serialize_graph(g), out);
    });
}

namespace {

// Re-checks every claim of a certificate against the instance file.
struct VerifyReport {
    bool all = true;
    void check(const std::string& name, bool ok) {
        all = all && ok;
        std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    }
};

void verify_two_thirds(const nlohmann::json& cert, const MultiGraph& g, VerifyReport& rep) {
    const EdgeId e = cert.at("designated_edge").get<int>();
    EdgeMultiset h;
    for (const auto& id : cert.at("edge_ids")) h.add(id.get<int>());
    bool mult_ok = true;
    for (const auto& [id, k] : h.mult)
        if (k != 1 || !g.edge_alive(id)) mult_ok = false;
    rep.check("multiplicity_at_most_once", mult_ok);
    rep.check("designated_excluded", !h.contains(e));
    rep.check("two_edge_connected_spanning", is_two_edge_connected_spanning(g, h));
    const Rational cost = total_cost(g, h);
    rep.check("cost_matches", cost == parse_rational(cert.at("cost").get<std::string>()));
    const Rational bound = Rational(2, 3) * (g.cost_of_live_edges() - g.edge(e).cost);
    rep.check("bound_matches", bound == parse_rational(cert.at("bound").get<std::string>()));
    rep.check("bound_holds", cost <= bound && cert.at("bound_holds").get<bool>());
    // The pair list must agree with the id list.
    std::map<std::pair<int, int>, int> by_pair;
    for (const auto& [id, k] : h.mult) {
        const EdgeRecord& rec = g.edge(id);
        by_pair[{std::min(rec.u, rec.v), std::max(rec.u, rec.v)}] += k;
    }
    std::map<std::pair<int, int>, int> listed;
    for (const auto& item : cert.at("edges"))
        listed[{item.at("u").get<int>(), item.at("v").get<int>()}] =
            item.at("multiplicity").get<int>();
    rep.check("edges_match_ids", by_pair == listed);
}

void verify_half_integral(const nlohmann::json& cert, const HalfIntegralSolution& s,
                          VerifyReport& rep) {
    std::map<std::pair<int, int>, int> mult;
    for (const auto& item : cert.at("edges"))
        mult[{item.at("u").get<int>(), item.at("v").get<int>()}] =
            item.at("multiplicity").get<int>();
    bool mult_ok = true;
    Rational cost(0);
    for (const auto& [p, k] : mult) {
        if (k < 1 || k > 2 || !s.cost.count(p)) {
            mult_ok = false;
            continue;
        }
        cost += Rational(k) * s.cost.at(p);
    }
    rep.check("multiplicity_at_most_two", mult_ok);
    rep.check("two_edge_connected_spanning", is_two_edge_connected_pair_multiset(s.n, mult));
    rep.check("cost_matches", cost == parse_rational(cert.at("cost").get<std::string>()));
    const Rational lp = s.lp_value();
    rep.check("lp_value_matches", lp == parse_rational(cert.at("lp_value").get<std::string>()));
    const Rational bound = Rational(4, 3) * lp;
    rep.check("bound_matches", bound == parse_rational(cert.at("bound").get<std::string>()));
    rep.check("bound_holds", cost <= bound && cert.at("bound_holds").get<bool>());
}

void verify_convex(const nlohmann::json& cert, const MultiGraph& g, VerifyReport& rep) {
    const EdgeId e = cert.at("designated_edge").get<int>();
    ConvexCombination comb;
    for (const auto& item : cert.at("items")) {
        EdgeMultiset h;
        for (const auto& id : item.at("edge_ids")) h.add(id.get<int>());
        comb.items.push_back(
            {parse_rational(item.at("weight").get<std::string>()), std::move(h)});
    }
    const ConvexCheck check = verify_convex_combination(g, e, comb);
    rep.check("weights_sum_to_one", check.weights_sum_to_one);
    rep.check("identity_holds", check.identity_holds);
    rep.check("all_two_edge_connected", check.all_two_edge_connected);
    rep.check("multiplicities_ok", check.multiplicities_ok);
}

void verify_cubic78(const nlohmann::json& cert, const MultiGraph& g, VerifyReport& rep) {
    std::map<std::pair<int, int>, int> mult;
    for (const auto& item : cert.at("edges"))
        mult[{item.at("u").get<int>(), item.at("v").get<int>()}] =
            item.at("multiplicity").get<int>();
    std::map<std::pair<int, int>, Rational> pair_cost;
    for (EdgeId id : g.live_edges()) {
        const EdgeRecord& rec = g.edge(id);
        pair_cost[{std::min(rec.u, rec.v), std::max(rec.u, rec.v)}] = rec.cost;
    }
    bool mult_ok = true;
    Rational cost(0);
    for (const auto& [p, k] : mult) {
        if (k < 1 || k > 2 || !pair_cost.count(p)) {
            mult_ok = false;
            continue;
        }
        cost += Rational(k) * pair_cost.at(p);
    }
    rep.check("multiplicity_at_most_two", mult_ok);
    rep.check("two_edge_connected_spanning",
              is_two_edge_connected_pair_multiset(g.vertex_slots(), mult));
    rep.check("cost_matches", cost == parse_rational(cert.at("cost").get<std::string>()));
    const Rational bound = Rational(7, 8) * g.cost_of_live_edges();
    rep.check("bound_matches", bound == parse_rational(cert.at("bound").get<std::string>()));
    rep.check("bound_holds", cost <= bound && cert.at("bound_holds").get<bool>());
}

}  // namespace

int cmd_verify(const std::string& certificate_file, const std::string& instance_file) {
    int rc = guarded([&] {
        std::ifstream cf(certificate_file);
        if (!cf) throw ParseError("cannot open certificate '" + certificate_file + "'");
        nlohmann::json cert;
        cf >> cert;
        const std::string algorithm = cert.at("algorithm").get<std::string>();

        VerifyReport rep;
        if (algorithm == "half_integral") {
            const HalfIntegralSolution s = load_solution_file(instance_file);
            rep.check("input_hash_matches",
                      input_hash_hex(serialize_solution(s)) ==
                          cert.at("input_hash").get<std::string>());
            verify_half_integral(cert, s, rep);
        } else {
            const MultiGraph g = load_graph_file(instance_file);
            rep.check("input_hash_matches",
                      input_hash_hex(serialize_graph(g)) ==
                          cert.at("input_hash").get<std::string>());
            if (algorithm == "two_thirds") verify_two_thirds(cert, g, rep);
            else if (algorithm == "convex_decomposition") verify_convex(cert, g, rep);
            else if (algorithm == "cubic78") verify_cubic78(cert, g, rep);
            else throw ParseError("unknown certificate algorithm '" + algorithm + "'");
        }
        std::cout << (rep.all ? "VERIFIED" : "REJECTED") << "\n";
        if (!rep.all) throw DomainError("certificate verification failed");
    });
    return rc;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact-approximation toolkit for 2-edge-connected spanning multisubgraphs"};
    app.require_subcommand(1);

    std::string graph_file, solution_file, cert_file, instance_file, out;
    int edge = 0;
    bool best_edge = false, best_factor = false;
    std::string edge_pair;
    std::string kind = "circulant", costs = "unit";
    int n = 8;
    std::uint64_t seed = 1;

    auto* two = app.add_subcommand("two-thirds",
                                   "2EC spanning subgraph of G - e with cost <= (2/3) c(G - e)");
    two->add_option("graph", graph_file, "graph file")->required();
    two->add_option("--edge", edge, "designated edge id")->required();
    two->add_option("-o,--out", out, "write the certificate here");

    auto* half = app.add_subcommand("half-integral",
                                    "2ECM answer with cost <= (4/3) c^T x for a feasible "
                                    "half-integral point");
    half->add_option("solution", solution_file, "solution file")->required();
    half->add_option("--edge", edge_pair, "designated pair 'u,v'");
    half->add_flag("--best-edge", best_edge, "try every support record, keep the cheapest");
    half->add_option("-o,--out", out, "write the certificate here");

    auto* convex = app.add_subcommand("convex", "exact convex decomposition of (2/3) chi^{E-e}");
    convex->add_option("graph", graph_file, "graph file")->required();
    convex->add_option("--edge", edge, "designated edge id")->required();
    int limit_value = -1;
    convex->add_option("--limit", limit_value, "vertex limit override");
    convex->add_option("-o,--out", out, "write the decomposition here");

    auto* cubic = app.add_subcommand("cubic78",
                                     "2ECM answer with cost <= (7/8) c(G) for cubic 3EC graphs");
    cubic->add_option("graph", graph_file, "graph file")->required();
    cubic->add_flag("--best-factor", best_factor, "try every qualifying 2-factor");
    cubic->add_option("-o,--out", out, "write the certificate here");

    auto* gen = app.add_subcommand("generate", "write a generated instance");
    gen->add_option("--kind", kind, "circulant | doubled-cycle | random-4reg4ec | cubic")
        ->required();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--costs", costs, "unit | random");
    gen->add_option("-o,--out", out, "write the graph here");

    auto* verify = app.add_subcommand("verify", "re-check every claim in a certificate");
    verify->add_option("certificate", cert_file, "certificate JSON")->required();
    verify->add_option("instance", instance_file, "the instance the certificate refers to")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    if (two->parsed()) return cmd_two_thirds(graph_file, edge, out);
    if (half->parsed()) {
        std::optional<std::pair<int, int>> pair;
        if (!edge_pair.empty()) {
            const auto comma = edge_pair.find(',');
            try {
                if (comma == std::string::npos) throw std::invalid_argument(edge_pair);
                pair = {std::stoi(edge_pair.substr(0, comma)),
                        std::stoi(edge_pair.substr(comma + 1))};
            } catch (const std::exception&) {
                std::cerr << "error: bad --edge value '" << edge_pair << "' (expected u,v)\n";
                return kExitInput;
            }
        }
        return cmd_half_integral(solution_file, pair, best_edge, out);
    }
    if (convex->parsed())
        return cmd_convex(graph_file, edge,
                          limit_value >= 0 ? std::optional<int>(limit_value) : std::nullopt, out);
    if (cubic->parsed()) return cmd_cubic78(graph_file, best_factor, out);
    if (gen->parsed()) return cmd_generate(kind, n, seed, costs, out);
    if (verify->parsed()) return cmd_verify(cert_file, instance_file);
    return kExitInput;
}

}  // namespace splitoff
