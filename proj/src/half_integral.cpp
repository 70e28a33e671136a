#include "splitoff/half_integral.hpp"

#include <algorithm>
#include <string>

#include "splitoff/connectivity.hpp"

namespace splitoff {

namespace {

std::pair<int, int> norm_pair(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

void check_pairs(const HalfIntegralSolution& s) {
    const auto check = [&](const std::map<std::pair<int, int>, Rational>& m, const char* what) {
        for (const auto& [p, q] : m) {
            (void)q;
            if (p.first < 0 || p.second >= s.n || p.first >= p.second)
                throw DomainError(std::string("solution ") + what + ": bad pair (" +
                                  std::to_string(p.first) + "," + std::to_string(p.second) + ")");
        }
    };
    check(s.x, "entries");
    check(s.cost, "costs");
}

}  // namespace

Rational HalfIntegralSolution::lp_value() const {
    Rational sum(0);
    for (const auto& [p, q] : x) {
        if (q == 0) continue;
        const auto it = cost.find(p);
        if (it == cost.end())
            throw DomainError("lp_value: missing cost for support pair (" +
                              std::to_string(p.first) + "," + std::to_string(p.second) + ")");
        sum += q * it->second;
    }
    return sum;
}

SolutionValidation validate_solution(const HalfIntegralSolution& s) {
    check_pairs(s);
    SolutionValidation rep;
    if (s.n < 2) return rep;  // nothing sensible to certify

    rep.half_integral = true;
    for (const auto& [p, q] : s.x) {
        const bool ok = s.n == 2 ? (q == 0 || q == 2)
                                 : (q == 0 || q == Rational(1, 2) || q == 1);
        if (!ok) {
            rep.half_integral = false;
            if (!rep.bad_entry) rep.bad_entry = p;
        }
    }

    std::vector<Rational> deg(s.n, Rational(0));
    for (const auto& [p, q] : s.x) {
        deg[p.first] += q;
        deg[p.second] += q;
    }
    rep.degrees_ok = true;
    for (int v = 0; v < s.n; ++v)
        if (deg[v] != 2) {
            rep.degrees_ok = false;
            if (!rep.bad_degree_vertex) rep.bad_degree_vertex = v;
        }

    // Cut feasibility: exact global minimum cut of the support with
    // capacities x must be at least 2.
    {
        MultiGraph supp(s.n);
        std::map<EdgeId, Rational> cap;
        for (const auto& [p, q] : s.x) {
            if (q <= 0) continue;
            const EdgeId id = supp.add_edge(p.first, p.second);
            cap[id] = q;
        }
        const GlobalCut cut = global_min_cut(supp, cap);
        rep.cuts_ok = cut.value >= 2;
        if (!rep.cuts_ok) rep.bad_cut_side = cut.side;
    }

    // Metric check: the given costs must equal their own shortest-path
    // closure (i.e. no path is cheaper than a direct edge) and must reach
    // every vertex.
    rep.metric_ok = true;
    for (const auto& [p, c] : s.cost) {
        (void)p;
        if (c < 0) rep.metric_ok = false;
    }
    if (rep.metric_ok) {
        MultiGraph costs(s.n);
        std::map<std::pair<int, int>, EdgeId> ids;
        for (const auto& [p, c] : s.cost) ids[p] = costs.add_edge(p.first, p.second, c);
        try {
            const auto closure = metric_closure(costs);
            for (const auto& [p, c] : s.cost)
                if (closure[p.first][p.second] != c) rep.metric_ok = false;
        } catch (const DomainError&) {
            rep.metric_ok = false;  // costs do not span all vertices
        }
    }
    return rep;
}

SupportGraph support_multigraph(const HalfIntegralSolution& s) {
    const SolutionValidation rep = validate_solution(s);
    if (!rep.structurally_feasible()) {
        std::string why;
        if (!rep.half_integral) why = "not half-integral";
        else if (!rep.degrees_ok) why = "degree constraint violated";
        else why = "cut constraint violated";
        throw DomainError("support_multigraph: solution is infeasible (" + why + ")");
    }

    SupportGraph out;
    out.graph = MultiGraph(s.n);
    for (const auto& [p, q] : s.x) {
        if (q <= 0) continue;
        const auto it = s.cost.find(p);
        if (it == s.cost.end())
            throw DomainError("support_multigraph: missing cost for support pair (" +
                              std::to_string(p.first) + "," + std::to_string(p.second) + ")");
        if (it->second < 0)
            throw DomainError("support_multigraph: negative cost on support pair");
        const int copies = (Rational(2) * q).convert_to<int>();  // 1, 2, or 4 (n = 2)
        const int original = static_cast<int>(out.original_pair.size());
        out.original_pair.push_back(p);
        for (int c = 0; c < copies; ++c)
            out.graph.add_edge(p.first, p.second, it->second, Provenance::input(original));
    }

    for (VertexId v : out.graph.live_vertices())
        if (out.graph.degree(v) != 4)
            throw InvariantError("support_multigraph: support is not 4-regular at vertex " +
                                 std::to_string(v));
    if (!is_k_edge_connected_excluding(out.graph, 4))
        throw InvariantError("support_multigraph: support is not 4-edge-connected");
    return out;
}

HalfIntegralResult solve_half_integral(const HalfIntegralSolution& s,
                                       std::optional<std::pair<int, int>> designated,
                                       bool try_all_edges) {
    const SupportGraph sup = support_multigraph(s);

    std::vector<EdgeId> candidates;
    if (try_all_edges) {
        candidates = sup.graph.live_edges();
    } else if (designated) {
        const auto want = norm_pair(designated->first, designated->second);
        for (EdgeId id : sup.graph.live_edges())
            if (sup.original_pair[sup.graph.edge(id).origin.a] == want) {
                candidates.push_back(id);
                break;
            }
        if (candidates.empty())
            throw DomainError("solve_half_integral: designated pair (" +
                              std::to_string(want.first) + "," + std::to_string(want.second) +
                              ") is not in the support");
    } else {
        candidates.push_back(0);
    }

    bool have = false;
    TwoThirdsResult best;
    EdgeId best_edge = -1;
    for (EdgeId e : candidates) {
        TwoThirdsResult r = solve_two_thirds(sup.graph, e);
        if (!have || r.cost < best.cost) {
            have = true;
            best = std::move(r);
            best_edge = e;
        }
    }

    HalfIntegralResult out;
    for (const auto& [id, k] : best.edges.mult) {
        const EdgeRecord& rec = sup.graph.edge(id);
        out.multiplicity[sup.original_pair[rec.origin.a]] += k;
    }
    out.cost = best.cost;
    out.lp_value = s.lp_value();
    out.bound = Rational(4, 3) * out.lp_value;
    out.bound_holds = out.cost <= out.bound;
    out.trace_length = static_cast<int>(best.trace.steps.size());
    out.designated = sup.original_pair[sup.graph.edge(best_edge).origin.a];
    out.two_edge_connected_spanning = is_two_edge_connected_pair_multiset(s.n, out.multiplicity);
    out.multiplicity_ok = true;
    for (const auto& [p, k] : out.multiplicity) {
        const auto it = s.x.find(p);
        const int copies = it == s.x.end() ? 0 : (Rational(2) * it->second).convert_to<int>();
        if (k > 2 || k > copies) out.multiplicity_ok = false;
    }
    return out;
}

MetricCompletion metric_complete_instance(const MultiGraph& raw) {
    if (!raw.all_vertices_alive())
        throw DomainError("metric_complete_instance: graph has dead vertices");
    const int n = raw.vertex_slots();

    MetricCompletion out;
    out.n = n;
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::vector<char>> known(n, std::vector<char>(n, 0));
    std::vector<std::vector<EdgeId>> direct(n, std::vector<EdgeId>(n, -1));
    std::vector<std::vector<int>> through(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) known[i][i] = 1;

    for (EdgeId id : raw.live_edges()) {
        const EdgeRecord& rec = raw.edge(id);
        if (rec.cost < 0)
            throw DomainError("metric_complete_instance: negative cost on edge " +
                              std::to_string(id));
        if (!known[rec.u][rec.v] || rec.cost < dist[rec.u][rec.v]) {
            dist[rec.u][rec.v] = dist[rec.v][rec.u] = rec.cost;
            known[rec.u][rec.v] = known[rec.v][rec.u] = 1;
            direct[rec.u][rec.v] = direct[rec.v][rec.u] = id;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!known[i][k]) continue;
            for (int j = 0; j < n; ++j) {
                if (!known[k][j] || i == j) continue;
                const Rational d = dist[i][k] + dist[k][j];
                if (!known[i][j] || d < dist[i][j]) {
                    dist[i][j] = d;
                    known[i][j] = 1;
                    through[i][j] = k;
                }
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!known[i][j]) throw DomainError("metric_complete_instance: graph is disconnected");

    const auto build_path = [&](auto&& self, int i, int j, std::vector<EdgeId>& acc) -> void {
        const int k = through[i][j];
        if (k < 0) {
            acc.push_back(direct[i][j]);
            return;
        }
        self(self, i, k, acc);
        self(self, k, j, acc);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<EdgeId> acc;
            build_path(build_path, i, j, acc);
            out.path[{i, j}] = std::move(acc);
        }
    out.dist = std::move(dist);
    return out;
}

}  // namespace splitoff
