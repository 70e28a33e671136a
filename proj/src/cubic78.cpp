#include "splitoff/cubic78.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "splitoff/connectivity.hpp"

namespace splitoff {

namespace {

void check_cubic_3ec(const MultiGraph& g, const char* who) {
    if (!g.all_vertices_alive())
        throw DomainError(std::string(who) + ": graph has dead vertices");
    if (g.vertex_slots() % 2 != 0)
        throw DomainError(std::string(who) + ": a cubic graph needs an even vertex count");
    std::set<std::pair<int, int>> seen;
    for (EdgeId id : g.live_edges()) {
        const EdgeRecord& rec = g.edge(id);
        const auto p = std::make_pair(std::min(rec.u, rec.v), std::max(rec.u, rec.v));
        if (!seen.insert(p).second)
            throw DomainError(std::string(who) + ": parallel edges; input must be simple");
    }
    for (VertexId v : g.live_vertices())
        if (g.degree(v) != 3)
            throw DomainError(std::string(who) + ": vertex " + std::to_string(v) +
                              " has degree " + std::to_string(g.degree(v)) +
                              "; input must be 3-regular");
    if (!is_k_edge_connected_excluding(g, 3))
        throw DomainError(std::string(who) + ": input is not 3-edge-connected");
}

// Deterministic enumeration of perfect matchings: always match the smallest
// unmatched vertex, trying its incident edges in ascending id order. Stops
// early once fn returns false.
bool for_each_perfect_matching(const MultiGraph& g,
                               const std::function<bool(const std::vector<EdgeId>&)>& fn) {
    const int n = g.vertex_slots();
    std::vector<char> matched(n, 0);
    std::vector<EdgeId> chosen;
    const auto rec = [&](auto&& self) -> bool {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (!matched[i]) {
                v = i;
                break;
            }
        if (v == -1) return fn(chosen);
        std::vector<EdgeId> options(g.incident(v).begin(), g.incident(v).end());
        std::sort(options.begin(), options.end());
        for (EdgeId id : options) {
            const VertexId w = g.edge(id).other(v);
            if (matched[w]) continue;
            matched[v] = matched[w] = 1;
            chosen.push_back(id);
            if (!self(self)) return false;
            chosen.pop_back();
            matched[v] = matched[w] = 0;
        }
        return true;
    };
    return rec(rec);
}

std::vector<std::vector<VertexId>> factor_cycles(const MultiGraph& g,
                                                 const std::vector<char>& in_factor) {
    std::vector<std::vector<VertexId>> cycles;
    std::vector<char> visited(g.vertex_slots(), 0);
    for (VertexId start : g.live_vertices()) {
        if (visited[start]) continue;
        std::vector<VertexId> cycle;
        VertexId v = start;
        EdgeId came_by = -1;
        while (true) {
            visited[v] = 1;
            cycle.push_back(v);
            // Each vertex has exactly two factor edges; continue by the one
            // we did not arrive through.
            EdgeId next = -1;
            for (EdgeId id : g.incident(v)) {
                if (!in_factor[id] || id == came_by) continue;
                if (next == -1 || id < next) next = id;
            }
            const VertexId w = g.edge(next).other(v);
            if (w == start) break;
            came_by = next;
            v = w;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

// Runs fn on every qualifying 2-factor in enumeration order; stops when fn
// returns false.
void for_each_good_factor(const MultiGraph& g,
                          const std::function<bool(TwoFactorCertificate&&)>& fn) {
    for_each_perfect_matching(g, [&](const std::vector<EdgeId>& matching) {
        std::vector<char> in_factor(g.edge_slots(), 0);
        for (EdgeId id : g.live_edges()) in_factor[id] = 1;
        for (EdgeId id : matching) in_factor[id] = 0;

        TwoFactorCertificate cert;
        for (EdgeId id : g.live_edges())
            if (in_factor[id]) cert.factor_edges.add(id);
        cert.cycles = factor_cycles(g, in_factor);
        cert.contracted = contract_edge_set(g, cert.cycles);
        cert.five_ec = cert.contracted.graph.live_vertex_count() == 1 ||
                       is_k_edge_connected_excluding(cert.contracted.graph, 5);
        if (!cert.five_ec) return true;  // keep searching
        return fn(std::move(cert));
    });
}

}  // namespace

TwoFactorCertificate find_good_two_factor(const MultiGraph& g, int n_limit) {
    check_cubic_3ec(g, "find_good_two_factor");
    if (g.vertex_slots() > n_limit)
        throw ResourceError("find_good_two_factor: " + std::to_string(g.vertex_slots()) +
                            " vertices exceed the limit of " + std::to_string(n_limit));
    TwoFactorCertificate found;
    bool have = false;
    for_each_good_factor(g, [&](TwoFactorCertificate&& cert) {
        found = std::move(cert);
        have = true;
        return false;
    });
    if (!have)
        throw DomainError("find_good_two_factor: no 2-factor meets every 3-edge and 4-edge cut "
                          "(searched all perfect-matching complements)");
    return found;
}

ChristofidesResult christofides_2ecm(const MultiGraph& g_prime) {
    ChristofidesResult out;
    out.bound = Rational(3, 5) * g_prime.cost_of_live_edges();
    out.cost = Rational(0);
    if (g_prime.live_vertex_count() <= 1) return out;
    for (EdgeId id : g_prime.live_edges())
        if (g_prime.edge(id).cost < 0)
            throw DomainError("christofides_2ecm: negative cost on edge " + std::to_string(id));

    const MetricCompletion mc = metric_complete_instance(g_prime);
    const int n = mc.n;

    // Minimum spanning tree of the closure (Prim, deterministic tie-break by
    // vertex id).
    std::vector<char> in_tree(n, 0);
    std::vector<Rational> best(n, Rational(0));
    std::vector<int> parent(n, -1);
    std::vector<char> has_best(n, 0);
    in_tree[0] = 1;
    for (int v = 1; v < n; ++v) {
        best[v] = mc.dist[0][v];
        parent[v] = 0;
        has_best[v] = 1;
    }
    std::vector<std::pair<int, int>> tree_edges;
    for (int round = 1; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (in_tree[v] || !has_best[v]) continue;
            if (pick == -1 || best[v] < best[pick]) pick = v;
        }
        in_tree[pick] = 1;
        tree_edges.push_back({std::min(parent[pick], pick), std::max(parent[pick], pick)});
        for (int v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            if (mc.dist[pick][v] < best[v]) {
                best[v] = mc.dist[pick][v];
                parent[v] = pick;
            }
        }
    }

    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (deg[v] % 2 == 1) odd.push_back(v);

    // Exact minimum-weight perfect matching on the odd tree vertices by
    // subset dynamic programming.
    std::vector<std::pair<int, int>> matching;
    if (!odd.empty()) {
        const int k = static_cast<int>(odd.size());
        if (k > 18)
            throw ResourceError("christofides_2ecm: too many odd-degree vertices for the exact "
                                "matching (" + std::to_string(k) + " > 18)");
        const int full = (1 << k) - 1;
        std::vector<Rational> dp(full + 1, Rational(0));
        std::vector<char> reach(full + 1, 0);
        std::vector<std::pair<int, int>> choice(full + 1, {-1, -1});
        reach[0] = 1;
        for (int mask = 0; mask <= full; ++mask) {
            if (!reach[mask] || mask == full) continue;
            int i = 0;
            while (mask & (1 << i)) ++i;
            for (int j = i + 1; j < k; ++j) {
                if (mask & (1 << j)) continue;
                const int next = mask | (1 << i) | (1 << j);
                const Rational cand = dp[mask] + mc.dist[odd[i]][odd[j]];
                if (!reach[next] || cand < dp[next]) {
                    reach[next] = 1;
                    dp[next] = cand;
                    choice[next] = {i, j};
                }
            }
        }
        int mask = full;
        while (mask) {
            const auto [i, j] = choice[mask];
            matching.push_back({std::min(odd[i], odd[j]), std::max(odd[i], odd[j])});
            mask &= ~((1 << i) | (1 << j));
        }
    }

    // Eulerian circuit of tree + matching (all degrees even), then each
    // closure edge is realized as its shortest path in g'.
    std::vector<std::pair<int, int>> walk_edges = tree_edges;
    walk_edges.insert(walk_edges.end(), matching.begin(), matching.end());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, walk edge index)
    for (std::size_t i = 0; i < walk_edges.size(); ++i) {
        const auto [a, b] = walk_edges[i];
        adj[a].push_back({b, static_cast<int>(i)});
        adj[b].push_back({a, static_cast<int>(i)});
    }
    std::vector<char> used(walk_edges.size(), 0);
    std::vector<std::size_t> next_arc(n, 0);
    std::vector<int> stack = {0};
    std::vector<int> circuit;
    while (!stack.empty()) {
        const int v = stack.back();
        bool advanced = false;
        while (next_arc[v] < adj[v].size()) {
            const auto [w, idx] = adj[v][next_arc[v]];
            if (used[idx]) {
                ++next_arc[v];
                continue;
            }
            used[idx] = 1;
            stack.push_back(w);
            advanced = true;
            break;
        }
        if (!advanced) {
            circuit.push_back(v);
            stack.pop_back();
        }
    }

    for (std::size_t i = 0; i + 1 < circuit.size(); ++i) {
        const int a = std::min(circuit[i], circuit[i + 1]);
        const int b = std::max(circuit[i], circuit[i + 1]);
        for (EdgeId id : mc.path.at({a, b})) {
            if (out.edges.multiplicity(id) < 2) out.edges.add(id);  // cap at two copies
        }
    }

    out.cost = total_cost(g_prime, out.edges);
    if (!is_two_edge_connected_spanning(g_prime, out.edges))
        throw InvariantError("christofides_2ecm: realized walk is not 2-edge-connected spanning");
    if (out.cost > out.bound)
        throw InvariantError("christofides_2ecm: cost exceeds (3/5) of the contracted graph");
    return out;
}

Cubic78Result solve_cubic_seven_eighths(const MultiGraph& g, const Cubic78Options& opt) {
    check_cubic_3ec(g, "solve_cubic_seven_eighths");
    if (g.vertex_slots() > opt.factor_limit)
        throw ResourceError("solve_cubic_seven_eighths: " + std::to_string(g.vertex_slots()) +
                            " vertices exceed the limit of " + std::to_string(opt.factor_limit));

    const Rational c_total = g.cost_of_live_edges();
    const Rational bound78 = Rational(7, 8) * c_total;

    bool have = false;
    Cubic78Result best;
    const auto consider = [&](const TwoFactorCertificate& cert) {
        const Rational c_factor = total_cost(g, cert.factor_edges);
        const Rational c_rest = c_total - c_factor;

        // H1 = F together with the contracted-graph answer R; G' edges keep
        // their ids in g, so the union is a plain multiset merge.
        const ChristofidesResult r = christofides_2ecm(cert.contracted.graph);
        EdgeMultiset h1 = cert.factor_edges;
        for (const auto& [id, k] : r.edges.mult) h1.add(id, k);
        const Rational cost_h1 = total_cost(g, h1);
        const Rational bound_h1 = c_factor + Rational(3, 5) * c_rest;
        if (cost_h1 > bound_h1)
            throw InvariantError("solve_cubic_seven_eighths: H1 exceeds c(F) + (3/5) c(E \\ F)");
        if (!is_two_edge_connected_spanning(g, h1))
            throw InvariantError("solve_cubic_seven_eighths: H1 is not 2-edge-connected spanning");

        // H2 via the half-integral vector z (1/2 on F, 1 elsewhere).
        HalfIntegralSolution z;
        z.n = g.vertex_slots();
        for (EdgeId id : g.live_edges()) {
            const EdgeRecord& rec = g.edge(id);
            const auto p = std::make_pair(std::min(rec.u, rec.v), std::max(rec.u, rec.v));
            z.x[p] = cert.factor_edges.contains(id) ? Rational(1, 2) : Rational(1);
            z.cost[p] = rec.cost;
        }
        const SolutionValidation zrep = validate_solution(z);
        if (!zrep.structurally_feasible())
            throw InvariantError("solve_cubic_seven_eighths: z-vector is not a feasible "
                                 "half-integral point");
        const HalfIntegralResult h2res = solve_half_integral(z);
        const Rational bound_h2 = Rational(2, 3) * c_factor + Rational(4, 3) * c_rest;
        if (h2res.bound != bound_h2)
            throw InvariantError("solve_cubic_seven_eighths: H2 bound bookkeeping mismatch");
        if (h2res.cost > bound_h2)
            throw InvariantError(
                "solve_cubic_seven_eighths: H2 exceeds (2/3) c(F) + (4/3) c(E \\ F)");

        std::map<std::pair<int, int>, EdgeId> record_of;
        for (EdgeId id : g.live_edges()) {
            const EdgeRecord& rec = g.edge(id);
            record_of[{std::min(rec.u, rec.v), std::max(rec.u, rec.v)}] = id;
        }
        EdgeMultiset h2;
        for (const auto& [p, k] : h2res.multiplicity) h2.add(record_of.at(p), k);
        const Rational cost_h2 = h2res.cost;
        if (!is_two_edge_connected_spanning(g, h2))
            throw InvariantError("solve_cubic_seven_eighths: H2 is not 2-edge-connected spanning");

        // min(c(H1), c(H2)) <= 5/8 c(H1) + 3/8 c(H2) <= 7/8 c(G)
        const bool take_h1 = cost_h1 <= cost_h2;
        Cubic78Result cand;
        cand.edges = take_h1 ? h1 : h2;
        cand.cost = take_h1 ? cost_h1 : cost_h2;
        cand.cost_h1 = cost_h1;
        cand.cost_h2 = cost_h2;
        cand.bound = bound78;
        cand.bound_holds = cand.cost <= bound78;
        if (!cand.bound_holds)
            throw InvariantError("solve_cubic_seven_eighths: neither answer meets (7/8) c(G)");
        cand.two_edge_connected_spanning = true;
        cand.multiplicity_ok = true;
        for (const auto& [id, k] : cand.edges.mult)
            if (k > 2) cand.multiplicity_ok = false;
        cand.trace_length = h2res.trace_length;
        for (const auto& [id, k] : cert.factor_edges.mult) {
            (void)k;
            cand.factor.push_back(id);
        }
        if (!have || cand.cost < best.cost) {
            have = true;
            best = std::move(cand);
        }
    };

    if (opt.try_all_factors) {
        for_each_good_factor(g, [&](TwoFactorCertificate&& cert) {
            consider(cert);
            return true;
        });
        if (!have)
            throw DomainError("solve_cubic_seven_eighths: no qualifying 2-factor found");
    } else {
        consider(find_good_two_factor(g, opt.factor_limit));
    }
    return best;
}

}  // namespace splitoff
