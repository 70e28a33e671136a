#include "splitoff/convex_oracle.hpp"

#include <algorithm>
#include <string>

#include "splitoff/connectivity.hpp"
#include "splitoff/splitting.hpp"
#include "splitoff/two_thirds.hpp"

namespace splitoff {

namespace {

void check_4reg_4ec(const MultiGraph& g, const char* who) {
    for (VertexId v : g.live_vertices())
        if (g.degree(v) != 4)
            throw DomainError(std::string(who) + ": vertex " + std::to_string(v) +
                              " has degree " + std::to_string(g.degree(v)) +
                              "; input must be 4-regular");
    if (!is_k_edge_connected_excluding(g, 4))
        throw DomainError(std::string(who) + ": input is not 4-edge-connected");
}

std::vector<EdgeId> canonical_key(const EdgeMultiset& h) {
    std::vector<EdgeId> key;
    key.reserve(h.mult.size());
    for (const auto& [id, k] : h.mult) key.push_back(id);  // multiplicities are all 1 here
    return key;
}

ConvexCombination decompose_rec(MultiGraph& work, EdgeId designated) {
    ConvexCombination out;
    if (work.live_vertex_count() == 2) {
        std::vector<EdgeId> others;
        for (EdgeId id : work.live_edges())
            if (id != designated) others.push_back(id);
        std::sort(others.begin(), others.end());
        const Rational third(1, 3);
        for (int skip = 2; skip >= 0; --skip) {
            EdgeMultiset h;
            for (int i = 0; i < 3; ++i)
                if (i != skip) h.add(others[i]);
            out.items.push_back({third, std::move(h)});
        }
        return out;
    }

    const EdgeRecord& rec = work.edge(designated);
    const VertexId v = std::max(rec.u, rec.v);
    const AdmissibleSet adm = admissible_set(work, v, designated);
    const EdgeId x = adm.members[0];  // cost-blind: two lowest-id admissible partners
    const EdgeId y = adm.members[1];

    std::map<std::vector<EdgeId>, Rational> merged;
    const auto add_branch = [&](EdgeId first, EdgeId second) {
        const SplitStep step = complete_split_at(work, v, designated, first, second);
        ConvexCombination child = decompose_rec(work, step.created_ux);
        undo_complete_split(work, step);
        for (auto& [weight, h] : child.items) {
            EdgeMultiset lifted = lift_step(std::move(h), step);
            merged[canonical_key(lifted)] += weight / 2;
        }
    };
    add_branch(x, y);  // G1: split (e, vx) then (vy, vz)
    add_branch(y, x);  // G2: split (e, vy) then (vx, vz)

    for (const auto& [key, weight] : merged) {
        EdgeMultiset h;
        for (EdgeId id : key) h.add(id);
        out.items.push_back({weight, std::move(h)});
    }
    return out;
}

}  // namespace

ConvexCombination convex_decomposition(const MultiGraph& g, EdgeId e, int vertex_limit) {
    if (!g.edge_alive(e))
        throw DomainError("convex_decomposition: designated edge is not live");
    if (g.live_vertex_count() > vertex_limit)
        throw ResourceError("convex_decomposition: " + std::to_string(g.live_vertex_count()) +
                            " vertices exceed the limit of " + std::to_string(vertex_limit));
    check_4reg_4ec(g, "convex_decomposition");
    MultiGraph work = g;
    return decompose_rec(work, e);
}

ConvexCheck verify_convex_combination(const MultiGraph& g, EdgeId e,
                                      const ConvexCombination& comb) {
    ConvexCheck check;
    Rational weight_sum(0);
    check.weights_positive = true;
    check.all_two_edge_connected = true;
    check.multiplicities_ok = true;
    std::map<EdgeId, Rational> coordinate;
    for (const auto& [weight, h] : comb.items) {
        weight_sum += weight;
        if (weight <= 0) check.weights_positive = false;
        for (const auto& [id, k] : h.mult) {
            if (k != 1) check.multiplicities_ok = false;
            coordinate[id] += Rational(k) * weight;
        }
        if (!is_two_edge_connected_spanning(g, h)) check.all_two_edge_connected = false;
    }
    check.weights_sum_to_one = weight_sum == 1;

    const Rational two_thirds(2, 3);
    check.identity_holds = true;
    for (EdgeId id : g.live_edges()) {
        const Rational want = id == e ? Rational(0) : two_thirds;
        const auto it = coordinate.find(id);
        const Rational got = it == coordinate.end() ? Rational(0) : it->second;
        if (got != want) check.identity_holds = false;
    }
    for (const auto& [id, q] : coordinate)
        if (!g.edge_alive(id)) check.identity_holds = false;
    return check;
}

bool brute_admissible(const MultiGraph& g, VertexId v, EdgeId e, EdgeId f) {
    if (e == f) throw DomainError("brute_admissible: candidate equals the designated edge");
    if (!g.edge_alive(e) || !g.edge_alive(f))
        throw DomainError("brute_admissible: both edges must be live");
    if (!g.edge(e).incident_to(v) || !g.edge(f).incident_to(v))
        throw DomainError("brute_admissible: both edges must be incident to the center");
    // Splitting two parallel copies would create a self-loop and drops the
    // connectivity of the shared endpoint below 4; never admissible.
    if (g.edge(e).other(v) == g.edge(f).other(v)) return false;
    MultiGraph work = g;
    split_off_pair(work, e, f);
    return is_k_edge_connected_excluding(work, 4, v);
}

std::pair<EdgeMultiset, Rational> brute_optimal_2ec_subgraph(const MultiGraph& g,
                                                             EdgeId forbidden, int edge_limit) {
    if (g.live_edge_count() > edge_limit)
        throw ResourceError("brute_optimal_2ec_subgraph: " + std::to_string(g.live_edge_count()) +
                            " live edges exceed the limit of " + std::to_string(edge_limit));
    std::vector<EdgeId> pool;
    for (EdgeId id : g.live_edges())
        if (id != forbidden) pool.push_back(id);
    const int m = static_cast<int>(pool.size());

    // Suffix sums of negative costs give a valid lower bound for pruning.
    std::vector<Rational> neg_suffix(m + 1, Rational(0));
    for (int i = m - 1; i >= 0; --i) {
        neg_suffix[i] = neg_suffix[i + 1];
        const Rational& c = g.edge(pool[i]).cost;
        if (c < 0) neg_suffix[i] += c;
    }

    bool found = false;
    Rational best_cost(0);
    std::vector<char> best_pick(m, 0), pick(m, 0);

    const auto feasible = [&](const std::vector<char>& chosen) {
        EdgeMultiset h;
        for (int i = 0; i < m; ++i)
            if (chosen[i]) h.add(pool[i]);
        return is_two_edge_connected_spanning(g, h);
    };

    const auto rec = [&](auto&& self, int i, const Rational& cost) -> void {
        if (found && cost + neg_suffix[i] >= best_cost) return;
        if (i == m) {
            if (!feasible(pick)) return;
            if (!found || cost < best_cost) {
                found = true;
                best_cost = cost;
                best_pick = pick;
            }
            return;
        }
        pick[i] = 1;
        self(self, i + 1, cost + g.edge(pool[i]).cost);
        pick[i] = 0;
        self(self, i + 1, cost);
    };
    rec(rec, 0, Rational(0));

    if (!found)
        throw DomainError("brute_optimal_2ec_subgraph: no 2-edge-connected spanning subgraph "
                          "avoiding the forbidden edge exists");
    EdgeMultiset h;
    for (int i = 0; i < m; ++i)
        if (best_pick[i]) h.add(pool[i]);
    return {h, best_cost};
}

std::pair<std::map<std::pair<int, int>, int>, Rational> brute_optimal_2ecm(
    const std::vector<std::vector<Rational>>& cost, int n, int n_limit) {
    if (n > n_limit)
        throw ResourceError("brute_optimal_2ecm: n = " + std::to_string(n) +
                            " exceeds the limit of " + std::to_string(n_limit));
    if (n < 2) throw DomainError("brute_optimal_2ecm: need at least 2 vertices");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cost[i][j] < 0) throw DomainError("brute_optimal_2ecm: negative cost");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    const int m = static_cast<int>(pairs.size());

    std::vector<int> pick(m, 0);
    std::vector<int> deg(n, 0);
    // How much degree each vertex can still gain from the remaining pairs.
    std::vector<std::vector<int>> slack(m + 1, std::vector<int>(n, 0));
    for (int i = m - 1; i >= 0; --i) {
        slack[i] = slack[i + 1];
        slack[i][pairs[i].first] += 2;
        slack[i][pairs[i].second] += 2;
    }

    // Seed the incumbent with the identity-order Hamiltonian cycle (n = 2:
    // the doubled pair) and the doubled stars, so cost pruning is active from
    // the first branch.
    std::map<std::pair<int, int>, int> pair_index;
    for (int k = 0; k < m; ++k) pair_index[pairs[k]] = k;
    bool found = false;
    Rational best_cost(0);
    std::vector<int> best_pick(m, 0);
    const auto try_seed = [&](const std::map<std::pair<int, int>, int>& mult) {
        Rational c(0);
        for (const auto& [p, k] : mult) c += Rational(k) * cost[p.first][p.second];
        if (found && c >= best_cost) return;
        found = true;
        best_cost = c;
        std::fill(best_pick.begin(), best_pick.end(), 0);
        for (const auto& [p, k] : mult) best_pick[pair_index.at(p)] = k;
    };
    if (n == 2) {
        try_seed({{{0, 1}, 2}});
    } else {
        std::map<std::pair<int, int>, int> cycle;
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            cycle[{std::min(i, j), std::max(i, j)}] = 1;
        }
        try_seed(cycle);
        for (int center = 0; center < n; ++center) {
            std::map<std::pair<int, int>, int> star;
            for (int i = 0; i < n; ++i)
                if (i != center) star[{std::min(i, center), std::max(i, center)}] = 2;
            try_seed(star);
        }
    }

    const auto rec = [&](auto&& self, int i, const Rational& acc) -> void {
        if (found && acc >= best_cost) return;  // costs are non-negative
        if (i == m) {
            std::map<std::pair<int, int>, int> mult;
            for (int k = 0; k < m; ++k)
                if (pick[k] > 0) mult[pairs[k]] = pick[k];
            if (!is_two_edge_connected_pair_multiset(n, mult)) return;
            found = true;
            best_cost = acc;
            best_pick = pick;
            return;
        }
        for (int v : {pairs[i].first, pairs[i].second})
            if (deg[v] + slack[i][v] < 2) return;
        const auto [a, b] = pairs[i];
        for (int copies = 0; copies <= 2; ++copies) {
            pick[i] = copies;
            deg[a] += copies;
            deg[b] += copies;
            self(self, i + 1, acc + Rational(copies) * cost[a][b]);
            deg[a] -= copies;
            deg[b] -= copies;
        }
        pick[i] = 0;
    };
    rec(rec, 0, Rational(0));

    if (!found) throw InvariantError("brute_optimal_2ecm: complete graph must be feasible");
    std::map<std::pair<int, int>, int> mult;
    for (int k = 0; k < m; ++k)
        if (best_pick[k] > 0) mult[pairs[k]] = best_pick[k];
    return {mult, best_cost};
}

}  // namespace splitoff
