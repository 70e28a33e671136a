#include "corpus.hpp"

#include <algorithm>

#include "splitoff/connectivity.hpp"

namespace splitoff::testing {

std::vector<CostedInstance> corpus_4reg(int max_n, int cost_seeds) {
    std::vector<std::pair<std::string, MultiGraph>> bases;
    bases.push_back({"four-parallel", make_four_parallel()});
    for (int n = 3; n <= max_n; ++n) {
        bases.push_back({"doubled-C" + std::to_string(n), make_doubled_cycle(n)});
        if (n >= 5)
            bases.push_back({"circulant-C" + std::to_string(n) + "(1,2)", make_circulant_c12(n)});
        const int randoms = n <= 3 ? 2 : 5;
        for (int r = 0; r < randoms; ++r) {
            const std::uint64_t seed = 1000 * n + r;
            bases.push_back({"random-n" + std::to_string(n) + "-" + std::to_string(r),
                             random_4reg_4ec(n, seed)});
        }
    }

    std::vector<CostedInstance> out;
    for (const auto& [name, graph] : bases) {
        for (int cs = 0; cs < cost_seeds; ++cs) {
            MultiGraph g = graph;
            assign_random_costs(g, 777 + 31 * cs + std::hash<std::string>{}(name) % 1000, -10, 10);
            out.push_back({name + "/costs" + std::to_string(cs), std::move(g)});
        }
    }
    return out;
}

MultiGraph three_cut_instance() {
    MultiGraph g(11);
    const auto add = [&](int u, int v) { g.add_edge(u, v, Rational(1)); };
    // K5 on {0..4} minus (1,2) and (3,4)
    for (int i = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            if ((i == 1 && j == 2) || (i == 3 && j == 4)) continue;
            add(i, j);
        }
    // K5 on {5..9} minus (6,7) and (8,9)
    for (int i = 5; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j) {
            if ((i == 6 && j == 7) || (i == 8 && j == 9)) continue;
            add(i, j);
        }
    add(10, 1);
    add(10, 2);
    add(10, 6);
    add(10, 7);
    add(3, 8);
    add(4, 9);
    return g;
}

int brute_min_cut_between(const MultiGraph& g, VertexId s, VertexId t) {
    const std::vector<VertexId> verts = g.live_vertices();
    const int n = static_cast<int>(verts.size());
    std::vector<int> index(g.vertex_slots(), -1);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;

    int best = -1;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (!(mask & (1 << index[s])) || (mask & (1 << index[t]))) continue;
        int crossing = 0;
        for (EdgeId id : g.live_edges()) {
            const EdgeRecord& rec = g.edge(id);
            const bool a = mask & (1 << index[rec.u]);
            const bool b = mask & (1 << index[rec.v]);
            if (a != b) ++crossing;
        }
        if (best < 0 || crossing < best) best = crossing;
    }
    return best;
}

Rational brute_global_min_cut(const MultiGraph& g, const std::map<EdgeId, Rational>& cap) {
    const std::vector<VertexId> verts = g.live_vertices();
    const int n = static_cast<int>(verts.size());
    std::vector<int> index(g.vertex_slots(), -1);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;

    Rational best(0);
    bool have = false;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        if (!(mask & 1)) continue;  // fix vertex 0 on one side
        Rational crossing(0);
        for (EdgeId id : g.live_edges()) {
            const EdgeRecord& rec = g.edge(id);
            const bool a = mask & (1 << index[rec.u]);
            const bool b = mask & (1 << index[rec.v]);
            if (a != b) crossing += cap.at(id);
        }
        if (!have || crossing < best) {
            best = crossing;
            have = true;
        }
    }
    return best;
}

bool brute_two_ec_spanning(const MultiGraph& over, const EdgeMultiset& s) {
    const std::vector<VertexId> verts = over.live_vertices();
    const int n = static_cast<int>(verts.size());
    std::vector<int> index(over.vertex_slots(), -1);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;

    std::vector<int> touched(n, 0);
    for (const auto& [id, k] : s.mult) {
        (void)k;
        touched[index[over.edge(id).u]] = 1;
        touched[index[over.edge(id).v]] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!touched[i]) return false;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        int crossing = 0;
        for (const auto& [id, k] : s.mult) {
            const EdgeRecord& rec = over.edge(id);
            const bool a = mask & (1 << index[rec.u]);
            const bool b = mask & (1 << index[rec.v]);
            if (a != b) crossing += k;
        }
        if (crossing < 2) return false;
    }
    return true;
}

namespace {

void fill_full_matrix(HalfIntegralSolution& s, const std::vector<std::vector<Rational>>& m) {
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) s.cost[{i, j}] = m[i][j];
}

void fill_unit_matrix(HalfIntegralSolution& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) s.cost[{i, j}] = Rational(1);
}

// Metric closure of the support pairs under unit edge costs.
void fill_support_graphic(HalfIntegralSolution& s) {
    MultiGraph g(s.n);
    for (const auto& [p, q] : s.x)
        if (q > 0) g.add_edge(p.first, p.second, Rational(1));
    fill_full_matrix(s, metric_closure(g));
}

// Closure of a complete graph with random costs in [1, 10].
void fill_random_metric(HalfIntegralSolution& s, std::uint64_t seed) {
    MultiGraph g = make_complete(s.n);
    assign_random_costs(g, seed, 1, 10);
    fill_full_matrix(s, metric_closure(g));
}

HalfIntegralSolution from_support(const MultiGraph& support) {
    HalfIntegralSolution s;
    s.n = support.vertex_slots();
    for (EdgeId id : support.live_edges()) {
        const EdgeRecord& rec = support.edge(id);
        const auto p = std::make_pair(std::min(rec.u, rec.v), std::max(rec.u, rec.v));
        s.x[p] += Rational(1, 2);
    }
    return s;
}

}  // namespace

std::vector<SolutionInstance> corpus_solutions(int max_n) {
    std::vector<SolutionInstance> out;

    {
        HalfIntegralSolution two;
        two.n = 2;
        two.x[{0, 1}] = Rational(2);
        two.cost[{0, 1}] = Rational(3, 2);
        out.push_back({"two-vertex", two, true});
    }
    {
        HalfIntegralSolution k5;
        k5.n = 5;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) k5.x[{i, j}] = Rational(1, 2);
        fill_unit_matrix(k5);
        out.push_back({"half-K5-unit", k5, true});
    }

    for (int n = 3; n <= max_n; ++n) {
        HalfIntegralSolution cyc;
        cyc.n = n;
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            cyc.x[{std::min(i, j), std::max(i, j)}] = Rational(1);
        }
        HalfIntegralSolution unit = cyc;
        fill_unit_matrix(unit);
        out.push_back({"cycle-n" + std::to_string(n) + "-unit", unit, true});
        HalfIntegralSolution graphic = cyc;
        fill_support_graphic(graphic);
        out.push_back({"cycle-n" + std::to_string(n) + "-graphic", graphic, true});
        HalfIntegralSolution metric = cyc;
        fill_random_metric(metric, 42 + n);
        out.push_back({"cycle-n" + std::to_string(n) + "-random", metric, false});
    }

    for (int n = 5; n <= max_n; ++n) {
        HalfIntegralSolution half;
        half.n = n;
        const MultiGraph circ = make_circulant_c12(n);
        for (EdgeId id : circ.live_edges()) {
            const EdgeRecord& rec = circ.edge(id);
            half.x[{std::min(rec.u, rec.v), std::max(rec.u, rec.v)}] = Rational(1, 2);
        }
        fill_unit_matrix(half);
        out.push_back({"half-circulant-n" + std::to_string(n), half, true});
    }

    for (int n = 3; n <= max_n; ++n) {
        for (int r = 0; r < 3; ++r) {
            const MultiGraph support = random_4reg_4ec(n, 5000 + 17 * n + r);
            const HalfIntegralSolution base = from_support(support);
            HalfIntegralSolution unit = base;
            fill_unit_matrix(unit);
            out.push_back(
                {"support-n" + std::to_string(n) + "-" + std::to_string(r) + "-unit", unit, true});
            HalfIntegralSolution graphic = base;
            fill_support_graphic(graphic);
            out.push_back({"support-n" + std::to_string(n) + "-" + std::to_string(r) + "-graphic",
                           graphic, true});
            HalfIntegralSolution metric = base;
            fill_random_metric(metric, 9000 + 13 * n + r);
            out.push_back({"support-n" + std::to_string(n) + "-" + std::to_string(r) + "-random",
                           metric, false});
        }
    }
    return out;
}

}  // namespace splitoff::testing
