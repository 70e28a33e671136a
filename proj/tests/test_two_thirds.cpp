#include <doctest.h>

#include "corpus.hpp"
#include "splitoff/connectivity.hpp"
#include "splitoff/convex_oracle.hpp"
#include "splitoff/generate.hpp"
#include "splitoff/two_thirds.hpp"

using namespace splitoff;
using namespace splitoff::testing;

namespace {

EdgeId edge_between(const MultiGraph& g, VertexId v, VertexId w, int skip = 0) {
    for (EdgeId id : g.incident(v))
        if (g.edge(id).other(v) == w && skip-- == 0) return id;
    REQUIRE(false);
    return -1;
}

void check_postconditions(const MultiGraph& g, EdgeId e, const TwoThirdsResult& r) {
    CHECK(r.designated_excluded);
    CHECK(r.multiplicity_ok);
    CHECK(r.two_edge_connected_spanning);
    CHECK(r.bound_holds);
    CHECK(r.cost == total_cost(g, r.edges));
    CHECK(r.bound == Rational(2, 3) * (g.cost_of_live_edges() - g.edge(e).cost));
}

}  // namespace

TEST_CASE("choose_labels orders the admissible partners by cost") {
    // engineered instance: at v = 10, e = (10,1), only the edges toward 6 and
    // 7 are admissible; the inadmissible edge toward 2 becomes z.
    MultiGraph g = three_cut_instance();
    const VertexId v = 10;
    const EdgeId e = edge_between(g, v, 1);
    const EdgeId to2 = edge_between(g, v, 2);
    const EdgeId to6 = edge_between(g, v, 6);
    const EdgeId to7 = edge_between(g, v, 7);
    g.set_cost(to6, Rational(5));
    g.set_cost(to7, Rational(2));
    g.set_cost(to2, Rational(9));
    ChosenLabels labels = choose_labels(g, v, e);
    CHECK(labels.x_edge == to6);
    CHECK(labels.y_edge == to7);
    CHECK(labels.z_edge == to2);

    // c(x) >= c(y) is enforced regardless of id order
    g.set_cost(to6, Rational(1));
    g.set_cost(to7, Rational(4));
    labels = choose_labels(g, v, e);
    CHECK(labels.x_edge == to7);
    CHECK(labels.y_edge == to6);
}

TEST_CASE("choose_labels breaks cost ties by the smaller id") {
    const MultiGraph k5 = make_complete(5);  // everything admissible, unit costs
    const VertexId v = 4;
    const EdgeId e = k5.incident(v).front();
    std::vector<EdgeId> rest;
    for (EdgeId f : k5.incident(v))
        if (f != e) rest.push_back(f);
    std::sort(rest.begin(), rest.end());
    const ChosenLabels labels = choose_labels(k5, v, e);
    CHECK(labels.x_edge == rest[0]);
    CHECK(labels.y_edge == rest[1]);
    CHECK(labels.z_edge == rest[2]);
}

TEST_CASE("base case picks the two cheapest of the remaining three") {
    MultiGraph g = make_four_parallel();
    g.set_cost(0, Rational(5));
    g.set_cost(1, Rational(1));
    g.set_cost(2, Rational(2));
    g.set_cost(3, Rational(3));
    const TwoThirdsResult r = solve_two_thirds(g, 0);
    CHECK(r.edges.contains(1));
    CHECK(r.edges.contains(2));
    CHECK(r.cost == Rational(3));
    CHECK(r.bound == Rational(4));
    check_postconditions(g, 0, r);
    // the oracle agrees that {1, 2} is the optimum
    const auto [opt_edges, opt_cost] = brute_optimal_2ec_subgraph(g, 0);
    CHECK(opt_cost == Rational(3));
    CHECK(r.cost == opt_cost);
}

TEST_CASE("K5 with unit costs stays within the bound; the optimum is a 5-cycle") {
    const MultiGraph k5 = make_complete(5);
    for (EdgeId e : k5.live_edges()) {
        const TwoThirdsResult r = solve_two_thirds(k5, e);
        check_postconditions(k5, e, r);
        CHECK(r.bound == Rational(6));
        const auto [opt_edges, opt_cost] = brute_optimal_2ec_subgraph(k5, e);
        CHECK(opt_cost == Rational(5));
        CHECK(r.cost >= opt_cost);
        CHECK(r.cost <= r.bound);
    }
}

TEST_CASE("a cheap negative edge must be taken") {
    MultiGraph g = make_doubled_cycle(4);
    // edge 0 is the designated edge; give another record cost -10
    g.set_cost(3, Rational(-10));
    const TwoThirdsResult r = solve_two_thirds(g, 0);
    check_postconditions(g, 0, r);
    CHECK(r.bound == Rational(2, 3) * Rational(-4));  // (2/3)(-10 + 6)
    CHECK(r.edges.contains(3));
    const auto [opt_edges, opt_cost] = brute_optimal_2ec_subgraph(g, 0);
    CHECK(opt_edges.contains(3));
    CHECK(r.cost >= opt_cost);
}

TEST_CASE("lift_step applies the two-case rule") {
    SplitStep step;
    step.center = 9;
    step.designated = 0;
    step.x_edge = 1;
    step.y_edge = 2;
    step.z_edge = 3;
    step.created_ux = 10;
    step.created_yz = 11;
    step.cost_assigned_yz = Rational(4);

    EdgeMultiset with_yz;
    with_yz.add(11);
    with_yz.add(7);
    const EdgeMultiset lifted1 = lift_step(with_yz, step);
    CHECK_FALSE(lifted1.contains(11));
    CHECK(lifted1.contains(2));
    CHECK(lifted1.contains(3));
    CHECK(lifted1.contains(7));

    EdgeMultiset without_yz;
    without_yz.add(7);
    const EdgeMultiset lifted2 = lift_step(without_yz, step);
    CHECK(lifted2.contains(2));
    CHECK(lifted2.contains(1));
    CHECK_FALSE(lifted2.contains(3));

    EdgeMultiset bad;
    bad.add(10);
    CHECK_THROWS_AS(lift_step(bad, step), InvariantError);
}

TEST_CASE("lift cost identity: both cases add c(vy) + c(vx)") {
    // c_vx = 3, c_vy = 2, c_vz = 7, c_yz = 4: replacing yz costs -4 + 2 + 7 = 5,
    // adding vy + vx costs 2 + 3 = 5.
    const Rational c_vx(3), c_vy(2), c_vz(7), c_yz(4);
    CHECK(-c_yz + c_vy + c_vz == c_vy + c_vx);
    CHECK(c_yz == c_vz - c_vx);
}

TEST_CASE("corpus sweep: postconditions hold for every instance and edge") {
    for (const auto& inst : corpus_4reg(7, 2)) {
        for (EdgeId e : inst.graph.live_edges()) {
            const TwoThirdsResult r = solve_two_thirds(inst.graph, e);
            check_postconditions(inst.graph, e, r);
        }
    }
}

TEST_CASE("verify_levels re-checks connectivity at every recursion level") {
    TwoThirdsOptions opt;
    opt.verify_levels = true;
    for (const auto& inst : corpus_4reg(6, 1)) {
        for (EdgeId e : inst.graph.live_edges()) {
            const TwoThirdsResult r = solve_two_thirds(inst.graph, e, opt);
            check_postconditions(inst.graph, e, r);
        }
    }
}

TEST_CASE("cost identity folds exactly over the trace") {
    MultiGraph g = make_circulant_c12(7);
    assign_random_costs(g, 17, -10, 10);
    const TwoThirdsResult r = solve_two_thirds(g, 0);

    // Replay the trace: each lift adds exactly c(y) + c(x) of its level, so
    // the final cost is the base-case cost plus the sum over all levels.
    MultiGraph work = g;
    Rational lift_sum(0);
    EdgeId designated = 0;
    for (const SplitStep& step : r.trace.steps) {
        lift_sum += work.edge(step.y_edge).cost + work.edge(step.x_edge).cost;
        const SplitStep replayed =
            complete_split_at(work, step.center, designated, step.x_edge, step.y_edge);
        CHECK(replayed.created_ux == step.created_ux);
        CHECK(replayed.created_yz == step.created_yz);
        CHECK(replayed.cost_assigned_yz == step.cost_assigned_yz);
        designated = replayed.created_ux;
    }
    std::vector<Rational> base_costs;
    for (EdgeId id : work.live_edges())
        if (id != designated) base_costs.push_back(work.edge(id).cost);
    std::sort(base_costs.begin(), base_costs.end());
    const Rational base_cost = base_costs[0] + base_costs[1];
    CHECK(r.cost == base_cost + lift_sum);
}

TEST_CASE("deterministic: the same input yields the same answer") {
    MultiGraph g = random_4reg_4ec(7, 55);
    assign_random_costs(g, 66, -10, 10);
    const TwoThirdsResult a = solve_two_thirds(g, 2);
    const TwoThirdsResult b = solve_two_thirds(g, 2);
    CHECK(a.edges.mult == b.edges.mult);
    CHECK(a.cost == b.cost);
}

TEST_CASE("input validation names the offending vertex") {
    MultiGraph bad(3);
    bad.add_edge(0, 1);
    bad.add_edge(0, 1);
    bad.add_edge(0, 2);
    bad.add_edge(0, 2);
    bad.add_edge(1, 2);
    // vertex 0 has degree 4, vertices 1 and 2 have degree 3
    CHECK_THROWS_WITH_AS(solve_two_thirds(bad, 0),
                         doctest::Contains("degree"), DomainError);

    // 4-regular but not 4-edge-connected: two doubled triangles sharing nothing
    MultiGraph split(6);
    for (int b = 0; b < 6; b += 3)
        for (int i = 0; i < 3; ++i) {
            split.add_edge(b + i, b + (i + 1) % 3);
            split.add_edge(b + i, b + (i + 1) % 3);
        }
    CHECK_THROWS_AS(solve_two_thirds(split, 0), DomainError);
}

TEST_CASE("circulant smoke test at moderate size") {
    const MultiGraph g = make_circulant_c12(60);
    const TwoThirdsResult r = solve_two_thirds(g, 0);
    check_postconditions(g, 0, r);
    CHECK(r.trace.steps.size() == 58);
}
