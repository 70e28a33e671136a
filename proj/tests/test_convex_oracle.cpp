#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "splitoff/connectivity.hpp"
#include "splitoff/convex_oracle.hpp"
#include "splitoff/generate.hpp"
#include "splitoff/two_thirds.hpp"

using namespace splitoff;
using namespace splitoff::testing;

TEST_CASE("base case: three pairs with weight 1/3 each") {
    const MultiGraph four = make_four_parallel();
    const ConvexCombination comb = convex_decomposition(four, 0);
    REQUIRE(comb.items.size() == 3);
    for (const auto& [weight, h] : comb.items) {
        CHECK(weight == Rational(1, 3));
        CHECK(h.total_edges() == 2);
        CHECK_FALSE(h.contains(0));
    }
    CHECK(verify_convex_combination(four, 0, comb).ok());
}

TEST_CASE("merged combination has coordinate 2/3 everywhere off the designated edge") {
    const MultiGraph k5 = make_complete(5);
    const ConvexCombination comb = convex_decomposition(k5, 0);
    const ConvexCheck check = verify_convex_combination(k5, 0, comb);
    CHECK(check.weights_sum_to_one);
    CHECK(check.weights_positive);
    CHECK(check.identity_holds);
    CHECK(check.all_two_edge_connected);
    CHECK(check.multiplicities_ok);

    // spot-check one coordinate by hand: q_f = 2/3 for a non-designated edge
    Rational q(0);
    for (const auto& [weight, h] : comb.items)
        if (h.contains(5)) q += weight;
    CHECK(q == Rational(2, 3));
}

TEST_CASE("decomposition invariants across the small corpus") {
    for (const auto& inst : corpus_4reg(6, 1)) {
        for (EdgeId e : inst.graph.live_edges()) {
            const ConvexCombination comb = convex_decomposition(inst.graph, e);
            CHECK(verify_convex_combination(inst.graph, e, comb).ok());
        }
    }
}

TEST_CASE("duplicate subgraphs are merged") {
    const MultiGraph dc = make_doubled_cycle(3);
    const ConvexCombination comb = convex_decomposition(dc, 0);
    // canonical keys are unique
    std::set<std::vector<EdgeId>> keys;
    for (const auto& [weight, h] : comb.items) {
        std::vector<EdgeId> key;
        for (const auto& [id, k] : h.mult) key.push_back(id);
        CHECK(keys.insert(key).second);
    }
    CHECK(verify_convex_combination(dc, 0, comb).ok());
}

TEST_CASE("vertex limit raises a resource error") {
    const MultiGraph big = make_circulant_c12(12);
    CHECK_THROWS_AS(convex_decomposition(big, 0, 10), ResourceError);
    CHECK_NOTHROW(convex_decomposition(big, 0, 12));
}

TEST_CASE("cross-oracle consistency") {
    for (const auto& inst : corpus_4reg(6, 1)) {
        if (inst.graph.live_edge_count() > 16) continue;
        int tried = 0;
        for (EdgeId e : inst.graph.live_edges()) {
            if (tried++ > 3) break;
            const auto [opt_edges, opt_cost] = brute_optimal_2ec_subgraph(inst.graph, e);
            const ConvexCombination comb = convex_decomposition(inst.graph, e);
            const TwoThirdsResult algo = solve_two_thirds(inst.graph, e);
            const Rational bound =
                Rational(2, 3) * (inst.graph.cost_of_live_edges() - inst.graph.edge(e).cost);
            Rational min_item(0);
            bool first = true;
            for (const auto& [weight, h] : comb.items) {
                const Rational c = total_cost(inst.graph, h);
                if (first || c < min_item) min_item = c;
                first = false;
            }
            // every member of the combination costs at least the optimum,
            // and both routes respect the 2/3 bound; the algorithm's answer
            // is NOT required to undercut the combination's cheapest member.
            CHECK(min_item >= opt_cost);
            CHECK(algo.cost >= opt_cost);
            CHECK(min_item <= bound);
            CHECK(algo.cost <= bound);
        }
    }
}

TEST_CASE("brute admissibility on K5 and the engineered instance") {
    const MultiGraph k5 = make_complete(5);  // edge 0 is (0,1); center v = 0
    for (EdgeId f : k5.incident(0))
        if (f != 0) CHECK(brute_admissible(k5, 0, 0, f));

    const MultiGraph bad = three_cut_instance();
    EdgeId e = -1, f = -1;
    for (EdgeId id : bad.incident(10)) {
        if (bad.edge(id).other(10) == 1) e = id;
        if (bad.edge(id).other(10) == 2) f = id;
    }
    CHECK_FALSE(brute_admissible(bad, 10, e, f));
}

TEST_CASE("brute optimal 2EC subgraph on named instances") {
    const MultiGraph k5 = make_complete(5);
    const auto [h5, c5] = brute_optimal_2ec_subgraph(k5, 0);
    CHECK(c5 == Rational(5));
    CHECK(is_two_edge_connected_spanning(k5, h5));

    const MultiGraph dc = make_doubled_cycle(4);
    const auto [h4, c4] = brute_optimal_2ec_subgraph(dc, 0);
    CHECK(c4 == Rational(4));

    // feasibility is guaranteed on 4-regular 4EC inputs (G - e is 3EC)
    for (const auto& inst : corpus_4reg(5, 1)) {
        if (inst.graph.live_edge_count() > 14) continue;
        CHECK_NOTHROW(brute_optimal_2ec_subgraph(inst.graph, 0));
    }
}

TEST_CASE("brute optimal 2EC subgraph respects the edge fence") {
    const MultiGraph big = make_circulant_c12(13);  // 26 live edges
    CHECK_THROWS_AS(brute_optimal_2ec_subgraph(big, 0), ResourceError);
}

TEST_CASE("brute optimal 2ECM on unit metrics") {
    const auto ones = [](int n) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(1)));
        for (int i = 0; i < n; ++i) m[i][i] = Rational(0);
        return m;
    };
    const auto [h3, c3] = brute_optimal_2ecm(ones(3), 3);
    CHECK(c3 == Rational(3));  // the triangle
    CHECK(h3.size() == 3);

    const auto [h4, c4] = brute_optimal_2ecm(ones(4), 4);
    CHECK(c4 == Rational(4));  // a 4-cycle

    CHECK_THROWS_AS(brute_optimal_2ecm(ones(7), 7), ResourceError);
}

TEST_CASE("brute optimal 2ECM on a star metric") {
    // star with center 0 and leaf weights 1, 1, 5: every 2ECM answer costs at
    // least sum_v 2 w(v) = 14, and the doubled star attains it.
    const int n = 4;
    const std::vector<Rational> w = {Rational(0), Rational(1), Rational(1), Rational(5)};
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m[i][j] = w[i] + w[j];
    const auto [h, c] = brute_optimal_2ecm(m, 4);
    CHECK(c == Rational(14));
    std::map<std::pair<int, int>, int> doubled_star;
    for (int j = 1; j < n; ++j) doubled_star[{0, j}] = 2;
    Rational star_cost(0);
    for (const auto& [p, k] : doubled_star) star_cost += Rational(k) * m[p.first][p.second];
    CHECK(star_cost == c);
}
