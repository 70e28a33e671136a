#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "splitoff/generate.hpp"
#include "splitoff/multigraph.hpp"

using namespace splitoff;
using namespace splitoff::testing;

TEST_CASE("degree counts parallel copies separately") {
    const MultiGraph four = make_four_parallel();
    CHECK(four.degree(0) == 4);
    CHECK(four.degree(1) == 4);

    const MultiGraph k5 = make_complete(5);
    for (VertexId v : k5.live_vertices()) CHECK(k5.degree(v) == 4);

    MultiGraph g(3);
    g.add_edge(0, 1);
    CHECK(g.degree(2) == 0);  // isolated
    CHECK_THROWS_AS(g.degree(7), DomainError);
}

TEST_CASE("self-loops are rejected") {
    MultiGraph g(2);
    CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
}

TEST_CASE("contracting a triangle to one vertex deletes all edges") {
    MultiGraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    const Contraction c = contract_edge_set(tri, {{0, 1, 2}});
    CHECK(c.graph.live_vertex_count() == 1);
    CHECK(c.graph.live_edge_count() == 0);
    CHECK(c.deleted_edges.size() == 3);
}

TEST_CASE("contracting one 4-cycle of the cube keeps 8 of 12 edges") {
    // cube: bottom 0-1-2-3, top 4-5-6-7, verticals i -- i+4
    MultiGraph cube(8);
    for (int i = 0; i < 4; ++i) cube.add_edge(i, (i + 1) % 4);
    for (int i = 0; i < 4; ++i) cube.add_edge(4 + i, 4 + (i + 1) % 4);
    for (int i = 0; i < 4; ++i) cube.add_edge(i, i + 4);
    const Contraction c =
        contract_edge_set(cube, {{0, 1, 2, 3}, {4}, {5}, {6}, {7}});
    CHECK(c.graph.live_vertex_count() == 5);
    CHECK(c.deleted_edges.size() == 4);   // the bottom cycle
    CHECK(c.graph.live_edge_count() == 8);
    // surviving edges keep their ids and costs
    for (EdgeId id : c.graph.live_edges()) CHECK(cube.edge(id).cost == c.graph.edge(id).cost);
}

TEST_CASE("identity partition leaves the graph unchanged") {
    const MultiGraph g = make_circulant_c12(6);
    std::vector<std::vector<VertexId>> parts;
    for (VertexId v : g.live_vertices()) parts.push_back({v});
    const Contraction c = contract_edge_set(g, parts);
    CHECK(c.deleted_edges.empty());
    CHECK(c.graph.live_edge_count() == g.live_edge_count());
    for (EdgeId id : g.live_edges()) {
        CHECK(c.graph.edge_alive(id));
        CHECK(c.graph.edge(id).cost == g.edge(id).cost);
    }
}

TEST_CASE("contract bookkeeping: every edge survives or is reported deleted") {
    const MultiGraph g = make_doubled_cycle(5);
    const Contraction c = contract_edge_set(g, {{0, 1}, {2}, {3, 4}});
    for (EdgeId id : g.live_edges()) {
        const bool survived = c.graph.edge_alive(id);
        const bool deleted = std::find(c.deleted_edges.begin(), c.deleted_edges.end(), id) !=
                             c.deleted_edges.end();
        CHECK(survived != deleted);
    }
}

TEST_CASE("metric closure of a path") {
    MultiGraph path(3);
    path.add_edge(0, 1, Rational(1));
    path.add_edge(1, 2, Rational(1));
    const auto d = metric_closure(path);
    CHECK(d[0][2] == Rational(2));
    CHECK(d[0][0] == Rational(0));
    CHECK(d[2][0] == Rational(2));
}

TEST_CASE("metric closure shortcuts the expensive triangle edge") {
    MultiGraph tri(3);
    tri.add_edge(0, 1, Rational(1));
    tri.add_edge(1, 2, Rational(1));
    tri.add_edge(0, 2, Rational(5));
    const auto d = metric_closure(tri);
    CHECK(d[0][2] == Rational(2));
}

TEST_CASE("metric closure is idempotent on a metric graph") {
    MultiGraph g(3);
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(1));
    g.add_edge(0, 2, Rational(2));
    const auto d = metric_closure(g);
    CHECK(d[0][1] == Rational(1));
    CHECK(d[1][2] == Rational(1));
    CHECK(d[0][2] == Rational(2));
}

TEST_CASE("metric closure rejects disconnected and negative inputs") {
    MultiGraph disc(3);
    disc.add_edge(0, 1, Rational(1));
    CHECK_THROWS_AS(metric_closure(disc), DomainError);

    MultiGraph neg(2);
    neg.add_edge(0, 1, Rational(-1));
    CHECK_THROWS_AS(metric_closure(neg), DomainError);
}

TEST_CASE("metric closure satisfies the triangle inequality exactly") {
    for (int seed = 0; seed < 5; ++seed) {
        MultiGraph g = random_4reg_4ec(7, 300 + seed);
        assign_random_costs(g, seed, 0, 10);
        const auto d = metric_closure(g);
        const int n = g.vertex_slots();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
    }
}

TEST_CASE("total_cost is an exact weighted sum") {
    MultiGraph g(2);
    const EdgeId a = g.add_edge(0, 1, Rational(3, 2));
    const EdgeId b = g.add_edge(0, 1, Rational(1));
    const EdgeId c = g.add_edge(0, 1, Rational(2));

    EdgeMultiset empty;
    CHECK(total_cost(g, empty) == Rational(0));

    EdgeMultiset twice;
    twice.add(a, 2);
    CHECK(total_cost(g, twice) == Rational(3));

    EdgeMultiset pair;
    pair.add(b);
    pair.add(c);
    CHECK(total_cost(g, pair) == Rational(3));

    EdgeMultiset bogus;
    bogus.add(99);
    CHECK_THROWS_AS(total_cost(g, bogus), DomainError);
}

TEST_CASE("degree sum equals twice the edge count through mutations") {
    Rng rng(2024);
    MultiGraph g = random_4reg_4ec(6, 11);
    const auto degree_sum = [&] {
        int sum = 0;
        for (VertexId v : g.live_vertices()) sum += g.degree(v);
        return sum;
    };
    CHECK(degree_sum() == 2 * g.live_edge_count());
    std::vector<EdgeId> removed;
    for (int step = 0; step < 40; ++step) {
        const auto live = g.live_edges();
        if (!removed.empty() && (live.empty() || rng.range(0, 1) == 0)) {
            const int i = rng.range(0, static_cast<int>(removed.size()) - 1);
            g.restore_edge(removed[i]);
            removed.erase(removed.begin() + i);
        } else if (!live.empty()) {
            const EdgeId id = live[rng.range(0, static_cast<int>(live.size()) - 1)];
            g.delete_edge(id);
            removed.push_back(id);
        }
        CHECK(degree_sum() == 2 * g.live_edge_count());
    }
}

TEST_CASE("edge ids are never reused") {
    MultiGraph g(3);
    const EdgeId a = g.add_edge(0, 1);
    g.delete_edge(a);
    const EdgeId b = g.add_edge(1, 2);
    CHECK(b != a);
    CHECK(g.edge_slots() == 2);
}
