#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "splitoff/multigraph.hpp"
#include "splitoff/two_thirds.hpp"

namespace splitoff {

// A fractional point of the subtour LP on n vertices. Entries are keyed by
// normalized vertex pairs (u < v); omitted pairs mean x = 0. Costs must be
// non-negative and cover at least the support pairs.
struct HalfIntegralSolution {
    int n = 0;
    std::map<std::pair<int, int>, Rational> x;
    std::map<std::pair<int, int>, Rational> cost;

    Rational lp_value() const;  // c^T x
};

struct SolutionValidation {
    bool half_integral = false;
    bool degrees_ok = false;
    bool cuts_ok = false;
    bool metric_ok = false;
    std::optional<std::pair<int, int>> bad_entry;   // non-half-integral pair
    std::optional<int> bad_degree_vertex;
    std::vector<int> bad_cut_side;                  // witness S when cuts fail

    bool structurally_feasible() const { return half_integral && degrees_ok && cuts_ok; }
};

// Half-integrality by exact denominator check (x in {0, 1/2, 1}, or x = 2 on
// the unique pair when n = 2), degree identities by summation, cut
// feasibility by exact global min cut, metric_ok by comparing the given
// costs against their own shortest-path closure. Reports, never throws.
SolutionValidation validate_solution(const HalfIntegralSolution& s);

struct SupportGraph {
    MultiGraph graph;
    // Input-provenance index -> original pair; record r maps back through
    // graph.edge(r).origin.a.
    std::vector<std::pair<int, int>> original_pair;
};

// Multigraph induced by 2x: one record per half-unit (x = 1/2 -> one copy,
// x = 1 -> two copies, x = 2 at n = 2 -> four copies), each carrying the
// pair's cost. The result is certified 4-regular and 4-edge-connected.
SupportGraph support_multigraph(const HalfIntegralSolution& s);

struct HalfIntegralResult {
    std::map<std::pair<int, int>, int> multiplicity;  // over original pairs, <= 2
    Rational cost;
    Rational lp_value;  // c^T x
    Rational bound;     // (4/3) c^T x
    bool bound_holds = false;
    bool two_edge_connected_spanning = false;
    bool multiplicity_ok = false;
    int trace_length = 0;
    std::pair<int, int> designated{-1, -1};
};

// The Theorem-level driver: validate, build the support of 2x, run the
// two-thirds recursion from the designated edge (default: lowest-id record),
// and map the answer back to original pairs. try_all_edges solves once per
// support record and keeps the cheapest answer.
HalfIntegralResult solve_half_integral(const HalfIntegralSolution& s,
                                       std::optional<std::pair<int, int>> designated = std::nullopt,
                                       bool try_all_edges = false);

struct MetricCompletion {
    int n = 0;
    std::vector<std::vector<Rational>> dist;
    // Normalized pair -> shortest path as a list of edge ids of the raw graph.
    std::map<std::pair<int, int>, std::vector<EdgeId>> path;
};

// Metric closure of a raw cost graph plus one deterministic shortest path per
// pair, so closure-level answers can be expanded to raw edges on request.
MetricCompletion metric_complete_instance(const MultiGraph& raw);

}  // namespace splitoff
