#pragma once

#include <vector>

#include "splitoff/splitting.hpp"

namespace splitoff {

// Ordered record of the complete splittings performed on the way down to the
// two-vertex base case; consumed in reverse by the lift.
struct SplitTrace {
    std::vector<SplitStep> steps;
};

struct ChosenLabels {
    EdgeId x_edge = -1;  // admissible partner of maximum cost
    EdgeId y_edge = -1;  // admissible partner of maximum cost among the rest
    EdgeId z_edge = -1;  // the remaining incident edge
};

// Labeling rule of the recursion: x and y are admissible partners of e with
// cost(x) >= cost(y); ties go to the smaller edge id.
ChosenLabels choose_labels(const MultiGraph& g, VertexId v, EdgeId e);

// Two-case lift rule. If the created yz edge is in h, replace it by y and z
// (subdivision); otherwise add y and x (ear through the center). Either way
// the cost grows by exactly cost(y_edge) + cost(x_edge).
EdgeMultiset lift_step(EdgeMultiset h, const SplitStep& step);

struct TwoThirdsOptions {
    // Re-check 2-edge-connectivity of the partially lifted answer at every
    // recursion level (slow; used by the debug verification sweeps).
    bool verify_levels = false;
};

struct TwoThirdsResult {
    EdgeMultiset edges;  // multiplicity 1, designated edge excluded
    Rational cost;
    Rational bound;  // (2/3) c(G - e)
    bool bound_holds = false;
    bool two_edge_connected_spanning = false;
    bool multiplicity_ok = false;
    bool designated_excluded = false;
    SplitTrace trace;
};

// The O(n^2) recursion: repeatedly complete-split at an endpoint of the
// designated edge, solve the four-parallel-edge base case, then fold the
// lift over the trace in reverse. Costs may be negative. The input must be
// 4-regular and 4-edge-connected (checked once at entry).
TwoThirdsResult solve_two_thirds(const MultiGraph& g, EdgeId e,
                                 const TwoThirdsOptions& opt = {});

}  // namespace splitoff
