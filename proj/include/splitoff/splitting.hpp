#pragma once

#include <vector>

#include "splitoff/multigraph.hpp"

namespace splitoff {

// Neighborhood of a degree-4 vertex v relative to the other endpoint u of a
// designated edge e = uv. Only these four configurations can occur in a
// 4-regular 4-edge-connected multigraph with at least 3 vertices.
enum class Figure1Case {
    FourDistinct,    // u, x, y, z all distinct
    ParallelWithU,   // v has two parallel edges with u
    ParallelWithX,   // v has two parallel edges with some x != u
    TwoDoubleEdges,  // v has two parallel edges to each of u and x
};

// One complete splitting at `center`: (designated, x_edge) was split first,
// then (y_edge, z_edge). The created yz edge carries cost(z) - cost(x).
struct SplitStep {
    VertexId center = -1;
    EdgeId designated = -1;
    EdgeId x_edge = -1;
    EdgeId y_edge = -1;
    EdgeId z_edge = -1;
    EdgeId created_ux = -1;
    EdgeId created_yz = -1;
    Rational cost_assigned_yz;
};

struct AdmissibleSet {
    VertexId center = -1;
    EdgeId designated = -1;
    std::vector<EdgeId> members;  // ascending edge id
};

// G + st - sv - vt at the shared endpoint. Rejects pairs that would create a
// self-loop (parallel edges). The new record carries Split provenance and
// cost 0; the caller sets the cost afterwards.
EdgeId split_off_pair(MultiGraph& g, EdgeId sv, EdgeId vt);

Figure1Case figure1_case(const MultiGraph& g, VertexId v, EdgeId e);

// Whether (e, f) is an admissible pair at v. In the FourDistinct case this
// splits both pairs on a scratch network, contracts ux -> s and yz -> t and
// checks for 4 edge-disjoint s-t paths; the degenerate configurations are
// answered by the known admissible sets directly. g is never modified.
bool is_admissible_fast(const MultiGraph& g, VertexId v, EdgeId e, EdgeId f);

// Tests the three candidates in ascending edge-id order. Fewer than two
// admissible members signals a corrupted input (not 4-regular 4EC) and
// raises InvariantError.
AdmissibleSet admissible_set(const MultiGraph& g, VertexId v, EdgeId e);

// Splits (e, x_choice) then (y_choice, z), assigns cost(yz) := cost(z) -
// cost(x_choice), and marks v dead. x_choice must be admissible with e.
SplitStep complete_split_at(MultiGraph& g, VertexId v, EdgeId e, EdgeId x_choice,
                            EdgeId y_choice);

// Exact inverse of complete_split_at on the same graph.
void undo_complete_split(MultiGraph& g, const SplitStep& step);

}  // namespace splitoff
