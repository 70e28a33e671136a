#pragma once

#include <map>
#include <utility>
#include <vector>

#include "splitoff/multigraph.hpp"

namespace splitoff {

// Weighted family of 2-edge-connected spanning subgraphs whose characteristic
// vectors average to (2/3) * chi^{E \ {e}} coordinate-exactly.
struct ConvexCombination {
    std::vector<std::pair<Rational, EdgeMultiset>> items;
};

struct ConvexCheck {
    bool weights_sum_to_one = false;
    bool weights_positive = false;
    bool identity_holds = false;
    bool all_two_edge_connected = false;
    bool multiplicities_ok = false;
    bool ok() const {
        return weights_sum_to_one && weights_positive && identity_holds &&
               all_two_edge_connected && multiplicities_ok;
    }
};

// Exponential exact decomposition: recurses on both subinstances obtained by
// the two admissible complete splittings at an endpoint of e, lifts each
// child combination, and averages them with weights 1/2, 1/2. Duplicate
// subgraphs are merged. Partner choice is cost-blind (two lowest-id
// admissible edges). Fenced by vertex_limit (ResourceError beyond).
ConvexCombination convex_decomposition(const MultiGraph& g, EdgeId e, int vertex_limit = 10);

ConvexCheck verify_convex_combination(const MultiGraph& g, EdgeId e,
                                      const ConvexCombination& comb);

// Definitional admissibility: split (e, f) on a copy and check that all
// vertex pairs avoiding v still have local connectivity >= 4. Ground truth
// for is_admissible_fast.
bool brute_admissible(const MultiGraph& g, VertexId v, EdgeId e, EdgeId f);

// Exhaustive minimum-cost 2-edge-connected spanning subgraph of g avoiding
// `forbidden`, costs arbitrary rationals. Fenced at edge_limit live edges.
std::pair<EdgeMultiset, Rational> brute_optimal_2ec_subgraph(const MultiGraph& g,
                                                             EdgeId forbidden,
                                                             int edge_limit = 24);

// Exhaustive minimum-cost 2ECM over the complete graph on n vertices with the
// given cost matrix; multiplicities range over {0,1,2}. Fenced at n_limit.
std::pair<std::map<std::pair<int, int>, int>, Rational> brute_optimal_2ecm(
    const std::vector<std::vector<Rational>>& cost, int n, int n_limit = 6);

}  // namespace splitoff
