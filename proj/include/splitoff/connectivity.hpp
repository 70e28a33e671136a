#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "splitoff/multigraph.hpp"

namespace splitoff {

// Unit-capacity s-t max flow via BFS augmenting paths. stop_at caps the
// number of augmentations (pass -1 for the exact value). Each augmenting
// path is found in one traversal; with stop_at = k at most k searches run.
// bfs_count, when given, receives the number of searches performed.
int max_flow_value(const MultiGraph& g, VertexId s, VertexId t, int stop_at = -1,
                   int* bfs_count = nullptr);

// Fractional max flow with per-edge rational capacities, exact.
Rational max_flow_value(const MultiGraph& g, VertexId s, VertexId t,
                        const std::map<EdgeId, Rational>& cap);

// Local edge connectivity (size of a minimum x-y cut, multiedges counted
// separately).
int lambda(const MultiGraph& g, VertexId x, VertexId y);

// True iff lambda(x, y) >= k for all live pairs avoiding `excluded`.
// Certified with n-1 rooted flows capped at k.
bool is_k_edge_connected_excluding(const MultiGraph& g, int k,
                                   std::optional<VertexId> excluded = std::nullopt);

// True iff the multigraph induced by s touches every live vertex of `over`,
// is connected, and has no bridge (a parallel pair is never a bridge).
bool is_two_edge_connected_spanning(const MultiGraph& over, const EdgeMultiset& s);

// Same check for an answer given as pair -> multiplicity over vertices 0..n-1.
bool is_two_edge_connected_pair_multiset(int n,
                                         const std::map<std::pair<int, int>, int>& mult);

struct GlobalCut {
    Rational value;
    std::vector<VertexId> side;  // one shore of a minimum cut
};

// Exact global minimum cut under rational edge capacities, via deterministic
// maximum-adjacency-ordering contraction. A disconnected graph yields value 0.
GlobalCut global_min_cut(const MultiGraph& g, const std::map<EdgeId, Rational>& cap);

Rational global_min_cut_value(const MultiGraph& g, const std::map<EdgeId, Rational>& cap);

namespace detail {

// Shared unit-capacity flow network; vertices are caller-defined labels in
// [0, n). Undirected unit edges become an arc pair with capacity 1 each way.
class UnitFlowNet {
  public:
    explicit UnitFlowNet(int n);
    void add_edge(int a, int b);
    // Max flow from s to t, capped at stop_at when stop_at >= 0.
    int max_flow(int s, int t, int stop_at = -1, int* bfs_count = nullptr);

  private:
    int n_;
    std::vector<std::vector<int>> out_;  // arc indices per vertex
    std::vector<int> to_;
    std::vector<int> cap_;
};

}  // namespace detail

}  // namespace splitoff
