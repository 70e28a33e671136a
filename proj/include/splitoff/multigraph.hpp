#pragma once

#include <map>
#include <utility>
#include <vector>

#include "splitoff/errors.hpp"
#include "splitoff/rational.hpp"

namespace splitoff {

using VertexId = int;
using EdgeId = int;

// Where an edge record came from: a position in the input edge list, or a
// splitting-off operation that consumed two earlier records.
struct Provenance {
    enum class Kind { Input, Split };
    Kind kind = Kind::Input;
    int a = -1;  // Input: index of the originating input edge; Split: first consumed id
    int b = -1;  // Split: second consumed id

    static Provenance input(int original) { return Provenance{Kind::Input, original, -1}; }
    static Provenance split(EdgeId c1, EdgeId c2) { return Provenance{Kind::Split, c1, c2}; }
};

struct EdgeRecord {
    EdgeId id = -1;
    VertexId u = -1;
    VertexId v = -1;
    Rational cost;
    Provenance origin;
    bool alive = false;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool incident_to(VertexId w) const { return u == w || v == w; }
};

// Mutable multigraph with distinct edge identities. Parallel edges are
// separate records; self-loops are rejected. Edge ids are never reused and
// deleted records stay addressable, so a split trace can be unwound exactly.
// Dead vertices keep their id (no renumbering).
class MultiGraph {
  public:
    MultiGraph() = default;
    explicit MultiGraph(int n);

    VertexId add_vertex();
    int vertex_slots() const { return static_cast<int>(vertex_alive_.size()); }
    int live_vertex_count() const { return live_vertices_; }
    bool vertex_alive(VertexId v) const;
    std::vector<VertexId> live_vertices() const;  // ascending
    bool all_vertices_alive() const { return live_vertices_ == vertex_slots(); }
    void kill_vertex(VertexId v);  // requires degree zero
    void revive_vertex(VertexId v);

    EdgeId add_edge(VertexId u, VertexId v, Rational cost = Rational(0),
                    Provenance origin = Provenance{});
    // Appends an already-dead record; used by contraction to keep surviving
    // edge ids aligned with the input graph.
    EdgeId add_dead_record(VertexId u, VertexId v, Rational cost, Provenance origin);
    void delete_edge(EdgeId e);
    void restore_edge(EdgeId e);  // re-links a previously deleted record
    const EdgeRecord& edge(EdgeId e) const;
    bool edge_alive(EdgeId e) const;
    void set_cost(EdgeId e, const Rational& c);
    int edge_slots() const { return static_cast<int>(records_.size()); }
    int live_edge_count() const { return live_edges_; }
    std::vector<EdgeId> live_edges() const;  // ascending

    // Parallel copies count separately. Unknown or dead vertex -> DomainError.
    int degree(VertexId v) const;
    const std::vector<EdgeId>& incident(VertexId v) const;

    Rational cost_of_live_edges() const;  // c(G)

  private:
    void check_live_vertex(VertexId v, const char* who) const;
    void check_record(EdgeId e, const char* who) const;

    std::vector<EdgeRecord> records_;
    std::vector<std::vector<EdgeId>> adjacency_;
    std::vector<char> vertex_alive_;
    int live_vertices_ = 0;
    int live_edges_ = 0;
};

// Multiset of edge ids; answers of the two-thirds algorithm keep every
// multiplicity at 1, 2ECM answers over original pairs go up to 2.
struct EdgeMultiset {
    std::map<EdgeId, int> mult;

    bool empty() const { return mult.empty(); }
    bool contains(EdgeId e) const { return mult.find(e) != mult.end(); }
    int multiplicity(EdgeId e) const;
    void add(EdgeId e, int k = 1);
    void remove(EdgeId e, int k = 1);  // InvariantError if not present
    int total_edges() const;           // sum of multiplicities
};

// Sum of multiplicity(e) * cost(e), exact. Unknown id -> DomainError.
Rational total_cost(const MultiGraph& g, const EdgeMultiset& s);

struct Contraction {
    MultiGraph graph;                   // one vertex per part; surviving edges keep id and cost
    std::vector<VertexId> vertex_image; // old vertex -> new vertex (-1 for dead)
    std::vector<EdgeId> deleted_edges;  // intra-part records, removed as loops
};

// parts must cover every live vertex exactly once (connectivity within a
// part is the caller's responsibility).
Contraction contract_edge_set(const MultiGraph& g, const std::vector<std::vector<VertexId>>& parts);

// All-pairs shortest-path matrix under c, exact. Requires a connected graph
// with all vertices alive and non-negative costs.
std::vector<std::vector<Rational>> metric_closure(const MultiGraph& g);

}  // namespace splitoff
