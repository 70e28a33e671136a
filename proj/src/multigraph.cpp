#include "splitoff/multigraph.hpp"

#include <algorithm>
#include <string>

namespace splitoff {

namespace {

std::string vtx(VertexId v) { return std::to_string(v); }

}  // namespace

MultiGraph::MultiGraph(int n) {
    if (n < 0) throw DomainError("negative vertex count");
    vertex_alive_.assign(n, 1);
    adjacency_.assign(n, {});
    live_vertices_ = n;
}

VertexId MultiGraph::add_vertex() {
    vertex_alive_.push_back(1);
    adjacency_.emplace_back();
    ++live_vertices_;
    return vertex_slots() - 1;
}

bool MultiGraph::vertex_alive(VertexId v) const {
    return v >= 0 && v < vertex_slots() && vertex_alive_[v];
}

std::vector<VertexId> MultiGraph::live_vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_vertices_);
    for (VertexId v = 0; v < vertex_slots(); ++v)
        if (vertex_alive_[v]) out.push_back(v);
    return out;
}

void MultiGraph::check_live_vertex(VertexId v, const char* who) const {
    if (!vertex_alive(v))
        throw DomainError(std::string(who) + ": unknown or dead vertex " + vtx(v));
}

void MultiGraph::check_record(EdgeId e, const char* who) const {
    if (e < 0 || e >= edge_slots())
        throw DomainError(std::string(who) + ": unknown edge id " + std::to_string(e));
}

void MultiGraph::kill_vertex(VertexId v) {
    check_live_vertex(v, "kill_vertex");
    if (!adjacency_[v].empty())
        throw DomainError("kill_vertex: vertex " + vtx(v) + " still has incident edges");
    vertex_alive_[v] = 0;
    --live_vertices_;
}

void MultiGraph::revive_vertex(VertexId v) {
    if (v < 0 || v >= vertex_slots() || vertex_alive_[v])
        throw DomainError("revive_vertex: vertex " + vtx(v) + " is not dead");
    vertex_alive_[v] = 1;
    ++live_vertices_;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v, Rational cost, Provenance origin) {
    check_live_vertex(u, "add_edge");
    check_live_vertex(v, "add_edge");
    if (u == v) throw DomainError("add_edge: self-loop at vertex " + vtx(u));
    const EdgeId id = edge_slots();
    records_.push_back(EdgeRecord{id, u, v, std::move(cost), origin, true});
    adjacency_[u].push_back(id);
    adjacency_[v].push_back(id);
    ++live_edges_;
    return id;
}

EdgeId MultiGraph::add_dead_record(VertexId u, VertexId v, Rational cost, Provenance origin) {
    const EdgeId id = edge_slots();
    records_.push_back(EdgeRecord{id, u, v, std::move(cost), origin, false});
    return id;
}

void MultiGraph::delete_edge(EdgeId e) {
    check_record(e, "delete_edge");
    EdgeRecord& rec = records_[e];
    if (!rec.alive) throw DomainError("delete_edge: edge " + std::to_string(e) + " already dead");
    for (VertexId w : {rec.u, rec.v}) {
        auto& adj = adjacency_[w];
        adj.erase(std::find(adj.begin(), adj.end(), e));
    }
    rec.alive = false;
    --live_edges_;
}

void MultiGraph::restore_edge(EdgeId e) {
    check_record(e, "restore_edge");
    EdgeRecord& rec = records_[e];
    if (rec.alive) throw DomainError("restore_edge: edge " + std::to_string(e) + " is alive");
    check_live_vertex(rec.u, "restore_edge");
    check_live_vertex(rec.v, "restore_edge");
    adjacency_[rec.u].push_back(e);
    adjacency_[rec.v].push_back(e);
    rec.alive = true;
    ++live_edges_;
}

const EdgeRecord& MultiGraph::edge(EdgeId e) const {
    check_record(e, "edge");
    return records_[e];
}

bool MultiGraph::edge_alive(EdgeId e) const {
    return e >= 0 && e < edge_slots() && records_[e].alive;
}

void MultiGraph::set_cost(EdgeId e, const Rational& c) {
    check_record(e, "set_cost");
    records_[e].cost = c;
}

std::vector<EdgeId> MultiGraph::live_edges() const {
    std::vector<EdgeId> out;
    out.reserve(live_edges_);
    for (const EdgeRecord& rec : records_)
        if (rec.alive) out.push_back(rec.id);
    return out;
}

int MultiGraph::degree(VertexId v) const {
    check_live_vertex(v, "degree");
    return static_cast<int>(adjacency_[v].size());
}

const std::vector<EdgeId>& MultiGraph::incident(VertexId v) const {
    check_live_vertex(v, "incident");
    return adjacency_[v];
}

Rational MultiGraph::cost_of_live_edges() const {
    Rational sum(0);
    for (const EdgeRecord& rec : records_)
        if (rec.alive) sum += rec.cost;
    return sum;
}

int EdgeMultiset::multiplicity(EdgeId e) const {
    const auto it = mult.find(e);
    return it == mult.end() ? 0 : it->second;
}

void EdgeMultiset::add(EdgeId e, int k) {
    if (k <= 0) throw InvariantError("EdgeMultiset::add: non-positive count");
    mult[e] += k;
}

void EdgeMultiset::remove(EdgeId e, int k) {
    const auto it = mult.find(e);
    if (it == mult.end() || it->second < k)
        throw InvariantError("EdgeMultiset::remove: edge " + std::to_string(e) + " not present");
    it->second -= k;
    if (it->second == 0) mult.erase(it);
}

int EdgeMultiset::total_edges() const {
    int total = 0;
    for (const auto& [e, k] : mult) total += k;
    return total;
}

Rational total_cost(const MultiGraph& g, const EdgeMultiset& s) {
    Rational sum(0);
    for (const auto& [e, k] : s.mult) sum += Rational(k) * g.edge(e).cost;
    return sum;
}

Contraction contract_edge_set(const MultiGraph& g, const std::vector<std::vector<VertexId>>& parts) {
    std::vector<VertexId> image(g.vertex_slots(), -1);
    int covered = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw DomainError("contract_edge_set: empty part");
        for (VertexId v : parts[p]) {
            if (!g.vertex_alive(v))
                throw DomainError("contract_edge_set: dead vertex " + vtx(v) + " in partition");
            if (image[v] != -1)
                throw DomainError("contract_edge_set: vertex " + vtx(v) + " listed twice");
            image[v] = static_cast<int>(p);
            ++covered;
        }
    }
    if (covered != g.live_vertex_count())
        throw DomainError("contract_edge_set: partition does not cover all live vertices");

    Contraction out;
    out.vertex_image = image;
    out.graph = MultiGraph(static_cast<int>(parts.size()));
    // Surviving edges keep their ids; deleted and already-dead slots become
    // dead records so that ids line up with the input graph.
    for (EdgeId id = 0; id < g.edge_slots(); ++id) {
        const EdgeRecord& rec = g.edge(id);
        if (!rec.alive) {
            out.graph.add_dead_record(-1, -1, rec.cost, rec.origin);
            continue;
        }
        const VertexId a = image[rec.u];
        const VertexId b = image[rec.v];
        if (a == b) {
            out.deleted_edges.push_back(id);
            out.graph.add_dead_record(a, b, rec.cost, rec.origin);
        } else {
            out.graph.add_edge(a, b, rec.cost, rec.origin);
        }
    }
    return out;
}

std::vector<std::vector<Rational>> metric_closure(const MultiGraph& g) {
    if (!g.all_vertices_alive())
        throw DomainError("metric_closure: graph has dead vertices");
    const int n = g.vertex_slots();
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::vector<char>> known(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) known[i][i] = 1;
    for (EdgeId id : g.live_edges()) {
        const EdgeRecord& rec = g.edge(id);
        if (rec.cost < 0)
            throw DomainError("metric_closure: negative cost on edge " + std::to_string(id));
        if (!known[rec.u][rec.v] || rec.cost < dist[rec.u][rec.v]) {
            dist[rec.u][rec.v] = rec.cost;
            dist[rec.v][rec.u] = rec.cost;
            known[rec.u][rec.v] = known[rec.v][rec.u] = 1;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!known[i][k]) continue;
            for (int j = 0; j < n; ++j) {
                if (!known[k][j]) continue;
                const Rational through = dist[i][k] + dist[k][j];
                if (!known[i][j] || through < dist[i][j]) {
                    dist[i][j] = through;
                    known[i][j] = 1;
                }
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!known[i][j]) throw DomainError("metric_closure: graph is disconnected");
    return dist;
}

}  // namespace splitoff
