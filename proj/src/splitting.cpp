#include "splitoff/splitting.hpp"

#include <algorithm>
#include <string>

#include "splitoff/connectivity.hpp"

namespace splitoff {

namespace {

void check_incident(const MultiGraph& g, VertexId v, EdgeId e, const char* who) {
    if (!g.edge_alive(e))
        throw DomainError(std::string(who) + ": edge " + std::to_string(e) + " is not live");
    if (!g.edge(e).incident_to(v))
        throw DomainError(std::string(who) + ": edge " + std::to_string(e) +
                          " is not incident to vertex " + std::to_string(v));
}

}  // namespace

EdgeId split_off_pair(MultiGraph& g, EdgeId sv, EdgeId vt) {
    if (sv == vt) throw DomainError("split_off_pair: the two edges must be distinct");
    if (!g.edge_alive(sv) || !g.edge_alive(vt))
        throw DomainError("split_off_pair: both edges must be live");
    const EdgeRecord& a = g.edge(sv);
    const EdgeRecord& b = g.edge(vt);

    const bool share_u = b.incident_to(a.u);
    const bool share_v = b.incident_to(a.v);
    if (share_u && share_v)
        throw DomainError("split_off_pair: parallel edges; splitting would create a self-loop");
    if (!share_u && !share_v)
        throw DomainError("split_off_pair: edges share no endpoint");

    const VertexId v = share_u ? a.u : a.v;
    const VertexId s = a.other(v);
    const VertexId t = b.other(v);
    g.delete_edge(sv);
    g.delete_edge(vt);
    return g.add_edge(s, t, Rational(0), Provenance::split(sv, vt));
}

Figure1Case figure1_case(const MultiGraph& g, VertexId v, EdgeId e) {
    if (g.degree(v) != 4)
        throw DomainError("figure1_case: vertex " + std::to_string(v) + " has degree " +
                          std::to_string(g.degree(v)) + ", expected 4");
    check_incident(g, v, e, "figure1_case");
    const VertexId u = g.edge(e).other(v);

    std::vector<VertexId> w;  // other endpoints of the three remaining edges
    for (EdgeId f : g.incident(v))
        if (f != e) w.push_back(g.edge(f).other(v));

    const int copies_to_u = static_cast<int>(std::count(w.begin(), w.end(), u));
    if (copies_to_u >= 2)
        throw DomainError("figure1_case: more than two parallel edges between the designated "
                          "endpoints (two-vertex base case is handled upstream)");
    if (copies_to_u == 1) {
        std::vector<VertexId> rest;
        bool skipped = false;
        for (VertexId x : w) {
            if (x == u && !skipped) {
                skipped = true;
                continue;
            }
            rest.push_back(x);
        }
        return rest[0] == rest[1] ? Figure1Case::TwoDoubleEdges : Figure1Case::ParallelWithU;
    }
    if (w[0] != w[1] && w[1] != w[2] && w[0] != w[2]) return Figure1Case::FourDistinct;
    if (w[0] == w[1] && w[1] == w[2])
        throw DomainError("figure1_case: triple edge at the split vertex");
    return Figure1Case::ParallelWithX;
}

bool is_admissible_fast(const MultiGraph& g, VertexId v, EdgeId e, EdgeId f) {
    check_incident(g, v, e, "is_admissible_fast");
    check_incident(g, v, f, "is_admissible_fast");
    if (e == f) throw DomainError("is_admissible_fast: candidate equals the designated edge");

    const Figure1Case shape = figure1_case(g, v, e);
    const VertexId u = g.edge(e).other(v);
    const VertexId fx = g.edge(f).other(v);

    switch (shape) {
        case Figure1Case::ParallelWithU:
            // A_e is the two edges toward the distinct non-u neighbors.
            return fx != u;
        case Figure1Case::TwoDoubleEdges:
            // A_e is the two copies toward the non-u neighbor.
            return fx != u;
        case Figure1Case::ParallelWithX:
            // A_e is the two copies toward the doubled neighbor.
        {
            std::vector<VertexId> w;
            for (EdgeId h : g.incident(v))
                if (h != e) w.push_back(g.edge(h).other(v));
            std::sort(w.begin(), w.end());
            const VertexId doubled = w[0] == w[1] ? w[0] : w[1];
            return fx == doubled;
        }
        case Figure1Case::FourDistinct:
            break;
    }

    // Trial complete splitting: pair e with f and the two leftover edges with
    // each other, then contract ux -> s and yz -> t and ask for 4
    // edge-disjoint s-t paths. Built directly on a scratch network.
    std::vector<EdgeId> leftover;
    for (EdgeId h : g.incident(v))
        if (h != e && h != f) leftover.push_back(h);
    const VertexId y = g.edge(leftover[0]).other(v);
    const VertexId z = g.edge(leftover[1]).other(v);

    const int s_node = g.vertex_slots();
    const int t_node = g.vertex_slots() + 1;
    const auto label = [&](VertexId w) -> int {
        if (w == u || w == fx) return s_node;
        if (w == y || w == z) return t_node;
        return w;
    };
    detail::UnitFlowNet net(g.vertex_slots() + 2);
    for (EdgeId id : g.live_edges()) {
        const EdgeRecord& rec = g.edge(id);
        if (rec.incident_to(v)) continue;
        const int a = label(rec.u);
        const int b = label(rec.v);
        if (a == b) continue;  // contracted into s or t
        net.add_edge(a, b);
    }
    return net.max_flow(s_node, t_node, 4) == 4;
}

AdmissibleSet admissible_set(const MultiGraph& g, VertexId v, EdgeId e) {
    check_incident(g, v, e, "admissible_set");
    AdmissibleSet out;
    out.center = v;
    out.designated = e;
    std::vector<EdgeId> candidates;
    for (EdgeId f : g.incident(v))
        if (f != e) candidates.push_back(f);
    std::sort(candidates.begin(), candidates.end());
    for (EdgeId f : candidates)
        if (is_admissible_fast(g, v, e, f)) out.members.push_back(f);
    if (out.members.size() < 2)
        throw InvariantError("admissible_set: fewer than 2 admissible partners at vertex " +
                             std::to_string(v) +
                             "; the input is not 4-regular 4-edge-connected");
    return out;
}

SplitStep complete_split_at(MultiGraph& g, VertexId v, EdgeId e, EdgeId x_choice,
                            EdgeId y_choice) {
    check_incident(g, v, e, "complete_split_at");
    check_incident(g, v, x_choice, "complete_split_at");
    check_incident(g, v, y_choice, "complete_split_at");
    if (e == x_choice || e == y_choice || x_choice == y_choice)
        throw DomainError("complete_split_at: the designated edge and both choices must differ");
    if (g.degree(v) != 4)
        throw DomainError("complete_split_at: vertex " + std::to_string(v) + " has degree " +
                          std::to_string(g.degree(v)) + ", expected 4");

    EdgeId z = -1;
    for (EdgeId h : g.incident(v))
        if (h != e && h != x_choice && h != y_choice) z = h;

    if (!is_admissible_fast(g, v, e, x_choice))
        throw DomainError("complete_split_at: chosen partner is not admissible with the "
                          "designated edge");

    SplitStep step;
    step.center = v;
    step.designated = e;
    step.x_edge = x_choice;
    step.y_edge = y_choice;
    step.z_edge = z;
    step.cost_assigned_yz = g.edge(z).cost - g.edge(x_choice).cost;

    step.created_ux = split_off_pair(g, e, x_choice);  // cost of ux is inconsequential, left 0
    step.created_yz = split_off_pair(g, y_choice, z);
    g.set_cost(step.created_yz, step.cost_assigned_yz);
    g.kill_vertex(v);
    return step;
}

void undo_complete_split(MultiGraph& g, const SplitStep& step) {
    g.revive_vertex(step.center);
    g.delete_edge(step.created_yz);
    g.delete_edge(step.created_ux);
    g.restore_edge(step.y_edge);
    g.restore_edge(step.z_edge);
    g.restore_edge(step.designated);
    g.restore_edge(step.x_edge);
}

}  // namespace splitoff
