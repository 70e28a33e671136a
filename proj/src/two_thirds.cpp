#include "splitoff/two_thirds.hpp"

#include <algorithm>
#include <string>

#include "splitoff/connectivity.hpp"

namespace splitoff {

ChosenLabels choose_labels(const MultiGraph& g, VertexId v, EdgeId e) {
    const AdmissibleSet adm = admissible_set(g, v, e);

    // Maximum cost, ties to the smaller id; members are already ascending.
    const auto pick_max = [&](const std::vector<EdgeId>& pool) -> EdgeId {
        EdgeId best = pool.front();
        for (EdgeId f : pool)
            if (g.edge(f).cost > g.edge(best).cost) best = f;
        return best;
    };

    ChosenLabels out;
    out.x_edge = pick_max(adm.members);
    std::vector<EdgeId> rest;
    for (EdgeId f : adm.members)
        if (f != out.x_edge) rest.push_back(f);
    out.y_edge = pick_max(rest);
    for (EdgeId f : g.incident(v))
        if (f != e && f != out.x_edge && f != out.y_edge) out.z_edge = f;
    return out;
}

EdgeMultiset lift_step(EdgeMultiset h, const SplitStep& step) {
    if (h.contains(step.created_ux))
        throw InvariantError("lift_step: the designated child edge appears in the child answer");
    if (h.contains(step.created_yz)) {
        h.remove(step.created_yz);
        h.add(step.y_edge);
        h.add(step.z_edge);
    } else {
        h.add(step.y_edge);
        h.add(step.x_edge);
    }
    return h;
}

TwoThirdsResult solve_two_thirds(const MultiGraph& g, EdgeId e, const TwoThirdsOptions& opt) {
    if (!g.edge_alive(e))
        throw DomainError("solve_two_thirds: designated edge " + std::to_string(e) +
                          " is not a live edge");
    for (VertexId v : g.live_vertices())
        if (g.degree(v) != 4)
            throw DomainError("solve_two_thirds: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + "; input must be 4-regular");
    if (!is_k_edge_connected_excluding(g, 4))
        throw DomainError("solve_two_thirds: input is not 4-edge-connected");

    MultiGraph work = g;
    SplitTrace trace;
    EdgeId designated = e;
    while (work.live_vertex_count() > 2) {
        const EdgeRecord& rec = work.edge(designated);
        const VertexId v = std::max(rec.u, rec.v);  // split at the higher-indexed endpoint
        const ChosenLabels labels = choose_labels(work, v, designated);
        trace.steps.push_back(
            complete_split_at(work, v, designated, labels.x_edge, labels.y_edge));
        designated = trace.steps.back().created_ux;
    }

    // Base case: four parallel edges; take the two cheapest non-designated
    // records, ties to the smaller id.
    std::vector<EdgeId> others;
    for (EdgeId id : work.live_edges())
        if (id != designated) others.push_back(id);
    std::sort(others.begin(), others.end(), [&](EdgeId a, EdgeId b) {
        if (work.edge(a).cost != work.edge(b).cost) return work.edge(a).cost < work.edge(b).cost;
        return a < b;
    });
    EdgeMultiset h;
    h.add(others[0]);
    h.add(others[1]);

    if (opt.verify_levels && !is_two_edge_connected_spanning(work, h))
        throw InvariantError("solve_two_thirds: base-case answer failed verification");

    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        undo_complete_split(work, *it);
        h = lift_step(std::move(h), *it);
        if (opt.verify_levels && !is_two_edge_connected_spanning(work, h))
            throw InvariantError(
                "solve_two_thirds: lifted answer is not 2-edge-connected spanning at its level");
    }

    TwoThirdsResult res;
    res.cost = total_cost(g, h);
    res.bound = Rational(2, 3) * (g.cost_of_live_edges() - g.edge(e).cost);
    res.bound_holds = res.cost <= res.bound;
    res.two_edge_connected_spanning = is_two_edge_connected_spanning(g, h);
    res.designated_excluded = !h.contains(e);
    res.multiplicity_ok = true;
    for (const auto& [id, k] : h.mult)
        if (k != 1 || !g.edge_alive(id)) res.multiplicity_ok = false;
    res.edges = std::move(h);
    res.trace = std::move(trace);
    return res;
}

}  // namespace splitoff
