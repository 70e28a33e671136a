#include "splitoff/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace splitoff {

namespace detail {

UnitFlowNet::UnitFlowNet(int n) : n_(n), out_(n) {}

void UnitFlowNet::add_edge(int a, int b) {
    // Arc pair i, i^1; an undirected unit edge has capacity 1 in both
    // directions, which is exactly the undirected residual rule.
    out_[a].push_back(static_cast<int>(to_.size()));
    to_.push_back(b);
    cap_.push_back(1);
    out_[b].push_back(static_cast<int>(to_.size()));
    to_.push_back(a);
    cap_.push_back(1);
}

int UnitFlowNet::max_flow(int s, int t, int stop_at, int* bfs_count) {
    int flow = 0;
    int searches = 0;
    std::vector<int> parent_arc(n_);
    std::deque<int> queue;
    while (stop_at < 0 || flow < stop_at) {
        ++searches;
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[s] = -2;
        queue.clear();
        queue.push_back(s);
        bool reached = false;
        while (!queue.empty() && !reached) {
            const int v = queue.front();
            queue.pop_front();
            for (int arc : out_[v]) {
                if (cap_[arc] <= 0) continue;
                const int w = to_[arc];
                if (parent_arc[w] != -1) continue;
                parent_arc[w] = arc;
                if (w == t) {
                    reached = true;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (!reached) break;
        for (int v = t; v != s;) {
            const int arc = parent_arc[v];
            --cap_[arc];
            ++cap_[arc ^ 1];
            v = to_[arc ^ 1];
        }
        ++flow;
    }
    if (bfs_count) *bfs_count = searches;
    return flow;
}

namespace {

struct TwoEcInput {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // one entry per multiplicity copy
    std::vector<char> relevant;              // vertices that must be touched
};

// Spanning + connected + bridgeless over the listed copies. Parallel copies
// are distinct entries, so a doubled edge never counts as a bridge.
bool two_ec_check(const TwoEcInput& in) {
    int relevant_count = 0;
    for (int v = 0; v < in.n; ++v) relevant_count += in.relevant[v] ? 1 : 0;
    if (relevant_count <= 1) return in.edges.empty();

    std::vector<std::vector<std::pair<int, int>>> adj(in.n);  // (neighbor, copy index)
    for (std::size_t i = 0; i < in.edges.size(); ++i) {
        const auto [a, b] = in.edges[i];
        adj[a].push_back({b, static_cast<int>(i)});
        adj[b].push_back({a, static_cast<int>(i)});
    }
    for (int v = 0; v < in.n; ++v)
        if (in.relevant[v] && adj[v].empty()) return false;

    int root = 0;
    while (!in.relevant[root]) ++root;

    std::vector<int> disc(in.n, -1), low(in.n, 0);
    std::vector<std::size_t> next(in.n, 0);
    std::vector<int> entry_copy(in.n, -1);
    std::vector<int> stack;
    int timer = 0;
    disc[root] = timer++;
    low[root] = disc[root];
    stack.push_back(root);
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        if (next[v] == adj[v].size()) {
            stack.pop_back();
            if (!stack.empty()) {
                const int p = stack.back();
                low[p] = std::min(low[p], low[v]);
                if (low[v] > disc[p]) return false;  // the entry edge is a bridge
            }
            continue;
        }
        const auto [w, copy] = adj[v][next[v]++];
        if (copy == entry_copy[v]) continue;  // only the exact entry copy is skipped
        if (disc[w] == -1) {
            disc[w] = timer++;
            low[w] = disc[w];
            entry_copy[w] = copy;
            stack.push_back(w);
            ++visited;
        } else {
            low[v] = std::min(low[v], disc[w]);
        }
    }
    if (visited != relevant_count) return false;  // disconnected (or touches dead slots)
    return true;
}

}  // namespace

}  // namespace detail

namespace {

detail::UnitFlowNet build_unit_net(const MultiGraph& g) {
    detail::UnitFlowNet net(g.vertex_slots());
    for (EdgeId id : g.live_edges()) {
        const EdgeRecord& rec = g.edge(id);
        net.add_edge(rec.u, rec.v);
    }
    return net;
}

void check_flow_endpoints(const MultiGraph& g, VertexId s, VertexId t, const char* who) {
    if (!g.vertex_alive(s) || !g.vertex_alive(t))
        throw DomainError(std::string(who) + ": endpoint is not a live vertex");
    if (s == t) throw DomainError(std::string(who) + ": source equals sink");
}

}  // namespace

int max_flow_value(const MultiGraph& g, VertexId s, VertexId t, int stop_at, int* bfs_count) {
    check_flow_endpoints(g, s, t, "max_flow_value");
    detail::UnitFlowNet net = build_unit_net(g);
    return net.max_flow(s, t, stop_at, bfs_count);
}

Rational max_flow_value(const MultiGraph& g, VertexId s, VertexId t,
                        const std::map<EdgeId, Rational>& cap) {
    check_flow_endpoints(g, s, t, "max_flow_value");
    // Same arc-pair scheme with rational residuals; BFS keeps the number of
    // augmentations polynomial independent of the capacities.
    const int n = g.vertex_slots();
    std::vector<std::vector<int>> out(n);
    std::vector<int> to;
    std::vector<Rational> residual;
    for (EdgeId id : g.live_edges()) {
        const auto it = cap.find(id);
        if (it == cap.end())
            throw DomainError("max_flow_value: missing capacity for edge " + std::to_string(id));
        if (it->second < 0)
            throw DomainError("max_flow_value: negative capacity on edge " + std::to_string(id));
        const EdgeRecord& rec = g.edge(id);
        out[rec.u].push_back(static_cast<int>(to.size()));
        to.push_back(rec.v);
        residual.push_back(it->second);
        out[rec.v].push_back(static_cast<int>(to.size()));
        to.push_back(rec.u);
        residual.push_back(it->second);
    }
    Rational flow(0);
    std::vector<int> parent_arc(n);
    std::deque<int> queue;
    while (true) {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[s] = -2;
        queue.clear();
        queue.push_back(s);
        bool reached = false;
        while (!queue.empty() && !reached) {
            const int v = queue.front();
            queue.pop_front();
            for (int arc : out[v]) {
                if (residual[arc] <= 0) continue;
                const int w = to[arc];
                if (parent_arc[w] != -1) continue;
                parent_arc[w] = arc;
                if (w == t) {
                    reached = true;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (!reached) break;
        Rational bottleneck(-1);
        for (int v = t; v != s;) {
            const int arc = parent_arc[v];
            if (bottleneck < 0 || residual[arc] < bottleneck) bottleneck = residual[arc];
            v = to[arc ^ 1];
        }
        for (int v = t; v != s;) {
            const int arc = parent_arc[v];
            residual[arc] -= bottleneck;
            residual[arc ^ 1] += bottleneck;
            v = to[arc ^ 1];
        }
        flow += bottleneck;
    }
    return flow;
}

int lambda(const MultiGraph& g, VertexId x, VertexId y) {
    return max_flow_value(g, x, y, -1, nullptr);
}

bool is_k_edge_connected_excluding(const MultiGraph& g, int k, std::optional<VertexId> excluded) {
    std::vector<VertexId> eligible;
    for (VertexId v : g.live_vertices())
        if (!excluded || v != *excluded) eligible.push_back(v);
    if (eligible.size() < 2)
        throw DomainError("is_k_edge_connected_excluding: fewer than 2 eligible vertices");
    // Rooted flows suffice: lambda(x, y) >= min(lambda(r, x), lambda(r, y)).
    const VertexId root = eligible.front();
    detail::UnitFlowNet net = build_unit_net(g);
    for (std::size_t i = 1; i < eligible.size(); ++i) {
        detail::UnitFlowNet scratch = net;
        if (scratch.max_flow(root, eligible[i], k) < k) return false;
    }
    return true;
}

bool is_two_edge_connected_spanning(const MultiGraph& over, const EdgeMultiset& s) {
    detail::TwoEcInput in;
    in.n = over.vertex_slots();
    in.relevant.assign(in.n, 0);
    for (VertexId v : over.live_vertices()) in.relevant[v] = 1;
    for (const auto& [id, k] : s.mult) {
        if (!over.edge_alive(id))
            throw DomainError("is_two_edge_connected_spanning: edge " + std::to_string(id) +
                              " is not a live edge of the host graph");
        const EdgeRecord& rec = over.edge(id);
        for (int c = 0; c < k; ++c) in.edges.push_back({rec.u, rec.v});
    }
    return detail::two_ec_check(in);
}

bool is_two_edge_connected_pair_multiset(int n, const std::map<std::pair<int, int>, int>& mult) {
    detail::TwoEcInput in;
    in.n = n;
    in.relevant.assign(n, 1);
    for (const auto& [pair, k] : mult) {
        const auto [a, b] = pair;
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw DomainError("is_two_edge_connected_pair_multiset: bad pair");
        for (int c = 0; c < k; ++c) in.edges.push_back({a, b});
    }
    return detail::two_ec_check(in);
}

GlobalCut global_min_cut(const MultiGraph& g, const std::map<EdgeId, Rational>& cap) {
    const std::vector<VertexId> verts = g.live_vertices();
    const int n = static_cast<int>(verts.size());
    if (n < 2) throw DomainError("global_min_cut: fewer than 2 live vertices");

    std::vector<int> index(g.vertex_slots(), -1);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;

    std::vector<std::vector<Rational>> weight(n, std::vector<Rational>(n, Rational(0)));
    for (EdgeId id : g.live_edges()) {
        const auto it = cap.find(id);
        if (it == cap.end())
            throw DomainError("global_min_cut: missing capacity for edge " + std::to_string(id));
        if (it->second < 0)
            throw DomainError("global_min_cut: negative capacity on edge " + std::to_string(id));
        const EdgeRecord& rec = g.edge(id);
        weight[index[rec.u]][index[rec.v]] += it->second;
        weight[index[rec.v]][index[rec.u]] += it->second;
    }

    // Deterministic maximum-adjacency ordering; ties resolved by the smallest
    // merged-group index, so results are reproducible with exact weights.
    std::vector<std::vector<VertexId>> group(n);
    for (int i = 0; i < n; ++i) group[i] = {verts[i]};
    std::vector<char> merged(n, 0);

    GlobalCut best;
    bool have_best = false;
    for (int phase = 0; phase < n - 1; ++phase) {
        std::vector<char> in_order(n, 0);
        std::vector<Rational> w(n, Rational(0));
        int prev = -1, last = -1;
        const int active = n - phase;
        for (int step = 0; step < active; ++step) {
            int pick = -1;
            for (int i = 0; i < n; ++i) {
                if (merged[i] || in_order[i]) continue;
                if (pick == -1 || w[i] > w[pick]) pick = i;
            }
            in_order[pick] = 1;
            prev = last;
            last = pick;
            for (int i = 0; i < n; ++i)
                if (!merged[i] && !in_order[i]) w[i] += weight[pick][i];
        }
        if (!have_best || w[last] < best.value) {
            best.value = w[last];
            best.side = group[last];
            have_best = true;
        }
        // merge last into prev
        merged[last] = 1;
        group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
        for (int i = 0; i < n; ++i) {
            if (merged[i] || i == prev) continue;
            weight[prev][i] += weight[last][i];
            weight[i][prev] = weight[prev][i];
        }
    }
    std::sort(best.side.begin(), best.side.end());
    return best;
}

Rational global_min_cut_value(const MultiGraph& g, const std::map<EdgeId, Rational>& cap) {
    return global_min_cut(g, cap).value;
}

}  // namespace splitoff
