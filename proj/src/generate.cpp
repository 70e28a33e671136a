#include "splitoff/generate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "splitoff/connectivity.hpp"

namespace splitoff {

namespace {

MultiGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    MultiGraph g(n);
    int i = 0;
    for (const auto& [u, v] : pairs) g.add_edge(u, v, Rational(1), Provenance::input(i++));
    return g;
}

}  // namespace

MultiGraph make_circulant_c12(int n) {
    if (n < 5) throw DomainError("make_circulant_c12: need n >= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) pairs.push_back({i, (i + 2) % n});
    return from_pairs(n, pairs);
}

MultiGraph make_doubled_cycle(int n) {
    if (n < 3) throw DomainError("make_doubled_cycle: need n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        pairs.push_back({i, (i + 1) % n});
        pairs.push_back({i, (i + 1) % n});
    }
    return from_pairs(n, pairs);
}

MultiGraph make_complete(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return from_pairs(n, pairs);
}

MultiGraph make_four_parallel() {
    return from_pairs(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
}

namespace {

// Stub pairing (configuration model) with the plain rejections: no loops,
// at most two parallel copies per pair, and the requested connectivity.
MultiGraph random_regular(int n, int degree, int max_multiplicity, int k_connected,
                          std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(n * degree);
        for (int v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d) stubs.push_back(v);
        for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.range(0, i)]);

        bool ok = true;
        std::map<std::pair<int, int>, int> count;
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            const int a = std::min(stubs[i], stubs[i + 1]);
            const int b = std::max(stubs[i], stubs[i + 1]);
            if (a == b || ++count[{a, b}] > max_multiplicity) {
                ok = false;
                break;
            }
            pairs.push_back({a, b});
        }
        if (!ok) continue;
        std::sort(pairs.begin(), pairs.end());
        MultiGraph g = from_pairs(n, pairs);
        if (is_k_edge_connected_excluding(g, k_connected)) return g;
    }
    throw ResourceError("random_regular: no valid pairing found (n = " + std::to_string(n) + ")");
}

}  // namespace

MultiGraph random_4reg_4ec(int n, std::uint64_t seed) {
    if (n < 2) throw DomainError("random_4reg_4ec: need n >= 2");
    if (n == 2) return make_four_parallel();
    return random_regular(n, 4, 2, 4, seed);
}

MultiGraph random_cubic_3ec(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw DomainError("random_cubic_3ec: need even n >= 4");
    return random_regular(n, 3, 1, 3, seed);
}

MultiGraph make_petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) pairs.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) pairs.push_back({5 + i, 5 + (i + 2) % 5});
    for (int i = 0; i < 5; ++i) pairs.push_back({i, 5 + i});
    return from_pairs(10, pairs);
}

MultiGraph make_k4() { return make_complete(4); }

MultiGraph make_k33() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) pairs.push_back({i, j});
    return from_pairs(6, pairs);
}

MultiGraph make_prism() {
    return from_pairs(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

MultiGraph make_moebius_kantor() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 8; ++i) pairs.push_back({i, (i + 1) % 8});
    for (int i = 0; i < 8; ++i) {
        const int a = 8 + i;
        const int b = 8 + (i + 3) % 8;
        pairs.push_back({std::min(a, b), std::max(a, b)});
    }
    for (int i = 0; i < 8; ++i) pairs.push_back({i, 8 + i});
    return from_pairs(16, pairs);
}

void assign_random_costs(MultiGraph& g, std::uint64_t seed, int lo, int hi) {
    Rng rng(seed);
    for (EdgeId id : g.live_edges()) {
        const int den = 1 << rng.range(0, 2);  // 1, 2 or 4
        const int num = rng.range(lo * den, hi * den);
        g.set_cost(id, Rational(num, den));
    }
}

}  // namespace splitoff
