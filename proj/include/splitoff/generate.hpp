#pragma once

#include <cstdint>
#include <random>

#include "splitoff/multigraph.hpp"

namespace splitoff {

// Deterministic RNG wrapper; mt19937_64 output is specified by the standard,
// so generated instances are reproducible across platforms.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Circulant C_n(1,2): 4-regular, 4-edge-connected, unit costs. n >= 5.
MultiGraph make_circulant_c12(int n);

// Every cycle edge twice, unit costs. n >= 3.
MultiGraph make_doubled_cycle(int n);

// Complete graph, unit costs.
MultiGraph make_complete(int n);

// Two vertices joined by four parallel unit edges (the n = 2 base case).
MultiGraph make_four_parallel();

// Random 4-regular 4-edge-connected multigraph via random stub pairings,
// rejected until the connectivity certificate passes. Unit costs.
MultiGraph random_4reg_4ec(int n, std::uint64_t seed);

// Random cubic 3-edge-connected simple graph (n even). Unit costs.
MultiGraph random_cubic_3ec(int n, std::uint64_t seed);

// Named cubic 3-edge-connected graphs, unit costs.
MultiGraph make_petersen();
MultiGraph make_k4();
MultiGraph make_k33();
MultiGraph make_prism();
MultiGraph make_moebius_kantor();

// Random rational costs in [lo, hi] with denominators in {1, 2, 4}.
void assign_random_costs(MultiGraph& g, std::uint64_t seed, int lo, int hi);

}  // namespace splitoff
