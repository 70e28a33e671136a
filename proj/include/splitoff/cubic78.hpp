#pragma once

#include <map>
#include <utility>
#include <vector>

#include "splitoff/half_integral.hpp"
#include "splitoff/multigraph.hpp"

namespace splitoff {

// A 2-factor F of a cubic graph whose cycle contraction is 5-edge-connected,
// i.e. F meets every 3-edge cut and every 4-edge cut.
struct TwoFactorCertificate {
    EdgeMultiset factor_edges;               // F, multiplicity 1
    std::vector<std::vector<VertexId>> cycles;
    Contraction contracted;                  // G'
    bool five_ec = false;
};

// Exhaustive search over perfect matchings M (2-factors of a cubic graph are
// exactly the complements of perfect matchings), in deterministic order;
// returns the first qualifying factor. Fenced at n_limit vertices.
TwoFactorCertificate find_good_two_factor(const MultiGraph& g, int n_limit = 16);

struct ChristofidesResult {
    EdgeMultiset edges;  // R, multiplicities <= 2 over g' records
    Rational cost;
    Rational bound;  // (3/5) c(E(g'))
};

// Tree + matching heuristic on the metric closure of g', realized back as a
// closed-walk edge multiset with multiplicities capped at 2. The exact bound
// cost <= (3/5) c(E(g')) is asserted on every run.
ChristofidesResult christofides_2ecm(const MultiGraph& g_prime);

struct Cubic78Options {
    bool try_all_factors = false;  // evaluate every qualifying 2-factor, keep the cheapest
    int factor_limit = 16;
};

struct Cubic78Result {
    EdgeMultiset edges;  // over g's records, multiplicities <= 2
    Rational cost;
    Rational cost_h1;
    Rational cost_h2;
    Rational bound;  // (7/8) c(G)
    bool bound_holds = false;
    bool two_edge_connected_spanning = false;
    bool multiplicity_ok = false;
    int trace_length = 0;
    std::vector<EdgeId> factor;  // the 2-factor used
};

// Given a 3-regular 3-edge-connected simple graph with non-negative costs,
// returns the cheaper of H1 = F union R and H2 = the answer of the
// two-thirds recursion on the support of the half-integral vector z
// (z = 1/2 on F, 1 elsewhere). The exact inequality chain for both bounds
// and min <= (7/8) c(G) is asserted.
Cubic78Result solve_cubic_seven_eighths(const MultiGraph& g, const Cubic78Options& opt = {});

}  // namespace splitoff
