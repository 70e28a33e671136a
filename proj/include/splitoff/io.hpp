#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "splitoff/convex_oracle.hpp"
#include "splitoff/cubic78.hpp"
#include "splitoff/half_integral.hpp"
#include "splitoff/multigraph.hpp"
#include "splitoff/two_thirds.hpp"

namespace splitoff {

// Graph file: header "multigraph <n> <m>", then m lines "<u> <v> <cost>";
// repeated lines encode parallel edges, '#' starts a comment, costs are
// decimals or p/q fractions parsed exactly.
MultiGraph parse_graph(std::istream& in);
MultiGraph load_graph_file(const std::string& path);
std::string serialize_graph(const MultiGraph& g);

// Solution file: header "subtour <n>", lines "<u> <v> <x> <cost>"; omitted
// pairs mean x = 0. An optional "costs" section lists further pairs for
// metric validation.
HalfIntegralSolution parse_solution(std::istream& in);
HalfIntegralSolution load_solution_file(const std::string& path);
std::string serialize_solution(const HalfIntegralSolution& s);

// FNV-1a over the canonical serialization of the input, as 16 hex digits.
std::string input_hash_hex(const std::string& canonical);

nlohmann::json certificate_json(const TwoThirdsResult& r, const MultiGraph& g, EdgeId e,
                                const std::string& input_hash);
nlohmann::json certificate_json(const HalfIntegralResult& r, const std::string& input_hash);
nlohmann::json certificate_json(const Cubic78Result& r, const MultiGraph& g,
                                const std::string& input_hash);
nlohmann::json decomposition_json(const ConvexCombination& comb, const ConvexCheck& check,
                                  const MultiGraph& g, EdgeId e, const std::string& input_hash);

}  // namespace splitoff
