#pragma once

#include <optional>
#include <string>
#include <utility>

namespace splitoff {

// Size fences for the exhaustive oracles; overridable through the
// SPLITOFF_LIMITS environment variable ("convex=10,brute=24,factor=16").
struct Limits {
    int convex = 10;
    int brute = 24;
    int factor = 16;

    static Limits from_env();
    static Limits parse(const std::string& text);
};

// Exit codes: 0 success, 2 input/validation error, 3 resource-limit error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

// Each command writes a JSON report to `out` (or stdout when empty) and
// returns the process exit code; error text goes to stderr.
int cmd_two_thirds(const std::string& graph_file, int edge, const std::string& out);
int cmd_half_integral(const std::string& solution_file,
                      std::optional<std::pair<int, int>> edge, bool best_edge,
                      const std::string& out);
int cmd_convex(const std::string& graph_file, int edge, std::optional<int> limit,
               const std::string& out);
int cmd_cubic78(const std::string& graph_file, bool best_factor, const std::string& out);
int cmd_generate(const std::string& kind, int n, std::uint64_t seed, const std::string& costs,
                 const std::string& out);
int cmd_verify(const std::string& certificate_file, const std::string& instance_file);

int run_cli(int argc, const char* const* argv);

}  // namespace splitoff
