#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "divgraph/measures.hpp"
#include "divgraph/table.hpp"

namespace divgraph::cli {

/// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputeError = 1;
inline constexpr int kExitUsageError = 2;

struct MeasureArgs {
  std::int64_t n_max = 2;
  VertexRange vertices;
  MeasureSelection selection;
  bool allow_large_betweenness = false;
};

enum class FigureId { fig2a, fig2b, fig2c, fig3 };

/// Sieve ceiling: DIVGRAPH_SIEVE_CAP when set to a positive integer, else the
/// built-in default.
std::int64_t sieve_cap_from_env();

/// Parse "a" or "a..b" (inclusive). Throws std::invalid_argument on bad syntax.
VertexRange parse_vertex_range(const std::string& text);

/// Parse a comma-separated measure list. Throws std::invalid_argument on an
/// unknown name.
MeasureSelection parse_measures(const std::string& text);

/// Parse "start:stop:factor" into the logarithmic sweep start,
/// round(start*factor), ... clipped to stop. Throws std::invalid_argument.
std::vector<std::int64_t> parse_sweep(const std::string& text);

int cmd_measure(const MeasureArgs& args, const OutputConfig& config,
                std::ostream& out, std::ostream& err);
int cmd_scan_dc(std::int64_t n_max, const OutputConfig& config,
                std::ostream& out, std::ostream& err);
int cmd_connectance(const std::vector<std::int64_t>& n_values, const OutputConfig& config,
                    std::ostream& out, std::ostream& err);
int cmd_gst(std::int64_t n_max, std::int64_t s, std::int64_t t, const OutputConfig& config,
            std::ostream& out, std::ostream& err);
int cmd_verify(std::int64_t n_cap, const OutputConfig& config,
               std::ostream& out, std::ostream& err);
int cmd_figure(FigureId which, std::optional<std::int64_t> n_max, const OutputConfig& config,
               std::ostream& out, std::ostream& err);

/// Full argv entry point; returns the process exit code.
int run(int argc, const char* const* argv);

/// Same, with injectable streams (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divgraph::cli
