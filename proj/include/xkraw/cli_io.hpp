#pragma once

// Command-line surface: run configuration, CSV/JSON/SVG writers and the
// poly | classical | quantum commands.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "xkraw/exactnum.hpp"
#include "xkraw/model_config.hpp"
#include "xkraw/quantum_walk.hpp"

namespace xkraw::cli {

enum class Command { Poly, Classical, Quantum };
enum class Format { Csv, Svg, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

struct RunConfig {
  Command command = Command::Poly;
  int N = 5;
  Rational p{1, 2};
  int ell = 2;
  std::vector<WalkTime> times;
  int start = 1;
  std::uint64_t seed = 1;
  std::uint64_t trajectories = 10000;
  bool oracle = false;
  bool stationary = false;
  bool detect = false;
  bool area_mode = false;
  std::string out;
  Format format = Format::Csv;

  ModelConfig model() const { return ModelConfig(N, p, ell); }
};

// "a/b", "a" or an exact decimal "0.25"; throws InvalidConfig unless 0 < p < 1.
Rational parse_probability(std::string_view text);
// "k/mpi", "kpi", "pi" (exact multiples of pi) or a decimal real.
WalkTime parse_time(std::string_view text);

// %.15g with negative zero printed as 0.
std::string format_double(double v);

struct BubbleRow {
  std::string label;
  std::vector<double> magnitudes;  // one per site
};

struct BubblePlotSpec {
  std::vector<BubbleRow> rows;
  // false: radius proportional to magnitude; true: area proportional to magnitude.
  bool area_mode = false;
  static constexpr double kSpacing = 60.0;
  static constexpr double kMaxRadiusFraction = 0.45;
};

std::string render_svg(const BubblePlotSpec& spec);

std::string poly_csv(const ModelConfig& cfg);
std::string poly_json(const ModelConfig& cfg);
std::string classical_csv(const RunConfig& run);
std::string classical_json(const RunConfig& run);
std::string quantum_csv(const RunConfig& run);
std::string quantum_json(const RunConfig& run);
BubblePlotSpec quantum_plot(const RunConfig& run);
std::string detect_report(const RunConfig& run);

// Parses argv-style arguments (without the program name) and runs the command.
// Returns 0 on success, 2 on usage/configuration errors, 3 on internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xkraw::cli
