#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebydyn/analysis.hpp"
#include "chebydyn/raster.hpp"
#include "chebydyn/verify.hpp"

namespace chebydyn::cli {

enum class Subcommand {
  kFixedPoints,
  kCriticalPoints,
  kRenderPlane,
  kRenderParam,
  kRenderBasins,
  kRenderStability,
  kVerify,
};

enum class MapChoice { kS, kG };

/// Fully defaulted invocation.
struct CommandSpec {
  Subcommand subcommand = Subcommand::kVerify;
  Complex k{1.0, 0.0};
  MapChoice map = MapChoice::kS;
  RenderRegion region;  ///< also carries --grid
  int iters = 50;
  double tol = 1e-2;
  std::optional<double> inf_threshold;
  CriticalLabel critical = CriticalLabel::kC1;
  StabilityTarget which = StabilityTarget::kZ1;
  std::string out;
  std::string csv;  ///< empty: no CSV
  int workers = 0;  ///< 0: CHEBYDYN_WORKERS, then hardware concurrency
  std::uint64_t seed = kDefaultOracleSeed;

  OrbitConfig orbit_config() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argv without the program name. Throws UsageError or HelpRequested.
CommandSpec parse_args(const std::vector<std::string>& args);

/// "RE,IM" (or a bare "RE").
Complex parse_complex(const std::string& text);
/// "re_min,re_max,im_min,im_max"
std::array<double, 4> parse_region(const std::string& text);
/// "WxH"
std::pair<int, int> parse_grid(const std::string& text);

/// Executes a parsed spec. Domain errors propagate as exceptions.
int run(const CommandSpec& spec, std::ostream& out);

/// parse_args + run with every failure mapped onto the documented exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Example invocations shown in --help.
const std::vector<std::vector<std::string>>& help_examples();

}  // namespace chebydyn::cli
