#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/measures.hpp"
#include "tangle/rindler.hpp"

namespace tangle::sweep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad configuration or arguments (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Output could not be written (exit code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed measure enumeration; CSV rows follow this order within a grid point.
enum class Measure {
  one_tangle_A,
  one_tangle_B,
  one_tangle_C,
  two_tangle_AB,
  two_tangle_AC,
  two_tangle_BC,
  concurrence_AB,
  concurrence_AC,
  concurrence_BC,
  residual_A,
  residual_B,
  residual_C,
  pi_tangle,
};

inline constexpr std::array kAllMeasures{
    Measure::one_tangle_A,   Measure::one_tangle_B,   Measure::one_tangle_C,
    Measure::two_tangle_AB,  Measure::two_tangle_AC,  Measure::two_tangle_BC,
    Measure::concurrence_AB, Measure::concurrence_AC, Measure::concurrence_BC,
    Measure::residual_A,     Measure::residual_B,     Measure::residual_C,
    Measure::pi_tangle,
};

std::string_view to_string(Measure m);
double measure_value(const TangleReport& report, Measure m);

struct MeasureRecord {
  ScenarioKind scenario = ScenarioKind::two_accelerated;
  double r_b = 0.0;
  double r_c = 0.0;
  Measure measure = Measure::pi_tangle;
  double value = 0.0;
};

struct SweepConfig {
  ScenarioKind scenario = ScenarioKind::two_accelerated;
  double r_min = 0.0;
  double r_max = kMaxAcceleration;
  int steps = 65;
  bool diagonal = false;  // two-accelerated only: force r_b = r_c
  std::string output;
  double tolerance = 1e-10;
  unsigned threads = 1;

  /// Throws UsageError describing the first violated constraint.
  void validate() const;
};

/// Uniform grid with both endpoints included; the last point is exactly r_max.
std::vector<double> uniform_grid(double r_min, double r_max, int steps);

/// Grid points as scenarios in output order. One-accelerated sweeps r_c with
/// r_b = 0; two-accelerated sweeps r_b (outer) x r_c (inner) or the diagonal.
std::vector<Scenario> grid_scenarios(const SweepConfig& config);

/// Every measure at every grid point, grid-major then kAllMeasures order.
/// Identical output for any thread count.
std::vector<MeasureRecord> run_sweep(const SweepConfig& config);

void emit_csv(const std::vector<MeasureRecord>& records, std::ostream& out);
/// Throws IoError if `path` cannot be written.
void emit_csv(const std::vector<MeasureRecord>& records, const std::filesystem::path& path);
std::string format_csv_row(const MeasureRecord& record);

struct Deviation {
  ScenarioKind scenario;
  std::string measure;
  double max_abs = 0.0;
  double at_r_b = 0.0;
  double at_r_c = 0.0;
};

struct VerifyReport {
  std::vector<Deviation> deviations;
  std::string text;
  int exit_code = kExitOk;
};

/// Numeric pipeline vs the published closed forms on 65x65 (two observers)
/// and 65 (one observer) grids over [0, pi/4]. Exit code 0 iff every
/// deviation is below `tolerance`.
VerifyReport verify(double tolerance, int steps = 65);

/// Read `key = value` lines ('#' starts a comment) and expand them to
/// command-line tokens: `--key value`, or `--key` for flags set to true.
std::vector<std::string> config_file_args(const std::filesystem::path& path);

}  // namespace tangle::sweep
