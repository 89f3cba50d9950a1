#pragma once

#include <map>
#include <numbers>
#include <string>
#include <string_view>

#include "tangle/subsystems.hpp"

namespace tangle {

inline constexpr double kMaxAcceleration = std::numbers::pi / 4.0;

/// Fermionic acceleration parameter r in [0, pi/4]: r = 0 is inertial,
/// r = pi/4 is the infinite-acceleration limit.
class AccelerationParam {
 public:
  constexpr AccelerationParam() = default;
  /// Throws std::invalid_argument outside [0, pi/4]. Values within 1e-12 of
  /// an endpoint are snapped onto it.
  explicit AccelerationParam(double r);

  double value() const { return r_; }
  double cos() const;
  double sin() const;

  auto operator<=>(const AccelerationParam&) const = default;

 private:
  double r_ = 0.0;
};

/// r from cos r = (exp(-2 pi omega c / a) + 1)^(-1/2). Non-positive inputs throw.
AccelerationParam acceleration_to_r(double omega, double accel, double c = 1.0);

enum class ScenarioKind { inertial, one_accelerated, two_accelerated };

std::string_view to_string(ScenarioKind kind);

/// Which of Bob (B) and Charlie (C) are uniformly accelerated; Alice (A) is always inertial.
class Scenario {
 public:
  static Scenario inertial();
  /// Alice and Bob inertial, Charlie accelerated.
  static Scenario one_accelerated(AccelerationParam r_c);
  static Scenario two_accelerated(AccelerationParam r_b, AccelerationParam r_c);

  /// General constructor; keys must be drawn from {"B", "C"}.
  explicit Scenario(std::map<std::string, AccelerationParam> params);

  const std::map<std::string, AccelerationParam>& params() const { return params_; }
  bool is_accelerated(const std::string& observer) const { return params_.contains(observer); }
  /// r for `observer`, 0 when it is inertial.
  AccelerationParam r(const std::string& observer) const;
  ScenarioKind kind() const;

 private:
  std::map<std::string, AccelerationParam> params_;
};

/// (|000> + |111>)/sqrt(2) over (A,2)(B,2)(C,2).
PureState ghz_state();

/// Replace factor `mode` with (mode_I, 2)(mode_II, 2):
///   |0> -> cos r |0>_I|0>_II + sin r |1>_I|1>_II
///   |1> -> |1>_I|0>_II
PureState unruh_embed(const PureState& state, const std::string& mode, AccelerationParam r);

std::string region_one_label(const std::string& mode);
std::string region_two_label(const std::string& mode);

/// GHZ, embedded for each accelerated observer, with region II traced out.
/// Factor order is (A, B or B_I, C or C_I).
DensityOperator physical_state(const Scenario& scenario);

}  // namespace tangle
