#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tangle/subsystems.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

/// ||rho^{T_part}|| - 1. `part` must be a proper nonempty subset of the layout
/// labels. Results below tol.clamp_zero are reported as exactly 0.
double negativity(const DensityOperator& rho, const std::vector<std::string>& part,
                  const Tolerances& tol = kTolerances);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityOperator& rho, const Tolerances& tol = kTolerances);

/// Negativity of the reduced state of `pair`, transposing pair.first.
double two_tangle(const DensityOperator& rho3, const std::pair<std::string, std::string>& pair,
                  const Tolerances& tol = kTolerances);

/// Concurrence of the reduced state of `pair`.
double pair_concurrence(const DensityOperator& rho3,
                        const std::pair<std::string, std::string>& pair,
                        const Tolerances& tol = kTolerances);

/// Index pairs (0,1), (0,2), (1,2) in that order.
inline constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

struct TangleReport {
  std::array<std::string, 3> labels;       // layout order
  std::array<double, 3> one_tangles{};     // N_{a(bc)} per label
  std::array<double, 3> two_tangles{};     // N_{ab} per kPairs entry
  std::array<double, 3> concurrences{};    // C_{ab} per kPairs entry
  std::array<double, 3> residuals{};       // pi_a = N_a(bc)^2 - N_ab^2 - N_ac^2
  double pi_tangle = 0.0;
  std::array<bool, 3> ckw_satisfied{};

  double two_tangle_between(int a, int b) const;
};

/// Full set of negativity-based tangles for a three-qubit state.
TangleReport tangle_report(const DensityOperator& rho3, const Tolerances& tol = kTolerances);

}  // namespace tangle
