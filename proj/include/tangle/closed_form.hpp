#pragma once

#include "tangle/rindler.hpp"

namespace tangle::closed_form {

/// Published analytic one-tangles, indexed by party in (A, B, C) order.
struct AnalyticOneTangles {
  double n_A = 0.0;
  double n_B = 0.0;
  double n_C = 0.0;
};

// Both observers accelerated:
//   n_A = 1/2 [cb cc + cc^2 + cb^2 sc^2 + sqrt(cb^2 cc^2 + sb^4 sc^4) - 1]
//   n_B = 1/2 [cb cc + cb^2 + sb^2 sc^2 + cc sqrt(cb^2 + sb^4 cc^2) - 1]
//   n_C = 1/2 [cb cc + sb^2 + cb^2 cc^2 + cb sqrt(cc^2 + sc^4 cb^2) - 1]
// Transcribed as published; see README for how these compare with the
// numerically traced state.
AnalyticOneTangles two_acc_one_tangles(AccelerationParam r_b, AccelerationParam r_c);

// Only Charlie accelerated:
//   n_A = n_B = cc
//   n_C = 1/2 (cc + cc^2 + sqrt(cc^2 + sc^4) - 1)
AnalyticOneTangles one_acc_one_tangles(AccelerationParam r_c);

/// One-tangles for any scenario: (1,1,1) when inertial.
AnalyticOneTangles one_tangles(const Scenario& scenario);

/// (n_A^2 + n_B^2 + n_C^2) / 3; the published two-tangles vanish identically.
double analytic_pi(const Scenario& scenario);

}  // namespace tangle::closed_form
