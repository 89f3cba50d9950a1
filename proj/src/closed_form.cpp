#include "tangle/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace tangle::closed_form {

AnalyticOneTangles two_acc_one_tangles(AccelerationParam r_b, AccelerationParam r_c) {
  const double cb = r_b.cos(), sb = r_b.sin();
  const double cc = r_c.cos(), sc = r_c.sin();
  const double cb2 = cb * cb, sb2 = sb * sb, cc2 = cc * cc, sc2 = sc * sc;

  AnalyticOneTangles out;
  out.n_A = 0.5 * (cb * cc + cc2 + cb2 * sc2 + std::sqrt(cb2 * cc2 + sb2 * sb2 * sc2 * sc2) - 1.0);
  out.n_B = 0.5 * (cb * cc + cb2 + sb2 * sc2 + cc * std::sqrt(cb2 + sb2 * sb2 * cc2) - 1.0);
  out.n_C = 0.5 * (cb * cc + sb2 + cb2 * cc2 + cb * std::sqrt(cc2 + sc2 * sc2 * cb2) - 1.0);
  return out;
}

AnalyticOneTangles one_acc_one_tangles(AccelerationParam r_c) {
  const double cc = r_c.cos(), sc = r_c.sin();
  const double cc2 = cc * cc, sc2 = sc * sc;

  AnalyticOneTangles out;
  out.n_A = cc;
  out.n_B = cc;
  out.n_C = 0.5 * (cc + cc2 + std::sqrt(cc2 + sc2 * sc2) - 1.0);
  return out;
}

AnalyticOneTangles one_tangles(const Scenario& scenario) {
  switch (scenario.kind()) {
    case ScenarioKind::inertial:
      return {1.0, 1.0, 1.0};
    case ScenarioKind::one_accelerated:
      if (!scenario.is_accelerated("C"))
        throw std::invalid_argument("closed_form: one-observer results assume Charlie accelerates");
      return one_acc_one_tangles(scenario.r("C"));
    case ScenarioKind::two_accelerated:
      return two_acc_one_tangles(scenario.r("B"), scenario.r("C"));
  }
  throw std::logic_error("closed_form: unknown scenario kind");
}

double analytic_pi(const Scenario& scenario) {
  const AnalyticOneTangles n = one_tangles(scenario);
  return (n.n_A * n.n_A + n.n_B * n.n_B + n.n_C * n.n_C) / 3.0;
}

}  // namespace tangle::closed_form
