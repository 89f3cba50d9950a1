#include "tangle/rindler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tangle {

namespace {
constexpr double kSnap = 1e-12;
}

AccelerationParam::AccelerationParam(double r) : r_(r) {
  if (!std::isfinite(r) || r < -kSnap || r > kMaxAcceleration + kSnap) {
    throw std::invalid_argument("AccelerationParam: r = " + std::to_string(r) +
                                " outside [0, pi/4]");
  }
  if (r_ < 0.0) r_ = 0.0;
  if (r_ > kMaxAcceleration) r_ = kMaxAcceleration;
}

double AccelerationParam::cos() const { return std::cos(r_); }
double AccelerationParam::sin() const { return std::sin(r_); }

AccelerationParam acceleration_to_r(double omega, double accel, double c) {
  if (!(omega > 0.0) || !(accel > 0.0) || !(c > 0.0)) {
    throw std::invalid_argument("acceleration_to_r: omega, accel and c must be positive");
  }
  const double exponent = 2.0 * std::numbers::pi * omega * c / accel;
  const double cos_r = 1.0 / std::sqrt(std::exp(-exponent) + 1.0);
  return AccelerationParam(std::acos(std::min(1.0, cos_r)));
}

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::inertial: return "inertial";
    case ScenarioKind::one_accelerated: return "one-accelerated";
    case ScenarioKind::two_accelerated: return "two-accelerated";
  }
  return "unknown";
}

Scenario Scenario::inertial() { return Scenario({}); }

Scenario Scenario::one_accelerated(AccelerationParam r_c) { return Scenario({{"C", r_c}}); }

Scenario Scenario::two_accelerated(AccelerationParam r_b, AccelerationParam r_c) {
  return Scenario({{"B", r_b}, {"C", r_c}});
}

Scenario::Scenario(std::map<std::string, AccelerationParam> params) : params_(std::move(params)) {
  for (const auto& [observer, r] : params_) {
    if (observer != "B" && observer != "C")
      throw std::invalid_argument("Scenario: only B and C may accelerate, got '" + observer + "'");
  }
}

AccelerationParam Scenario::r(const std::string& observer) const {
  auto it = params_.find(observer);
  return it == params_.end() ? AccelerationParam{} : it->second;
}

ScenarioKind Scenario::kind() const {
  if (params_.empty()) return ScenarioKind::inertial;
  if (params_.size() == 2) return ScenarioKind::two_accelerated;
  // A lone accelerated B is the mirror image of the one-observer case.
  return ScenarioKind::one_accelerated;
}

PureState ghz_state() {
  std::vector<Complex> amps(8);
  amps[0b000] = amps[0b111] = 1.0 / std::numbers::sqrt2;
  return PureState(make_layout({"A", "B", "C"}), std::move(amps));
}

std::string region_one_label(const std::string& mode) { return mode + "_I"; }
std::string region_two_label(const std::string& mode) { return mode + "_II"; }

PureState unruh_embed(const PureState& state, const std::string& mode, AccelerationParam r) {
  const SubsystemLayout& old_layout = state.layout();
  const std::size_t pos = old_layout.position(mode);
  if (old_layout.factors()[pos].dim != 2)
    throw std::invalid_argument("unruh_embed: mode '" + mode + "' is not a qubit");

  std::vector<Factor> factors = old_layout.factors();
  factors[pos] = {region_one_label(mode), 2};
  factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                 Factor{region_two_label(mode), 2});
  SubsystemLayout layout(std::move(factors));

  const double c = r.cos();
  const double s = r.sin();
  std::vector<Complex> amps(layout.total_dim());
  for (std::size_t i = 0; i < old_layout.total_dim(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex{}) continue;
    auto d = old_layout.digits(i);
    const std::size_t occupied = d[pos];
    d.insert(d.begin() + static_cast<std::ptrdiff_t>(pos) + 1, 0);
    if (occupied == 0) {
      amps[layout.index(d)] += c * a;  // |0>_I |0>_II
      d[pos] = 1;
      d[pos + 1] = 1;
      amps[layout.index(d)] += s * a;  // |1>_I |1>_II
    } else {
      amps[layout.index(d)] += a;      // |1>_I |0>_II
    }
  }
  return PureState(std::move(layout), std::move(amps));
}

DensityOperator physical_state(const Scenario& scenario) {
  PureState psi = ghz_state();
  std::vector<std::string> inaccessible;
  for (const auto& [observer, r] : scenario.params()) {
    psi = unruh_embed(psi, observer, r);
    inaccessible.push_back(region_two_label(observer));
  }

  std::vector<std::string> keep;
  for (const auto& label : psi.layout().labels())
    if (std::find(inaccessible.begin(), inaccessible.end(), label) == inaccessible.end())
      keep.push_back(label);
  return partial_trace(psi.projector(), keep);
}

}  // namespace tangle
