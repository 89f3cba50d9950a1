#include "tangle/measures.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "tangle/eigen.hpp"

namespace tangle {
namespace {

double clamp_tangle(double value, const Tolerances& tol) {
  if (value < -tol.internal_negative)
    throw std::logic_error("tangle evaluated to " + std::to_string(value) + " < 0");
  return value < tol.clamp_zero ? 0.0 : value;
}

void require_qubits(const DensityOperator& rho, std::size_t count, const char* who) {
  const auto& factors = rho.layout().factors();
  const bool ok = factors.size() == count &&
                  std::all_of(factors.begin(), factors.end(),
                              [](const Factor& f) { return f.dim == 2; });
  if (!ok)
    throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(count) +
                                " qubit factors");
}

DensityOperator pair_state(const DensityOperator& rho3,
                           const std::pair<std::string, std::string>& pair) {
  require_qubits(rho3, 3, "pair_state");
  if (pair.first == pair.second) throw std::invalid_argument("pair labels must differ");
  return partial_trace(rho3, {pair.first, pair.second});
}

}  // namespace

double negativity(const DensityOperator& rho, const std::vector<std::string>& part,
                  const Tolerances& tol) {
  const auto& layout = rho.layout();
  if (part.empty() || part.size() >= layout.size())
    throw std::invalid_argument("negativity: part must be a proper nonempty subset");
  for (std::size_t i = 0; i < part.size(); ++i) {
    layout.position(part[i]);
    if (std::count(part.begin(), part.end(), part[i]) > 1)
      throw std::invalid_argument("negativity: duplicate label '" + part[i] + "'");
  }
  const ComplexMatrix transposed = partial_transpose(rho.matrix(), layout, part);
  return clamp_tangle(trace_norm(transposed, tol) - 1.0, tol);
}

double concurrence(const DensityOperator& rho, const Tolerances& tol) {
  require_qubits(rho, 2, "concurrence");
  const ComplexMatrix flip = kron(pauli::y(), pauli::y());
  const ComplexMatrix rho_tilde = flip * rho.matrix().conjugate() * flip;

  // sqrt(rho) rho~ sqrt(rho) is Hermitian and isospectral with rho rho~.
  const ComplexMatrix root = psd_sqrt(rho.matrix(), tol);
  ComplexMatrix m = root * rho_tilde * root;
  m = (m + m.adjoint()) * Complex(0.5);

  std::vector<double> lambda = hermitian_eigenvalues(m, tol);
  for (double& l : lambda) l = std::sqrt(std::max(0.0, l));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return clamp_tangle(std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]), tol);
}

double two_tangle(const DensityOperator& rho3, const std::pair<std::string, std::string>& pair,
                  const Tolerances& tol) {
  const DensityOperator reduced = pair_state(rho3, pair);
  const double value = negativity(reduced, {pair.first}, tol);
  assert(std::abs(value - negativity(reduced, {pair.second}, tol)) < tol.pair_symmetry);
  return value;
}

double pair_concurrence(const DensityOperator& rho3,
                        const std::pair<std::string, std::string>& pair,
                        const Tolerances& tol) {
  return concurrence(pair_state(rho3, pair), tol);
}

double TangleReport::two_tangle_between(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t k = 0; k < kPairs.size(); ++k)
    if (kPairs[k].first == a && kPairs[k].second == b) return two_tangles[k];
  throw std::invalid_argument("two_tangle_between: invalid pair");
}

TangleReport tangle_report(const DensityOperator& rho3, const Tolerances& tol) {
  require_qubits(rho3, 3, "tangle_report");
  TangleReport report;
  const auto labels = rho3.layout().labels();
  std::copy(labels.begin(), labels.end(), report.labels.begin());

  for (std::size_t a = 0; a < 3; ++a) report.one_tangles[a] = negativity(rho3, {labels[a]}, tol);
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    const std::pair pair{labels[kPairs[k].first], labels[kPairs[k].second]};
    report.two_tangles[k] = two_tangle(rho3, pair, tol);
    report.concurrences[k] = pair_concurrence(rho3, pair, tol);
  }

  double sum = 0.0;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    const double one = report.one_tangles[a] * report.one_tangles[a];
    const double nab = report.two_tangle_between(a, b);
    const double nac = report.two_tangle_between(a, c);
    const double pairs = nab * nab + nac * nac;
    report.residuals[a] = one - pairs;
    report.ckw_satisfied[a] = pairs <= one + tol.ckw_slack;
    sum += report.residuals[a];
  }
  report.pi_tangle = sum / 3.0;
  return report;
}

}  // namespace tangle
