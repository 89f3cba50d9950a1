#include "tangle/subsystems.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "tangle/eigen.hpp"

namespace tangle {

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim == 0) throw std::invalid_argument("SubsystemLayout: factor '" + f.label + "' has dim 0");
    if (!seen.insert(f.label).second)
      throw std::invalid_argument("SubsystemLayout: duplicate label '" + f.label + "'");
  }
  strides_.assign(factors_.size(), 1);
  total_dim_ = 1;
  for (std::size_t pos = factors_.size(); pos-- > 0;) {
    strides_[pos] = total_dim_;
    total_dim_ *= factors_[pos].dim;
  }
}

bool SubsystemLayout::contains(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

std::size_t SubsystemLayout::position(const std::string& label) const {
  for (std::size_t pos = 0; pos < factors_.size(); ++pos)
    if (factors_[pos].label == label) return pos;
  throw std::invalid_argument("SubsystemLayout: unknown label '" + label + "'");
}

std::vector<std::string> SubsystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t index) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t pos = 0; pos < factors_.size(); ++pos)
    out[pos] = (index / strides_[pos]) % factors_[pos].dim;
  return out;
}

std::size_t SubsystemLayout::index(const std::vector<std::size_t>& digits) const {
  if (digits.size() != factors_.size())
    throw std::invalid_argument("SubsystemLayout: digit count mismatch");
  std::size_t out = 0;
  for (std::size_t pos = 0; pos < factors_.size(); ++pos) {
    if (digits[pos] >= factors_[pos].dim)
      throw std::invalid_argument("SubsystemLayout: digit out of range for '" +
                                  factors_[pos].label + "'");
    out += digits[pos] * strides_[pos];
  }
  return out;
}

SubsystemLayout make_layout(const std::vector<std::string>& labels, std::size_t dim) {
  std::vector<Factor> factors;
  factors.reserve(labels.size());
  for (const auto& l : labels) factors.push_back({l, dim});
  return SubsystemLayout(std::move(factors));
}

// ---------------------------------------------------------------------------

PureState::PureState(SubsystemLayout layout, std::vector<Complex> amplitudes,
                     const Tolerances& tol)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.total_dim())
    throw std::invalid_argument("PureState: amplitude count does not match layout");
  for (const auto& z : amplitudes_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("PureState: non-finite amplitude");
  if (std::abs(norm() - 1.0) > tol.norm)
    throw std::invalid_argument("PureState: norm " + std::to_string(norm()) + " is not 1");
}

Complex PureState::amplitude(const std::vector<std::size_t>& digits) const {
  return amplitudes_[layout_.index(digits)];
}

double PureState::norm() const {
  double sum = 0.0;
  for (const auto& z : amplitudes_) sum += std::norm(z);
  return std::sqrt(sum);
}

DensityOperator PureState::projector() const {
  return DensityOperator::assume_positive(layout_, outer_product(amplitudes_));
}

// ---------------------------------------------------------------------------

DensityOperator::DensityOperator(SubsystemLayout layout, ComplexMatrix matrix,
                                 const Tolerances& tol)
    : DensityOperator(std::move(layout), std::move(matrix), tol, true) {}

DensityOperator DensityOperator::assume_positive(SubsystemLayout layout, ComplexMatrix matrix,
                                                 const Tolerances& tol) {
  return DensityOperator(std::move(layout), std::move(matrix), tol, false);
}

DensityOperator::DensityOperator(SubsystemLayout layout, ComplexMatrix matrix,
                                 const Tolerances& tol, bool check_spectrum)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  if (matrix_.dim() != layout_.total_dim())
    throw std::invalid_argument("DensityOperator: matrix dim does not match layout");
  if (!matrix_.is_finite()) throw std::invalid_argument("DensityOperator: non-finite entry");
  const double defect = matrix_.hermiticity_defect();
  if (defect > tol.hermitian)
    throw std::invalid_argument("DensityOperator: Hermiticity defect " + std::to_string(defect));
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol.trace)
    throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr.real()) +
                                " is not 1");
  if (!check_spectrum) return;
  const double lowest = hermitian_eigenvalues(matrix_, tol).front();
  if (lowest < tol.min_eigenvalue)
    throw std::invalid_argument("DensityOperator: negative eigenvalue " + std::to_string(lowest));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep) {
  const SubsystemLayout& layout = rho.layout();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");

  std::vector<bool> kept(layout.size(), false);
  for (const auto& label : keep) {
    const std::size_t pos = layout.position(label);
    if (kept[pos]) throw std::invalid_argument("partial_trace: duplicate label '" + label + "'");
    kept[pos] = true;
  }

  std::vector<Factor> kept_factors;
  for (std::size_t pos = 0; pos < layout.size(); ++pos)
    if (kept[pos]) kept_factors.push_back(layout.factors()[pos]);
  SubsystemLayout reduced(std::move(kept_factors));

  // Split every full index into (kept index, traced index).
  const std::size_t n = layout.total_dim();
  std::vector<std::size_t> kept_index(n), traced_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = layout.digits(i);
    std::size_t ki = 0, ti = 0;
    for (std::size_t pos = 0; pos < layout.size(); ++pos) {
      const std::size_t dim = layout.factors()[pos].dim;
      if (kept[pos]) ki = ki * dim + d[pos];
      else ti = ti * dim + d[pos];
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  ComplexMatrix out(reduced.total_dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += rho(i, j);

  return DensityOperator::assume_positive(std::move(reduced), std::move(out));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemLayout& layout,
                                const std::vector<std::string>& labels) {
  if (m.dim() != layout.total_dim())
    throw std::invalid_argument("partial_transpose: matrix dim does not match layout");
  std::vector<std::size_t> positions;
  for (const auto& label : labels) positions.push_back(layout.position(label));

  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto row = layout.digits(i);
      auto col = layout.digits(j);
      for (std::size_t pos : positions) std::swap(row[pos], col[pos]);
      out(layout.index(row), layout.index(col)) = m(i, j);
    }
  return out;
}

ComplexMatrix partial_transpose(const DensityOperator& rho, const std::string& label) {
  return partial_transpose(rho.matrix(), rho.layout(), {label});
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  std::vector<Factor> factors = a.layout().factors();
  factors.insert(factors.end(), b.layout().factors().begin(), b.layout().factors().end());
  return DensityOperator::assume_positive(SubsystemLayout(std::move(factors)),
                                         kron(a.matrix(), b.matrix()));
}

DensityOperator apply_unitary(const DensityOperator& rho, const ComplexMatrix& unitary,
                              const Tolerances& tol) {
  if (unitary.dim() != rho.dim())
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  const double defect =
      max_abs_difference(unitary * unitary.adjoint(), ComplexMatrix::identity(unitary.dim()));
  if (defect > tol.unitarity) throw std::invalid_argument("apply_unitary: matrix is not unitary");
  ComplexMatrix out = unitary * rho.matrix() * unitary.adjoint();
  // Restore exact Hermiticity lost to rounding in the two products.
  out = (out + out.adjoint()) * Complex(0.5);
  return DensityOperator::assume_positive(rho.layout(), std::move(out), tol);
}

}  // namespace tangle
