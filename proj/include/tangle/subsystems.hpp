#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tangle/matrix.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

struct Factor {
  std::string label;
  std::size_t dim = 0;

  bool operator==(const Factor&) const = default;
};

/// Ordered tensor factors. The first factor is the most significant digit of
/// the mixed-radix basis index.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  /// Throws std::invalid_argument on duplicate labels or zero dims.
  explicit SubsystemLayout(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::size_t total_dim() const { return total_dim_; }

  bool contains(const std::string& label) const;
  /// Position of `label`; throws std::invalid_argument if absent.
  std::size_t position(const std::string& label) const;
  std::vector<std::string> labels() const;

  /// Place value of factor `pos` in the flat index.
  std::size_t stride(std::size_t pos) const { return strides_[pos]; }
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(const std::vector<std::size_t>& digits) const;

  bool operator==(const SubsystemLayout& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> strides_;
  std::size_t total_dim_ = 1;
};

/// One factor of dimension `dim` per label.
SubsystemLayout make_layout(const std::vector<std::string>& labels, std::size_t dim = 2);

class DensityOperator;

/// Unit-norm amplitude vector over a layout.
class PureState {
 public:
  /// Throws std::invalid_argument on length mismatch or norm off by more than tol.norm.
  PureState(SubsystemLayout layout, std::vector<Complex> amplitudes,
            const Tolerances& tol = kTolerances);

  const SubsystemLayout& layout() const { return layout_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
  Complex amplitude(const std::vector<std::size_t>& digits) const;
  double norm() const;

  DensityOperator projector() const;

 private:
  SubsystemLayout layout_;
  std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over a layout.
class DensityOperator {
 public:
  /// Validates every invariant; violations raise std::invalid_argument.
  DensityOperator(SubsystemLayout layout, ComplexMatrix matrix,
                  const Tolerances& tol = kTolerances);

  /// Checks Hermiticity and trace but not the spectrum. For matrices that are
  /// PSD by construction: projectors, partial traces, products, unitary conjugates.
  static DensityOperator assume_positive(SubsystemLayout layout, ComplexMatrix matrix,
                                         const Tolerances& tol = kTolerances);

  const SubsystemLayout& layout() const { return layout_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }
  Complex operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

 private:
  DensityOperator(SubsystemLayout layout, ComplexMatrix matrix, const Tolerances& tol,
                  bool check_spectrum);

  SubsystemLayout layout_;
  ComplexMatrix matrix_;
};

/// Trace out every factor not named in `keep`. Kept factors retain their order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep);

/// Transpose the indices of the named factors only.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemLayout& layout,
                                const std::vector<std::string>& labels);
ComplexMatrix partial_transpose(const DensityOperator& rho, const std::string& label);

/// rho_a (x) rho_b with concatenated layouts; labels must be disjoint.
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);

/// U rho U^dagger. U must be unitary of matching dimension.
DensityOperator apply_unitary(const DensityOperator& rho, const ComplexMatrix& unitary,
                              const Tolerances& tol = kTolerances);

}  // namespace tangle
