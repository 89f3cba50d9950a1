#include "tangle/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tangle {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary J = [[c, s e], [-s e*, c]] where
// e = a(p,q)/|a(p,q)|; the phase makes the 2x2 block real symmetric, after
// which the rotation angle is the classic real Jacobi one.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex h = a(p, q);
  const double abs_h = std::abs(h);
  if (abs_h == 0.0) return;
  const Complex e = h / abs_h;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_h);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex se = s * e;
  const Complex se_conj = std::conj(se);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - se_conj * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = se_conj * apk + c * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - se_conj * vkq;
    v(k, q) = se * vkp + c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const Tolerances& tol) {
  const double defect = m.hermiticity_defect();
  if (defect > tol.eigen_input) {
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  const std::size_t n = m.dim();
  // Symmetrize so the rotations act on an exactly Hermitian matrix.
  ComplexMatrix a = (m + m.adjoint()) * Complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = tol.jacobi_off_diagonal * std::max(1.0, a.frobenius_norm());

  bool converged = off_diagonal_norm(a) < threshold;
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) < threshold;
  }
  if (!converged) throw std::runtime_error("hermitian_eigensystem: Jacobi did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) out.vectors(row, k) = v(row, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol) {
  return hermitian_eigensystem(m, tol).values;
}

double trace_norm(const ComplexMatrix& m, const Tolerances& tol) {
  double sum = 0.0;
  for (double lambda : hermitian_eigenvalues(m, tol)) sum += std::abs(lambda);
  return sum;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol) {
  const EigenSystem es = hermitian_eigensystem(m, tol);
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(0.0, es.values[k]));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}

}  // namespace tangle
