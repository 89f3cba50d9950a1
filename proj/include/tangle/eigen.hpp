#pragma once

#include <vector>

#include "tangle/matrix.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

// Cyclic Jacobi on a Hermitian matrix. Inputs with a Hermiticity defect above
// tol.eigen_input raise std::invalid_argument; failure to converge within
// tol.jacobi_max_sweeps raises std::runtime_error.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const Tolerances& tol = kTolerances);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          const Tolerances& tol = kTolerances);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m, const Tolerances& tol = kTolerances);

/// Principal square root of a PSD Hermitian matrix; negative eigen-noise is clamped to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol = kTolerances);

}  // namespace tangle
