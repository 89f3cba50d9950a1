#pragma once

namespace tangle {

// Every numerical threshold used by the library lives here.
struct Tolerances {
  double hermitian = 1e-12;          // density operator Hermiticity defect
  double trace = 1e-12;              // |tr(rho) - 1|
  double min_eigenvalue = -1e-10;    // density operator PSD floor
  double norm = 1e-12;               // | ||psi|| - 1 |
  double eigen_input = 1e-10;        // Hermiticity required by the eigensolver
  double unitarity = 1e-10;          // max |U U^dagger - I| accepted by apply_unitary
  double jacobi_off_diagonal = 1e-13;
  int jacobi_max_sweeps = 64;
  double clamp_zero = 1e-12;         // tangles below this are reported as 0
  double internal_negative = 1e-10;  // tangles below -this are a bug
  double ckw_slack = 1e-10;
  double pair_symmetry = 1e-10;      // N_ab vs N_ba debug check
};

inline constexpr Tolerances kTolerances{};

}  // namespace tangle
