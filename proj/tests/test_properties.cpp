#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tangle/eigen.hpp"
#include "tangle/measures.hpp"
#include "tangle/rindler.hpp"
#include "test_support.hpp"

using namespace tangle;
using namespace tangle::testing;

namespace {

constexpr int kCases = 100;

PureState random_pure_state(const SubsystemLayout& layout, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(layout.total_dim());
  double norm = 0.0;
  for (auto& z : amps) {
    z = Complex(normal(rng), normal(rng));
    norm += std::norm(z);
  }
  for (auto& z : amps) z /= std::sqrt(norm);
  return PureState(layout, std::move(amps));
}

}  // namespace

TEST_CASE("partial_transpose is a trace- and Hermiticity-preserving involution") {
  std::mt19937_64 rng(20240601);
  const std::vector<SubsystemLayout> layouts{make_layout({"A", "B"}), make_layout({"A", "B", "C"})};
  for (int n = 0; n < kCases; ++n) {
    const SubsystemLayout& layout = layouts[n % 2];
    const ComplexMatrix m = random_hermitian(layout.total_dim(), rng);
    const auto labels = layout.labels();
    const std::vector<std::string> part{labels[n % labels.size()]};
    const ComplexMatrix once = partial_transpose(m, layout, part);
    CHECK(max_abs_difference(partial_transpose(once, layout, part), m) < 1e-14);
    CHECK(std::abs(once.trace() - m.trace()) < 1e-12);
    CHECK(once.hermiticity_defect() < 1e-14);
  }
}

TEST_CASE("partial_trace of a product returns the factor") {
  std::mt19937_64 rng(99);
  for (int n = 0; n < kCases; ++n) {
    const std::size_t dim_b = 2 + n % 3;
    const DensityOperator a(make_layout({"A"}), random_density_matrix(2, rng));
    const DensityOperator b(SubsystemLayout({{"B", dim_b}}), random_density_matrix(dim_b, rng));
    const DensityOperator ab = tensor_product(a, b);
    CHECK(max_abs_difference(partial_trace(ab, {"A"}).matrix(), a.matrix()) < 1e-12);
    CHECK(max_abs_difference(partial_trace(ab, {"B"}).matrix(), b.matrix()) < 1e-12);
  }
}

TEST_CASE("trace norm of a density matrix is 1") {
  std::mt19937_64 rng(4242);
  for (int n = 0; n < kCases; ++n) {
    const std::size_t dim = 2 + n % 7;
    const ComplexMatrix rho = random_density_matrix(dim, rng);
    CHECK(std::abs(trace_norm(rho) - 1.0) < 1e-10);
  }
}

TEST_CASE("negativity is invariant under local unitaries") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> uniform_r(0.0, kMaxAcceleration);
  for (int n = 0; n < kCases; ++n) {
    const DensityOperator rho =
        n % 2 == 0 ? physical_state(Scenario::two_accelerated(AccelerationParam(uniform_r(rng)),
                                                              AccelerationParam(uniform_r(rng))))
                   : random_pure_state(make_layout({"A", "B", "C"}), rng).projector();
    const ComplexMatrix local =
        kron(kron(random_unitary(2, rng), random_unitary(2, rng)), random_unitary(2, rng));
    const DensityOperator rotated = apply_unitary(rho, local);
    for (const auto& label : rho.layout().labels())
      CHECK(std::abs(negativity(rho, {label}) - negativity(rotated, {label})) < 1e-10);
  }
}

TEST_CASE("unruh_embed preserves the norm") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> uniform_r(0.0, kMaxAcceleration);
  for (int n = 0; n < kCases; ++n) {
    const PureState psi = random_pure_state(make_layout({"A", "B", "C"}), rng);
    const PureState embedded = unruh_embed(psi, n % 2 ? "B" : "C", AccelerationParam(uniform_r(rng)));
    CHECK(std::abs(embedded.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("physical states satisfy the density operator invariants") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uniform_r(0.0, kMaxAcceleration);
  for (int n = 0; n < kCases; ++n) {
    const Scenario s = n % 2 ? Scenario::one_accelerated(AccelerationParam(uniform_r(rng)))
                             : Scenario::two_accelerated(AccelerationParam(uniform_r(rng)),
                                                         AccelerationParam(uniform_r(rng)));
    const DensityOperator rho = physical_state(s);
    CHECK_NOTHROW(DensityOperator(rho.layout(), rho.matrix()));
  }
}
