#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tangle/eigen.hpp"
#include "tangle/matrix.hpp"
#include "tangle/rindler.hpp"
#include "tangle/subsystems.hpp"
#include "test_support.hpp"

using namespace tangle;
using doctest::Approx;

namespace {

DensityOperator bell_state() {
  std::vector<Complex> amps(4);
  amps[0] = amps[3] = 1.0 / std::numbers::sqrt2;
  return PureState(make_layout({"A", "B"}), amps).projector();
}

}  // namespace

TEST_CASE("kron") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  CHECK(kron(ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::diagonal({1.0, 0.0})) ==
        ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}));

  // sigma_y (x) sigma_y: (-i)(-i) = -1 in the corners, (-i)(i) = 1 inside.
  const ComplexMatrix flip = kron(pauli::y(), pauli::y());
  ComplexMatrix expected(4);
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  CHECK(max_abs_difference(flip, expected) == 0.0);

  SUBCASE("index convention") {
    const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    const ComplexMatrix b{{0.0, 5.0, 0.0}, {6.0, 0.0, 0.0}, {0.0, 0.0, 7.0}};
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.dim() == 6);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t p = 0; p < 3; ++p)
          for (std::size_t q = 0; q < 3; ++q) CHECK(k(i * 3 + p, j * 3 + q) == a(i, j) * b(p, q));
  }
}

TEST_CASE("ComplexMatrix rejects malformed input") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex(std::nan(""), 0.0)}), std::invalid_argument);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
}

TEST_CASE("SubsystemLayout") {
  const SubsystemLayout layout({{"A", 2}, {"B", 3}, {"C", 2}});
  CHECK(layout.total_dim() == 12);
  // First factor is the most significant digit.
  CHECK(layout.stride(0) == 6);
  CHECK(layout.stride(1) == 2);
  CHECK(layout.stride(2) == 1);
  CHECK(layout.digits(11) == std::vector<std::size_t>{1, 2, 1});
  CHECK(layout.index({1, 0, 1}) == 7);
  for (std::size_t i = 0; i < layout.total_dim(); ++i) CHECK(layout.index(layout.digits(i)) == i);

  CHECK_THROWS_AS(SubsystemLayout({{"A", 2}, {"A", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SubsystemLayout({{"A", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(layout.position("D"), std::invalid_argument);
  CHECK_THROWS_AS(layout.index({2, 0, 0}), std::invalid_argument);
}

TEST_CASE("PureState and DensityOperator invariants") {
  CHECK_THROWS_AS(PureState(make_layout({"A"}), {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PureState(make_layout({"A"}), {1.0}), std::invalid_argument);

  const auto layout = make_layout({"A"});
  CHECK_THROWS_AS(DensityOperator(layout, ComplexMatrix{{0.5, 0.0}, {0.0, 0.4}}),
                  std::invalid_argument);  // trace
  CHECK_THROWS_AS(DensityOperator(layout, ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}),
                  std::invalid_argument);  // not Hermitian
  CHECK_THROWS_AS(DensityOperator(layout, ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}),
                  std::invalid_argument);  // negative eigenvalue
  CHECK_THROWS_AS(DensityOperator(make_layout({"A", "B"}), ComplexMatrix::identity(2)),
                  std::invalid_argument);  // layout mismatch
  CHECK_NOTHROW(DensityOperator(layout, ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}));
}

TEST_CASE("partial_trace") {
  const DensityOperator ghz = ghz_state().projector();

  SUBCASE("GHZ marginal on A,B") {
    const DensityOperator ab = partial_trace(ghz, {"A", "B"});
    CHECK(ab.layout().labels() == std::vector<std::string>{"A", "B"});
    CHECK(max_abs_difference(ab.matrix(), ComplexMatrix::diagonal({0.5, 0.0, 0.0, 0.5})) < 1e-15);
  }

  SUBCASE("total trace is 1") {
    const DensityOperator a = partial_trace(ghz, {"A"});
    CHECK(std::abs(a.matrix().trace() - 1.0) < 1e-15);
  }

  SUBCASE("kept factors keep their original order") {
    const DensityOperator ca = partial_trace(ghz, {"C", "A"});
    CHECK(ca.layout().labels() == std::vector<std::string>{"A", "C"});
  }

  SUBCASE("r = 0 embedding traces back to the GHZ projector") {
    PureState psi = unruh_embed(ghz_state(), "B", AccelerationParam(0.0));
    psi = unruh_embed(psi, "C", AccelerationParam(0.0));
    const DensityOperator traced = partial_trace(psi.projector(), {"A", "B_I", "C_I"});
    CHECK(max_abs_difference(traced.matrix(), ghz.matrix()) < 1e-15);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(partial_trace(ghz, {"D"}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ghz, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ghz, {"A", "A"}), std::invalid_argument);
  }

  SUBCASE("dim-1 factors are no-ops") {
    const SubsystemLayout layout({{"X", 1}, {"A", 2}});
    const DensityOperator rho(layout, ComplexMatrix{{0.25, 0.1}, {0.1, 0.75}});
    const DensityOperator a = partial_trace(rho, {"A"});
    CHECK(max_abs_difference(a.matrix(), rho.matrix()) == 0.0);
  }
}

TEST_CASE("partial_transpose") {
  SUBCASE("moves |111><000| to |011><100| on subsystem A") {
    const double rb = 0.3, rc = 0.5;
    const DensityOperator rho(make_layout({"A", "B_I", "C_I"}),
                              testing::literal_two_acc_state(rb, rc));
    const ComplexMatrix t = partial_transpose(rho, "A");
    const double coherence = 0.5 * std::cos(rb) * std::cos(rc);
    CHECK(std::abs(t(0b011, 0b100) - coherence) < 1e-15);
    CHECK(std::abs(t(0b100, 0b011) - coherence) < 1e-15);
    CHECK(std::abs(t(0b000, 0b111)) == 0.0);
    CHECK(std::abs(t(0b111, 0b000)) == 0.0);
    // Diagonal untouched.
    for (std::size_t i = 0; i < 8; ++i) CHECK(t(i, i) == rho(i, i));
  }

  SUBCASE("product state stays PSD and equals rho_A^T (x) rho_B") {
    std::mt19937_64 rng(7);
    const auto layout_a = make_layout({"A"});
    const auto layout_b = make_layout({"B"});
    const DensityOperator a(layout_a, testing::random_density_matrix(2, rng));
    const DensityOperator b(layout_b, testing::random_density_matrix(2, rng));
    const DensityOperator ab = tensor_product(a, b);
    const ComplexMatrix t = partial_transpose(ab, "A");
    CHECK(max_abs_difference(t, kron(a.matrix().transpose(), b.matrix())) < 1e-15);
    CHECK(hermitian_eigenvalues(t).front() > -1e-12);
  }

  SUBCASE("unknown label") {
    CHECK_THROWS_AS(partial_transpose(ghz_state().projector(), "Z"), std::invalid_argument);
  }
}

TEST_CASE("hermitian_eigenvalues") {
  const auto d = hermitian_eigenvalues(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
  CHECK(d == std::vector<double>{1.0, 2.0, 3.0});

  const auto x = hermitian_eigenvalues(pauli::x());
  CHECK(x[0] == Approx(-1.0).epsilon(1e-14));
  CHECK(x[1] == Approx(1.0).epsilon(1e-14));

  const auto y = hermitian_eigenvalues(pauli::y());
  CHECK(std::abs(y[0] + 1.0) < 1e-12);
  CHECK(std::abs(y[1] - 1.0) < 1e-12);

  // Bell partial transpose is the swap operator / 2: eigenvalues -1/2 and 1/2 (x3).
  const auto bell = hermitian_eigenvalues(partial_transpose(bell_state(), "A"));
  REQUIRE(bell.size() == 4);
  CHECK(std::abs(bell[0] + 0.5) < 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(bell[k] - 0.5) < 1e-12);

  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}),
                  std::invalid_argument);

  SUBCASE("eigenvectors reconstruct random Hermitian matrices") {
    std::mt19937_64 rng(11);
    for (std::size_t dim : {1u, 2u, 5u, 16u, 32u}) {
      const ComplexMatrix m = testing::random_hermitian(dim, rng);
      const EigenSystem es = hermitian_eigensystem(m);
      ComplexMatrix rebuilt(dim);
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j)
            rebuilt(i, j) += es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
      CHECK(max_abs_difference(rebuilt, m) < 1e-11);
      CHECK(max_abs_difference(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(dim)) <
            1e-12);
      CHECK(std::is_sorted(es.values.begin(), es.values.end()));
      double sum = 0.0;
      for (double v : es.values) sum += v;
      CHECK(std::abs(sum - m.trace().real()) < 1e-10);
    }
  }

  SUBCASE("rank-one projector") {
    std::mt19937_64 rng(3);
    std::vector<Complex> v(8);
    std::normal_distribution<double> normal;
    double norm = 0.0;
    for (auto& z : v) {
      z = Complex(normal(rng), normal(rng));
      norm += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(norm);
    const auto spectrum = hermitian_eigenvalues(outer_product(v));
    CHECK(std::abs(spectrum.back() - 1.0) < 1e-12);
    for (int k = 0; k < 7; ++k) CHECK(std::abs(spectrum[k]) < 1e-12);
  }
}

TEST_CASE("trace_norm") {
  CHECK(std::abs(trace_norm(bell_state().matrix()) - 1.0) < 1e-12);
  CHECK(std::abs(trace_norm(partial_transpose(bell_state(), "A")) - 2.0) < 1e-12);

  const DensityOperator ghz_embedded =
      physical_state(Scenario::two_accelerated(AccelerationParam(0.0), AccelerationParam(0.0)));
  CHECK(std::abs(trace_norm(partial_transpose(ghz_embedded, "A")) - 2.0) < 1e-12);

  CHECK_THROWS_AS(trace_norm(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("psd_sqrt") {
  std::mt19937_64 rng(5);
  const ComplexMatrix rho = testing::random_density_matrix(4, rng);
  const ComplexMatrix root = psd_sqrt(rho);
  CHECK(max_abs_difference(root * root, rho) < 1e-13);
}
