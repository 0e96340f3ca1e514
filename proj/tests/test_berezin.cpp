#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hardysym/berezin.hpp"

using namespace hardysym;

namespace {

std::mt19937_64 rng(555666777);

Complex random_coeff() {
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  return std::polar(mag(rng), phase(rng));
}

}  // namespace

TEST_CASE("kernel coefficients are conjugate powers") {
  KernelVector k = kernel_at(Complex(0.5, 0.0), 3);
  REQUIRE(k.coeffs.size() == 3);
  CHECK(k.coeffs[0] == Complex(1.0));
  CHECK(k.coeffs[1] == Complex(0.5));
  CHECK(k.coeffs[2] == Complex(0.25));
  // dropped tail: sum_{n >= 3} |w|^{2n} = (1/64)/(3/4)
  CHECK(k.tail_bound == doctest::Approx(1.0 / 48.0).epsilon(1e-15));

  KernelVector ki = kernel_at(Complex(0.0, 0.5), 3);
  CHECK(ki.coeffs[1] == Complex(0.0, -0.5));
  CHECK(ki.coeffs[2] == Complex(-0.25, 0.0));
}

TEST_CASE("kernel outside the open disk is refused") {
  CHECK_THROWS_AS(kernel_at(Complex(1.0, 0.0), 4), DiskViolation);
  CHECK_THROWS_AS(kernel_at(Complex(0.8, 0.8), 4), DiskViolation);
  CHECK_THROWS_AS(kernel_at(Complex(0.5, 0.0), 0), std::invalid_argument);
}

TEST_CASE("identity transforms to one minus the kernel tail") {
  const int n = 16;
  TruncatedOperator id(Eigen::MatrixXcd::Identity(n, n));
  const Complex w(0.3, -0.2);
  const double r2 = std::norm(w);
  BerezinValue v = berezin_transform(id, w);
  CHECK(std::abs(v.value - Complex(1.0 - std::pow(r2, n))) < 1e-14);
}

TEST_CASE("shift powers reproduce w^k up to the truncation correction") {
  const int n = 24;
  for (int k = 0; k <= 3; ++k) {
    TruncatedOperator t =
        toeplitz_from_symbol(LaurentSeries::monomial(k), n);
    const Complex w(0.4, 0.25);
    const double r2 = std::norm(w);
    BerezinValue v = berezin_transform(t, w);
    const Complex want =
        std::pow(w, k) * (1.0 - std::pow(r2, n - k));
    CHECK(std::abs(v.value - want) < 1e-14);
  }
}

TEST_CASE("transform of the adjoint is the conjugate") {
  Eigen::MatrixXcd m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = random_coeff();
  TruncatedOperator t(m);
  const Complex w(0.2, 0.35);
  BerezinValue a = berezin_transform(t, w);
  BerezinValue b = berezin_transform(adjoint(t), w);
  CHECK(std::abs(b.value - std::conj(a.value)) < 1e-12);
}

TEST_CASE("analytic symbols are recovered pointwise") {
  // For T_phi with analytic phi the transform equals phi(w) up to a
  // kernel-tail correction that is negligible at this truncation.
  std::vector<Complex> c = {random_coeff(), random_coeff(), random_coeff(),
                            random_coeff()};
  LaurentSeries phi(0, c);
  TruncatedOperator t = toeplitz_from_symbol(phi, 32);
  const Complex w(0.25, -0.3);
  Complex phi_w(0.0);
  for (int k = 0; k < 4; ++k) phi_w += c[k] * std::pow(w, k);
  BerezinValue v = berezin_transform(t, w);
  CHECK(std::abs(v.value - phi_w) < 1e-12);
}

TEST_CASE("transform is linear in the operator") {
  Eigen::MatrixXcd m1(5, 5), m2(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      m1(i, j) = random_coeff();
      m2(i, j) = random_coeff();
    }
  const Complex alpha(0.7, -1.3);
  const Complex w(0.45, 0.1);
  BerezinValue va = berezin_transform(TruncatedOperator(m1), w);
  BerezinValue vb = berezin_transform(TruncatedOperator(m2), w);
  BerezinValue vc = berezin_transform(TruncatedOperator(m1 + alpha * m2), w);
  CHECK(std::abs(vc.value - (va.value + alpha * vb.value)) < 1e-12);
}

TEST_CASE("sweep samples the stated circle") {
  TruncatedOperator t =
      toeplitz_from_symbol(LaurentSeries::monomial(1), 16);
  const auto rows = berezin_sweep(t, 0.3, 8);
  REQUIRE(rows.size() == 8);
  for (const BerezinRow& row : rows) {
    CHECK(std::abs(std::abs(row.w) - 0.3) < 1e-15);
    BerezinValue direct = berezin_transform(t, row.w);
    CHECK(row.value == direct.value);
    CHECK(row.tail_bound == direct.tail_bound);
  }
  CHECK(rows[0].w == Complex(0.3, 0.0));
  CHECK_THROWS_AS(berezin_sweep(t, 1.0, 4), DiskViolation);
}
