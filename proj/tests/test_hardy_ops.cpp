#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hardysym/hardy_ops.hpp"

using namespace hardysym;

namespace {

std::mt19937_64 rng(24680);

Complex random_coeff() {
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  return std::polar(mag(rng), phase(rng));
}

LaurentSeries random_symbol(int lo, int hi) {
  std::vector<Complex> c;
  for (int n = lo; n <= hi; ++n) c.push_back(random_coeff());
  return LaurentSeries(lo, c);
}

}  // namespace

TEST_CASE("toeplitz matrix holds symbol coefficients along diagonals") {
  // Entry (m, n) carries the coefficient at frequency m - n, so the
  // analytic part of the symbol sits below the main diagonal.
  LaurentSeries phi(-1, {Complex(0.5), Complex(1.0), Complex(0.25)});
  TruncatedOperator t = toeplitz_from_symbol(phi, 3);
  CHECK(t.entry(0, 0) == Complex(1.0));
  CHECK(t.entry(0, 1) == Complex(0.5));
  CHECK(t.entry(0, 2) == Complex(0.0));
  CHECK(t.entry(1, 0) == Complex(0.25));
  CHECK(t.entry(2, 1) == Complex(0.25));
  CHECK(t.entry(2, 0) == Complex(0.0));
  REQUIRE(t.exact_band().has_value());
  CHECK(t.exact_band()->lo == -1);
  CHECK(t.exact_band()->hi == 1);
}

TEST_CASE("shift operator maps each basis vector up") {
  TruncatedOperator s = toeplitz_from_symbol(LaurentSeries::monomial(1), 4);
  HardyCoeffs e0 = HardyCoeffs::monomial(0);
  HardyCoeffs out = apply(s, e0);
  CHECK(out.at(0) == Complex(0.0));
  CHECK(out.at(1) == Complex(1.0));
  // The top basis vector falls off the truncation.
  CHECK(apply(s, HardyCoeffs::monomial(3)).degree() == -1);
}

TEST_CASE("weighted upper triangular matrix layout") {
  std::vector<Complex> g = {Complex(1.0), Complex(1.0), Complex(2.0),
                            Complex(6.0)};
  TruncatedOperator t = gamma_upper_triangular(g, 4);
  // Row m holds gamma_{j-m} at column j.
  const Complex want[4][4] = {
      {Complex(1), Complex(1), Complex(2), Complex(6)},
      {Complex(0), Complex(1), Complex(1), Complex(2)},
      {Complex(0), Complex(0), Complex(1), Complex(1)},
      {Complex(0), Complex(0), Complex(0), Complex(1)}};
  for (int m = 0; m < 4; ++m)
    for (int j = 0; j < 4; ++j) CHECK(t.entry(m, j) == want[m][j]);
  CHECK_THROWS_AS(gamma_upper_triangular({Complex(1.0)}, 4), TableTooShort);
}

TEST_CASE("apply equals direct matrix-vector product") {
  LaurentSeries phi = random_symbol(-3, 3);
  TruncatedOperator t = toeplitz_from_symbol(phi, 8);
  std::vector<Complex> vc;
  for (int k = 0; k < 8; ++k) vc.push_back(random_coeff());
  HardyCoeffs v(vc);
  HardyCoeffs out = apply(t, v);
  for (int m = 0; m < 8; ++m) {
    Complex want(0.0);
    for (int n = 0; n < 8; ++n) want += t.entry(m, n) * vc[n];
    CHECK(std::abs(out.at(m) - want) < 1e-14);
  }
}

TEST_CASE("compression reproduces a toeplitz matrix and flags a dent") {
  LaurentSeries phi = random_symbol(-2, 2);
  TruncatedOperator t = toeplitz_from_symbol(phi, 6);
  TruncatedOperator c = shift_compress(t);
  REQUIRE(c.size() == 5);
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n < 5; ++n) CHECK(c.entry(m, n) == t.entry(m + 1, n + 1));

  ToeplitzCheck ok = is_toeplitz_algebraic(t, 1e-12);
  CHECK(ok.is_toeplitz);
  CHECK(ok.max_deviation == 0.0);

  Eigen::MatrixXcd dented = t.entries();
  dented(2, 1) += Complex(1e-3, 0.0);
  ToeplitzCheck bad = is_toeplitz_algebraic(TruncatedOperator(dented), 1e-12);
  CHECK_FALSE(bad.is_toeplitz);
  CHECK(bad.max_deviation == doctest::Approx(1e-3));
  // The dent at (2, 1) breaks both pairs along its diagonal.
  CHECK(((bad.at_m == 1 && bad.at_n == 0) || (bad.at_m == 2 && bad.at_n == 1)));
}

TEST_CASE("diagonal averages recover symbol coefficients") {
  LaurentSeries phi = random_symbol(-2, 2);
  TruncatedOperator t = toeplitz_from_symbol(phi, 16);
  LaurentSeries rec = diagonal_symbol_recovery(t, 3);
  for (int n = -2; n <= 2; ++n) CHECK(std::abs(rec.at(n) - phi.at(n)) < 1e-13);

  // Rank-one projection: every diagonal average shrinks with N, and the
  // main diagonal mean is exactly 1/N at margin 0.
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(8, 8);
  p(0, 0) = Complex(1.0);
  LaurentSeries flat = diagonal_symbol_recovery(TruncatedOperator(p), 0);
  CHECK(flat.at(0) == Complex(1.0 / 8.0));
  CHECK(flat.at(1) == Complex(0.0));
  CHECK_THROWS_AS(diagonal_symbol_recovery(t, 8), std::invalid_argument);
}

TEST_CASE("adjoint conjugate-transposes the matrix") {
  LaurentSeries phi = random_symbol(-2, 1);
  TruncatedOperator t = toeplitz_from_symbol(phi, 5);
  TruncatedOperator a = adjoint(t);
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n < 5; ++n)
      CHECK(a.entry(m, n) == std::conj(t.entry(n, m)));
  REQUIRE(a.exact_band().has_value());
  CHECK(a.exact_band()->lo == -1);
  CHECK(a.exact_band()->hi == 2);
}

TEST_CASE("band wider than the truncation still builds entrywise") {
  // only differences m - n in [-2, 2] are reachable at N = 3; the rest
  // of the symbol never appears but the band metadata is preserved
  LaurentSeries phi = random_symbol(-4, 4);
  TruncatedOperator t = toeplitz_from_symbol(phi, 3);
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) CHECK(t.entry(m, n) == phi.at(m - n));
  REQUIRE(t.exact_band().has_value());
  CHECK(t.exact_band()->lo == -4);
  CHECK(t.exact_band()->hi == 4);
}

TEST_CASE("smirnov validation accepts the canonical pair") {
  // a = (2/3)(1 - z/2), b = (sqrt(2)/3)(1 + z) satisfy
  // |a|^2 + |b|^2 = 1 on the circle identically.
  const double r = std::sqrt(2.0) / 3.0;
  SmirnovRatio s{HardyCoeffs({Complex(r), Complex(r)}),
                 HardyCoeffs({Complex(2.0 / 3.0), Complex(-1.0 / 3.0)})};
  CircleGrid g(64);
  SmirnovValidation v = validate_smirnov(s, g, 1e-9);
  CHECK(v.unit_norm);
  CHECK(v.canonical_dev < 1e-12);
  CHECK(v.min_abs_a > 0.3);
}

TEST_CASE("smirnov prefix solves the convolution b = a * phi") {
  const double r = std::sqrt(2.0) / 3.0;
  SmirnovRatio s{HardyCoeffs({Complex(r), Complex(r)}),
                 HardyCoeffs({Complex(2.0 / 3.0), Complex(-1.0 / 3.0)})};
  HardyCoeffs phi = smirnov_symbol_prefix(s, 24);
  REQUIRE(phi.size() == 24);
  for (int n = 0; n < 24; ++n) {
    Complex conv = s.a.at(0) * phi.at(n);
    if (n >= 1) conv += s.a.at(1) * phi.at(n - 1);
    CHECK(std::abs(conv - s.b.at(n)) < 1e-15);
  }
  // phi = b/a = sqrt(2)/2 * (1+z)/(1 - z/2): geometric expansion gives
  // phi_n = sqrt(2)/2 * (2^{-n} + 2^{1-n}) = 1.5 sqrt(2) 2^{-n} for n >= 1.
  CHECK(std::abs(phi.at(0) - Complex(std::sqrt(2.0) / 2.0)) < 1e-15);
  for (int n = 1; n < 10; ++n) {
    const double want = 1.5 * std::sqrt(2.0) * std::pow(2.0, -n);
    CHECK(std::abs(phi.at(n) - Complex(want)) < 1e-14);
  }
}

TEST_CASE("realize dispatches all three symbol forms") {
  LaurentSeries phi = random_symbol(-1, 1);
  TruncatedOperator t1 = realize(SymbolSpec(TrigPolynomial{phi}), 6);
  CHECK(t1.entry(1, 0) == phi.at(1));

  const double r = std::sqrt(2.0) / 3.0;
  SmirnovRatio s{HardyCoeffs({Complex(r), Complex(r)}),
                 HardyCoeffs({Complex(2.0 / 3.0), Complex(-1.0 / 3.0)})};
  TruncatedOperator t2 = realize(SymbolSpec(s), 6);
  HardyCoeffs phi2 = smirnov_symbol_prefix(s, 6);
  CHECK(t2.entry(3, 1) == phi2.at(2));
  CHECK(t2.entry(0, 3) == Complex(0.0));

  std::vector<Complex> g = {Complex(1), Complex(1), Complex(2), Complex(6),
                            Complex(24), Complex(120)};
  TruncatedOperator t3 = realize(SymbolSpec(GammaWeights{g}), 6);
  CHECK(t3.entry(2, 4) == Complex(2.0));
}
