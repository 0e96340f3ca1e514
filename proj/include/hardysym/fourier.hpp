#pragma once

#include <complex>
#include <vector>

#include "hardysym/errors.hpp"

namespace hardysym {

using Complex = std::complex<double>;

/// Uniform sampling grid on the unit circle, theta_j = 2*pi*j/M.
class CircleGrid {
 public:
  explicit CircleGrid(int m);
  int size() const { return m_; }
  double theta(int j) const;

 private:
  int m_;
};

/// Finite two-sided coefficient table c_n for n in [n_min, n_max],
/// representing sum_n c_n e^{i n theta}. Immutable after construction.
class LaurentSeries {
 public:
  LaurentSeries(int n_min, std::vector<Complex> coeffs);

  static LaurentSeries zero();
  static LaurentSeries monomial(int n, Complex c = Complex(1.0, 0.0));

  int n_min() const { return n_min_; }
  int n_max() const { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
  int band_width() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Coefficient at index n; zero outside the stored band.
  Complex at(int n) const;

  double norm() const;

 private:
  int n_min_;
  std::vector<Complex> coeffs_;
};

/// One-sided coefficient table, index range [0, size-1]. The zero
/// function is represented by an empty table.
class HardyCoeffs {
 public:
  HardyCoeffs() = default;
  explicit HardyCoeffs(std::vector<Complex> coeffs);

  static HardyCoeffs monomial(int n, Complex c = Complex(1.0, 0.0));

  int size() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex at(int n) const;

  /// Index of the highest nonzero coefficient, -1 for the zero function.
  int degree() const;

  double norm_sq() const;
  double norm() const;

  LaurentSeries as_series() const;

 private:
  std::vector<Complex> coeffs_;
};

std::vector<Complex> evaluate_on_grid(const LaurentSeries& s, const CircleGrid& g);
std::vector<Complex> evaluate_on_grid(const HardyCoeffs& f, const CircleGrid& g);

/// Recover the coefficients of a band-limited function from its grid
/// samples. Throws BandTooWide when the grid cannot resolve the band
/// (fewer points than band width means aliasing, never silent).
LaurentSeries coeffs_from_grid(const std::vector<Complex>& values, int n_min,
                               int n_max, const CircleGrid& g);

/// Cauchy product; bands add.
LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b);
HardyCoeffs multiply(const HardyCoeffs& a, const HardyCoeffs& b);

/// sum_n a_n * conj(b_n) over the common table.
Complex inner_product(const HardyCoeffs& a, const HardyCoeffs& b);

/// Drop all negative-index coefficients.
HardyCoeffs riesz_project(const LaurentSeries& s);

/// f(z) * z^k, k >= 0.
HardyCoeffs shifted_up(const HardyCoeffs& f, int k);

}  // namespace hardysym
