#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>
#include <vector>

#include "hardysym/fourier.hpp"

namespace hardysym {

/// Diagonal band [lo, hi] (in m - n) outside which the underlying
/// operator is known to vanish, as far as inputs and outputs that fit
/// the truncation can see. Entries inside a certified operator are the
/// exact entries of the underlying operator, so applying it to a
/// polynomial that fits the truncation is exact coefficientwise.
struct ExactBand {
  int lo;
  int hi;
};

/// N x N compression of an operator on the analytic coefficient space.
/// entry(m, n) is the m-th output coefficient of the n-th basis monomial.
class TruncatedOperator {
 public:
  explicit TruncatedOperator(Eigen::MatrixXcd entries,
                             std::optional<ExactBand> band = std::nullopt);

  int size() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& entries() const { return mat_; }
  Complex entry(int m, int n) const { return mat_(m, n); }
  const std::optional<ExactBand>& exact_band() const { return band_; }

 private:
  Eigen::MatrixXcd mat_;
  std::optional<ExactBand> band_;
};

/// Multiplication-then-projection matrix of a two-sided symbol:
/// entry(m, n) = phi_hat(m - n). Carries the symbol band as certified.
TruncatedOperator toeplitz_from_symbol(const LaurentSeries& phi, int n);

/// Upper-triangular matrix entry(m, j) = gamma[j - m] for j >= m.
/// gamma.size() must be at least n (TableTooShort otherwise).
TruncatedOperator gamma_upper_triangular(const std::vector<Complex>& gamma,
                                         int n);

/// Matrix-vector action. v is zero-padded to size N; longer inputs are
/// rejected rather than silently clipped.
HardyCoeffs apply(const TruncatedOperator& t, const HardyCoeffs& v);

/// (N-1) x (N-1) corner B[m][n] = A[m+1][n+1]; the compression S*TS at
/// truncation. DimensionTooSmall for N < 2. Certified band is unchanged.
TruncatedOperator shift_compress(const TruncatedOperator& t);

struct ToeplitzCheck {
  bool is_toeplitz;
  double max_deviation;  // max |A[m+1][n+1] - A[m][n]|
  int at_m;              // base position of the worst pair
  int at_n;
};

/// Scan every adjacent diagonal pair; Toeplitz iff the worst deviation
/// stays within tol.
ToeplitzCheck is_toeplitz_algebraic(const TruncatedOperator& t, double tol);

/// Mean along each diagonal, skipping the first `margin` columns (and
/// rows, on the lower side). Returns the band
/// [-(N-1-margin), N-1-margin]. Requires 0 <= margin < N/2.
LaurentSeries diagonal_symbol_recovery(const TruncatedOperator& t, int margin);

/// Conjugate transpose; a certified band reflects to [-hi, -lo].
TruncatedOperator adjoint(const TruncatedOperator& t);

// ---------------------------------------------------------------------
// Symbol specifications, the constructors the CLI and the tests share.

struct TrigPolynomial {
  LaurentSeries phi;
};

/// Ratio b/a of analytic polynomials with a bounded away from zero on
/// the circle. Realized as the multiplication matrix of the analytic
/// power series b/a.
struct SmirnovRatio {
  HardyCoeffs b;  // numerator
  HardyCoeffs a;  // denominator, a(0) != 0 and nonvanishing on the circle
};

struct GammaWeights {
  std::vector<Complex> gamma;
};

using SymbolSpec = std::variant<TrigPolynomial, SmirnovRatio, GammaWeights>;

struct SmirnovValidation {
  double min_abs_a;       // min |a| over the validation grid
  double canonical_dev;   // max | |a|^2 + |b|^2 - 1 | over the grid
  bool unit_norm;         // canonical_dev < 1e-8
};

/// Grid check of the denominator and of the canonical normalization.
/// Throws DenominatorVanishes when |a| dips to eps_zero or below.
SmirnovValidation validate_smirnov(const SmirnovRatio& s, const CircleGrid& g,
                                   double eps_zero);

/// First `count` power-series coefficients of b/a (long division).
HardyCoeffs smirnov_symbol_prefix(const SmirnovRatio& s, int count);

/// Build the n-truncation a SymbolSpec describes. Smirnov ratios are
/// validated on a 2n+1 point grid first.
TruncatedOperator realize(const SymbolSpec& symbol, int n);

}  // namespace hardysym
