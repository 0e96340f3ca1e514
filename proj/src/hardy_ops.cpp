#include "hardysym/hardy_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardysym {

TruncatedOperator::TruncatedOperator(Eigen::MatrixXcd entries,
                                     std::optional<ExactBand> band)
    : mat_(std::move(entries)), band_(band) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("operator matrix must be square");
  if (mat_.rows() < 1)
    throw std::invalid_argument("operator needs at least one row");
  if (band_ && band_->lo > band_->hi)
    throw std::invalid_argument("certified band is empty");
}

TruncatedOperator toeplitz_from_symbol(const LaurentSeries& phi, int n) {
  if (n < 1) throw std::invalid_argument("truncation size must be >= 1");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j) a(m, j) = phi.at(m - j);
  return TruncatedOperator(std::move(a), ExactBand{phi.n_min(), phi.n_max()});
}

TruncatedOperator gamma_upper_triangular(const std::vector<Complex>& gamma,
                                         int n) {
  if (n < 1) throw std::invalid_argument("truncation size must be >= 1");
  if (static_cast<int>(gamma.size()) < n)
    throw TableTooShort("weight table has " + std::to_string(gamma.size()) +
                        " entries, truncation needs " + std::to_string(n));
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < n; ++m)
    for (int j = m; j < n; ++j) a(m, j) = gamma[static_cast<std::size_t>(j - m)];
  // The weights sit on superdiagonals, so within the truncation the
  // matrix is banded in [-(n-1), 0].
  return TruncatedOperator(std::move(a), ExactBand{-(n - 1), 0});
}

HardyCoeffs apply(const TruncatedOperator& t, const HardyCoeffs& v) {
  const int n = t.size();
  if (v.size() > n)
    throw std::invalid_argument("input has " + std::to_string(v.size()) +
                                " coefficients, truncation holds " +
                                std::to_string(n));
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < v.size(); ++i) x(i) = v.at(i);
  Eigen::VectorXcd y = t.entries() * x;
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = y(i);
  return HardyCoeffs(std::move(out));
}

TruncatedOperator shift_compress(const TruncatedOperator& t) {
  const int n = t.size();
  if (n < 2)
    throw DimensionTooSmall("cannot compress a 1 x 1 truncation");
  Eigen::MatrixXcd b = t.entries().block(1, 1, n - 1, n - 1);
  return TruncatedOperator(std::move(b), t.exact_band());
}

ToeplitzCheck is_toeplitz_algebraic(const TruncatedOperator& t, double tol) {
  const int n = t.size();
  ToeplitzCheck r{true, 0.0, 0, 0};
  for (int m = 0; m + 1 < n; ++m) {
    for (int j = 0; j + 1 < n; ++j) {
      const double dev = std::abs(t.entry(m + 1, j + 1) - t.entry(m, j));
      if (dev > r.max_deviation) {
        r.max_deviation = dev;
        r.at_m = m;
        r.at_n = j;
      }
    }
  }
  r.is_toeplitz = r.max_deviation <= tol;
  return r;
}

LaurentSeries diagonal_symbol_recovery(const TruncatedOperator& t,
                                       int margin) {
  const int n = t.size();
  if (margin < 0 || 2 * margin >= n)
    throw std::invalid_argument("margin must satisfy 0 <= margin < N/2");
  const int reach = n - 1 - margin;
  std::vector<Complex> out(static_cast<std::size_t>(2 * reach + 1),
                           Complex(0.0));
  for (int k = -reach; k <= reach; ++k) {
    // entries (m + k, m); the first margin columns and rows are skipped
    const int m_lo = std::max(margin, -k);
    const int m_hi = std::min(n - 1, n - 1 - k);
    Complex acc(0.0);
    int count = 0;
    for (int m = m_lo; m <= m_hi; ++m) {
      acc += t.entry(m + k, m);
      ++count;
    }
    out[static_cast<std::size_t>(k + reach)] =
        acc / static_cast<double>(count);
  }
  return LaurentSeries(-reach, std::move(out));
}

TruncatedOperator adjoint(const TruncatedOperator& t) {
  std::optional<ExactBand> band;
  if (t.exact_band())
    band = ExactBand{-t.exact_band()->hi, -t.exact_band()->lo};
  Eigen::MatrixXcd a = t.entries().adjoint();
  return TruncatedOperator(std::move(a), band);
}

SmirnovValidation validate_smirnov(const SmirnovRatio& s, const CircleGrid& g,
                                   double eps_zero) {
  const auto av = evaluate_on_grid(s.a, g);
  const auto bv = evaluate_on_grid(s.b, g);
  double min_a = std::abs(av.front());
  double dev = 0.0;
  for (int j = 0; j < g.size(); ++j) {
    const double aa = std::abs(av[static_cast<std::size_t>(j)]);
    min_a = std::min(min_a, aa);
    const double unit =
        std::norm(av[static_cast<std::size_t>(j)]) +
        std::norm(bv[static_cast<std::size_t>(j)]);
    dev = std::max(dev, std::abs(unit - 1.0));
  }
  if (min_a <= eps_zero)
    throw DenominatorVanishes("denominator reaches |a| = " +
                              std::to_string(min_a) + " on the grid");
  return SmirnovValidation{min_a, dev, dev < 1e-8};
}

HardyCoeffs smirnov_symbol_prefix(const SmirnovRatio& s, int count) {
  if (count < 1) throw std::invalid_argument("need at least one coefficient");
  if (s.a.at(0) == Complex(0.0))
    throw DenominatorVanishes("denominator has a(0) = 0");
  std::vector<Complex> phi(static_cast<std::size_t>(count), Complex(0.0));
  const Complex a0 = s.a.at(0);
  for (int n = 0; n < count; ++n) {
    Complex acc = s.b.at(n);
    for (int k = 0; k < n; ++k)
      acc -= phi[static_cast<std::size_t>(k)] * s.a.at(n - k);
    phi[static_cast<std::size_t>(n)] = acc / a0;
  }
  return HardyCoeffs(std::move(phi));
}

TruncatedOperator realize(const SymbolSpec& spec, int n) {
  if (std::holds_alternative<TrigPolynomial>(spec)) {
    return toeplitz_from_symbol(std::get<TrigPolynomial>(spec).phi, n);
  }
  if (std::holds_alternative<SmirnovRatio>(spec)) {
    const auto& s = std::get<SmirnovRatio>(spec);
    const CircleGrid g(2 * n + 1);
    validate_smirnov(s, g, 1e-9);
    const HardyCoeffs phi = smirnov_symbol_prefix(s, n);
    return toeplitz_from_symbol(phi.as_series(), n);
  }
  return gamma_upper_triangular(std::get<GammaWeights>(spec).gamma, n);
}

}  // namespace hardysym
