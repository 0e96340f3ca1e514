#include "hardysym/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardysym {

CircleGrid::CircleGrid(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("grid needs at least one point");
}

double CircleGrid::theta(int j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) /
         static_cast<double>(m_);
}

LaurentSeries::LaurentSeries(int n_min, std::vector<Complex> coeffs)
    : n_min_(n_min), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("series needs a nonempty coefficient table");
}

LaurentSeries LaurentSeries::zero() { return LaurentSeries(0, {Complex(0.0)}); }

LaurentSeries LaurentSeries::monomial(int n, Complex c) {
  return LaurentSeries(n, {c});
}

Complex LaurentSeries::at(int n) const {
  if (n < n_min_ || n > n_max()) return Complex(0.0);
  return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

double LaurentSeries::norm() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

HardyCoeffs::HardyCoeffs(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {}

HardyCoeffs HardyCoeffs::monomial(int n, Complex c) {
  if (n < 0) throw std::invalid_argument("monomial index must be >= 0");
  std::vector<Complex> v(static_cast<std::size_t>(n) + 1, Complex(0.0));
  v.back() = c;
  return HardyCoeffs(std::move(v));
}

Complex HardyCoeffs::at(int n) const {
  if (n < 0 || n >= size()) return Complex(0.0);
  return coeffs_[static_cast<std::size_t>(n)];
}

int HardyCoeffs::degree() const {
  for (int n = size() - 1; n >= 0; --n)
    if (coeffs_[static_cast<std::size_t>(n)] != Complex(0.0)) return n;
  return -1;
}

double HardyCoeffs::norm_sq() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return s;
}

double HardyCoeffs::norm() const { return std::sqrt(norm_sq()); }

LaurentSeries HardyCoeffs::as_series() const {
  if (coeffs_.empty()) return LaurentSeries::zero();
  return LaurentSeries(0, coeffs_);
}

std::vector<Complex> evaluate_on_grid(const LaurentSeries& s,
                                      const CircleGrid& g) {
  std::vector<Complex> out(static_cast<std::size_t>(g.size()));
  const auto& c = s.coeffs();
  for (int j = 0; j < g.size(); ++j) {
    const double theta = g.theta(j);
    const Complex step = std::polar(1.0, theta);
    Complex zn = std::polar(1.0, static_cast<double>(s.n_min()) * theta);
    Complex acc(0.0);
    for (const Complex& cn : c) {
      acc += cn * zn;
      zn *= step;
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

std::vector<Complex> evaluate_on_grid(const HardyCoeffs& f,
                                      const CircleGrid& g) {
  return evaluate_on_grid(f.as_series(), g);
}

LaurentSeries coeffs_from_grid(const std::vector<Complex>& values, int n_min,
                               int n_max, const CircleGrid& g) {
  if (n_min > n_max) throw std::invalid_argument("empty band requested");
  if (static_cast<int>(values.size()) != g.size())
    throw std::invalid_argument("value table does not match grid size");
  const int width = n_max - n_min + 1;
  if (g.size() < width)
    throw BandTooWide("band width " + std::to_string(width) +
                      " exceeds grid size " + std::to_string(g.size()));
  std::vector<Complex> coeffs(static_cast<std::size_t>(width));
  const double inv_m = 1.0 / static_cast<double>(g.size());
  for (int n = n_min; n <= n_max; ++n) {
    Complex acc(0.0);
    for (int j = 0; j < g.size(); ++j) {
      acc += values[static_cast<std::size_t>(j)] *
             std::polar(1.0, -static_cast<double>(n) * g.theta(j));
    }
    coeffs[static_cast<std::size_t>(n - n_min)] = acc * inv_m;
  }
  return LaurentSeries(n_min, std::move(coeffs));
}

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = a.n_min() + b.n_min();
  const int hi = a.n_max() + b.n_max();
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1), Complex(0.0));
  for (int i = a.n_min(); i <= a.n_max(); ++i) {
    const Complex ai = a.at(i);
    if (ai == Complex(0.0)) continue;
    for (int j = b.n_min(); j <= b.n_max(); ++j)
      out[static_cast<std::size_t>(i + j - lo)] += ai * b.at(j);
  }
  return LaurentSeries(lo, std::move(out));
}

HardyCoeffs multiply(const HardyCoeffs& a, const HardyCoeffs& b) {
  if (a.size() == 0 || b.size() == 0) return HardyCoeffs();
  std::vector<Complex> out(static_cast<std::size_t>(a.size() + b.size() - 1),
                           Complex(0.0));
  for (int i = 0; i < a.size(); ++i) {
    const Complex ai = a.at(i);
    if (ai == Complex(0.0)) continue;
    for (int j = 0; j < b.size(); ++j)
      out[static_cast<std::size_t>(i + j)] += ai * b.at(j);
  }
  return HardyCoeffs(std::move(out));
}

Complex inner_product(const HardyCoeffs& a, const HardyCoeffs& b) {
  const int n = std::min(a.size(), b.size());
  Complex acc(0.0);
  for (int i = 0; i < n; ++i) acc += a.at(i) * std::conj(b.at(i));
  return acc;
}

HardyCoeffs riesz_project(const LaurentSeries& s) {
  if (s.n_max() < 0) return HardyCoeffs();
  std::vector<Complex> out(static_cast<std::size_t>(s.n_max()) + 1,
                           Complex(0.0));
  for (int n = std::max(0, s.n_min()); n <= s.n_max(); ++n)
    out[static_cast<std::size_t>(n)] = s.at(n);
  return HardyCoeffs(std::move(out));
}

HardyCoeffs shifted_up(const HardyCoeffs& f, int k) {
  if (k < 0) throw std::invalid_argument("shift exponent must be >= 0");
  if (f.size() == 0) return HardyCoeffs();
  std::vector<Complex> out(static_cast<std::size_t>(f.size() + k),
                           Complex(0.0));
  for (int i = 0; i < f.size(); ++i)
    out[static_cast<std::size_t>(i + k)] = f.at(i);
  return HardyCoeffs(std::move(out));
}

}  // namespace hardysym
