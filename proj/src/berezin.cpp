#include "hardysym/berezin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hardysym {

KernelVector kernel_at(Complex w, int n) {
  if (n < 1) throw std::invalid_argument("kernel needs at least one term");
  const double r2 = std::norm(w);
  if (r2 >= 1.0)
    throw DiskViolation("kernel point has |w| = " + std::to_string(std::abs(w)) +
                        ", needs |w| < 1");
  KernelVector k;
  k.w = w;
  k.coeffs.resize(static_cast<std::size_t>(n));
  const Complex cw = std::conj(w);
  k.coeffs[0] = Complex(1.0);
  for (int j = 1; j < n; ++j)
    k.coeffs[static_cast<std::size_t>(j)] =
        cw * k.coeffs[static_cast<std::size_t>(j - 1)];
  k.tail_bound = std::pow(r2, n) / (1.0 - r2);
  return k;
}

BerezinValue berezin_transform(const TruncatedOperator& t, Complex w) {
  const KernelVector k = kernel_at(w, t.size());
  const HardyCoeffs kv(k.coeffs);
  const HardyCoeffs tk = apply(t, kv);
  const Complex pairing = inner_product(tk, kv);
  return BerezinValue{(1.0 - std::norm(w)) * pairing, k.tail_bound};
}

std::vector<BerezinRow> berezin_sweep(const TruncatedOperator& t,
                                      double radius, int count) {
  if (count < 1) throw std::invalid_argument("sweep needs at least one point");
  if (radius < 0.0 || radius >= 1.0)
    throw DiskViolation("sweep radius must lie in [0, 1)");
  std::vector<BerezinRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / count;
    const Complex w = std::polar(radius, theta);
    const BerezinValue v = berezin_transform(t, w);
    rows.push_back(BerezinRow{w, v.value, v.tail_bound});
  }
  return rows;
}

}  // namespace hardysym
