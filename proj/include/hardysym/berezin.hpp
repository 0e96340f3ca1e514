#pragma once

#include <vector>

#include "hardysym/hardy_ops.hpp"

namespace hardysym {

/// Truncated reproducing kernel at a disk point w: coefficients
/// conj(w)^n for n in [0, N-1], built by exact recurrence so
/// coeffs[n+1] = conj(w) * coeffs[n] holds bitwise. tail_bound is the
/// squared norm the truncation discards, |w|^{2N} / (1 - |w|^2).
struct KernelVector {
  Complex w;
  std::vector<Complex> coeffs;
  double tail_bound;
};

KernelVector kernel_at(Complex w, int n);

struct BerezinValue {
  Complex value;
  double tail_bound;  // kernel truncation tail, see KernelVector
};

/// Berezin transform at truncation: (1 - |w|^2) <T k_w, k_w>. Some
/// references write the adjoint form (1 - |w|^2) <k_w, T* k_w>, which
/// equals this by the sesquilinear pairing identity; only the direct
/// form is implemented. For an analytic symbol the value recovers the
/// symbol at w up to the kernel tail.
BerezinValue berezin_transform(const TruncatedOperator& t, Complex w);

struct BerezinRow {
  Complex w;
  Complex value;
  double tail_bound;
};

/// Diagnostic sweep at fixed radius over count equally spaced angles.
std::vector<BerezinRow> berezin_sweep(const TruncatedOperator& t,
                                      double radius, int count);

}  // namespace hardysym
