#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hardysym/hardy_ops.hpp"

namespace hardysym {

/// Closed-form coefficient rule n -> a_n for a normalized series.
/// Under the factorial normalization the function is f = sum a_n z^n/n!,
/// under a gamma-weight normalization f = sum a_n z^n/gamma_n. The rule
/// must be evaluable for any index up to at least 10^6. support_end is
/// the last index with a nonzero coefficient when the support is finite;
/// finite-support rules get exact term-by-term arithmetic.
struct CoeffRule {
  std::string name;
  std::function<Complex(long long)> a;
  std::optional<long long> support_end;
};

CoeffRule alternating_harmonic_rule();  // a_n = (-1)^n / n for n >= 1
CoeffRule geometric_rule(double ratio = 0.5);
CoeffRule delta_rule(long long k, Complex c = Complex(1.0));
CoeffRule rule_from_table(std::string name, std::vector<Complex> table);

/// Rule for z f under the factorial normalization: a'_n = n * a_{n-1}.
CoeffRule shift_rule(const CoeffRule& rule);
/// Rule for the backward shift of f (factorial normalization):
/// a''_m = a_{m+1} / (m+1). Meaningful as S* f when a_0 = 0.
CoeffRule coshift_rule(const CoeffRule& rule);

enum class DomainDecision { in_domain, out_of_domain, inconclusive };

struct DomainParams {
  long long k_max = 1LL << 20;   // largest partial-sum index sampled
  int window = 8;                // trailing samples judged for stability
  double tau = 1e-4;             // oscillation tolerance for in_domain
  double term_threshold = 1e-3;  // terms must fall below this to vanish
  double growth_bound = 1e12;    // |S_k| beyond this is a divergence witness
};

struct DomainSample {
  long long k;
  Complex s;        // partial sum through index k
  double term_abs;  // |a_k|
};

struct DomainVerdict {
  DomainDecision decision;
  std::vector<DomainSample> samples;      // at k = 2^j and 2^j + 1
  double window_oscillation;              // max |S_i - S_j| over the window
  std::vector<double> oscillation_track;  // per doubling level
  bool terms_vanish;
  std::string witness;  // filled for out_of_domain
  DomainParams params;
};

const char* to_string(DomainDecision d);

/// Heuristic Cauchy test on the partial sums of sum a_n. Sampling at
/// both 2^j and 2^j + 1 exposes parity-locked oscillation that a
/// power-of-two-only schedule would alias away. in_domain requires the
/// trailing window to stay within tau AND the sampled terms to vanish;
/// out_of_domain requires terms that do not vanish plus a divergence
/// witness (oscillation not decreasing across the last three doublings,
/// or a partial sum past growth_bound). Everything else is
/// inconclusive. This is a numerical heuristic, never a proof.
DomainVerdict domain_membership(const CoeffRule& rule,
                                const DomainParams& params = {});

struct FactorialImage {
  std::vector<Complex> d;         // d_0 .. d_m_max
  std::vector<double> tail;       // per-term truncation tail estimate
  std::vector<bool> tail_rigorous;  // majorant-backed for m >= 2
  long long k_used;
  DomainVerdict verdict;          // for the m = 0 series
};

/// Image coefficients of the factorial-normalized operator:
/// d_m = sum_n a_{n+m} / ((n+1)(n+2)...(n+m)). Summation is strictly
/// increasing in n with compensated accumulation; the m = 0 series is
/// conditionally convergent, so reordering is forbidden. Refuses with
/// DomainRefused when the domain verdict for sum a_n is out_of_domain.
/// Tail estimates for m >= 2 use the majorant
/// (max observed |a|) * (1+K)^{1-m}/(m-1); for m in {0, 1} the trailing
/// sample oscillation is reported instead and flagged non-rigorous.
FactorialImage factorial_apply(const CoeffRule& rule, int m_max,
                               long long k_max = 1LL << 20);

struct SplitDm {
  Complex s_m;  // a_m / m!
  Complex t_m;  // the n >= 1 remainder of d_m
};

/// Leading-term split d_m = s_m + t_m, m >= 1.
SplitDm split_d_m(const CoeffRule& rule, int m, long long k_max = 1LL << 20);

struct CmRow {
  int m;
  double c_m;            // sum_{n>=1} (n+1)^{-m}
  double bound;          // 1/(m-1)
  double cumulative_sq;  // partial sum of c_m^2 through this row
};

/// Table of the majorant constants c_m for m in [2, m_max]. Each row is
/// a truncated sum plus a midpoint-rule integral correction whose error
/// is below tail_tol (the correction keeps the row count small where a
/// bare sum would need ~1/tail_tol terms at m = 2). Throws logic_error
/// if a computed row ever exceeded its 1/(m-1) bound.
std::vector<CmRow> c_m_table(int m_max, double tail_tol = 1e-12);

struct GammaSequence {
  std::function<Complex(long long)> gamma;
  long long horizon;          // indices checked: 0 .. horizon
  bool growth_ok;             // strict |gamma_{n+1}| > (n+1)|gamma_n|
  bool growth_weak_ok;        // same with >=
  long long first_violation;  // earliest strict failure, -1 when none
};

/// Wrap a weight rule and certify the growth condition over
/// [0, horizon]. Checking stops early if the weights overflow double.
GammaSequence make_gamma(std::function<Complex(long long)> fn,
                         long long horizon);

/// Rules for z f and the backward shift under a gamma normalization:
/// a'_n = a_{n-1} gamma_n / gamma_{n-1}, a''_m = a_{m+1} gamma_m / gamma_{m+1}.
CoeffRule gamma_shift_rule(const CoeffRule& rule, const GammaSequence& g);
CoeffRule gamma_coshift_rule(const CoeffRule& rule, const GammaSequence& g);

/// Sufficiency-only domain test for gamma-normalized series: in_domain
/// when sum |a_n| passes the Cauchy heuristic, otherwise inconclusive
/// (the growth condition buys absolute-convergence sufficiency and
/// nothing more). GrowthViolation unless the strict growth check holds;
/// allow_boundary accepts the equality case (weak growth) instead.
DomainVerdict gamma_domain_membership(const GammaSequence& g,
                                      const CoeffRule& rule,
                                      const DomainParams& params = {},
                                      bool allow_boundary = false);

struct SmirnovDomainResult {
  double norm;     // discrete L2 norm of (b/a) f on the grid
  bool member;     // norm <= bound
  double bound;
  std::optional<double> canonical_dev;  // max | |a|^2+|b|^2 - 1 | if checked
};

/// Membership test for the multiplication operator with symbol b/a:
/// evaluates (b/a) f pointwise on the grid (DenominatorVanishes when a
/// dips below eps_zero) and compares the discrete L2 norm against the
/// caller's bound. At truncation the norm is always finite; the bound
/// emulates the domain constraint. check_canonical also reports the
/// worst deviation of |a|^2 + |b|^2 from 1 on the grid.
SmirnovDomainResult smirnov_domain_test(
    const SmirnovRatio& s, const HardyCoeffs& f, const CircleGrid& grid,
    double eps_zero, double bound = std::numeric_limits<double>::infinity(),
    bool check_canonical = false);

struct ConditionOutcome {
  int pass_count = 0;
  int fail_count = 0;
  int inconclusive_count = 0;
  std::string witness;  // first failure, empty otherwise
  bool holds() const { return fail_count == 0; }
};

struct ShiftAlgebraReport {
  std::string family;
  int samples;
  ConditionOutcome shift_domain;       // z f stays in the domain
  ConditionOutcome compress_identity;  // S*TS = T on the truncation
  ConditionOutcome coshift_domain;     // S* f stays in the domain, f(0) = 0
  double compress_dev;
};

/// Three-condition shift-algebra probes, one per operator family. Each
/// checks (1) shift invariance of the domain on the given samples,
/// (2) the compression identity S*TS = T on the matrix realization,
/// (3) backward-shift invariance on the samples that vanish at 0.
ShiftAlgebraReport shift_algebra_probe_toeplitz(
    const TruncatedOperator& t, const std::vector<HardyCoeffs>& samples,
    double tol);
ShiftAlgebraReport shift_algebra_probe_factorial(
    const std::vector<CoeffRule>& samples, int n, const DomainParams& params,
    double tol);
ShiftAlgebraReport shift_algebra_probe_gamma(
    const GammaSequence& g, const std::vector<CoeffRule>& samples, int n,
    const DomainParams& params, double tol, bool allow_boundary = false);
ShiftAlgebraReport shift_algebra_probe_smirnov(
    const SmirnovRatio& s, const std::vector<HardyCoeffs>& polys, int n,
    const CircleGrid& grid, double tol);

}  // namespace hardysym
