#include "hardysym/unbounded.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hardysym {

namespace {

// Compensated accumulation; complex add/sub is componentwise, so the
// classic scheme carries over unchanged.
struct KahanSum {
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  void add(Complex v) {
    const Complex y = v - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

struct KahanReal {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

long long next_pow2(long long v) {
  long long p = 1;
  while (p < v) p <<= 1;
  return p;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double factorial_double(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

CoeffRule alternating_harmonic_rule() {
  return CoeffRule{"alternating-harmonic",
                   [](long long n) {
                     if (n < 1) return Complex(0.0);
                     const double v = 1.0 / static_cast<double>(n);
                     return Complex(n % 2 == 0 ? v : -v, 0.0);
                   },
                   std::nullopt};
}

CoeffRule geometric_rule(double ratio) {
  return CoeffRule{"geometric",
                   [ratio](long long n) {
                     return Complex(std::pow(ratio, static_cast<double>(n)),
                                    0.0);
                   },
                   std::nullopt};
}

CoeffRule delta_rule(long long k, Complex c) {
  if (k < 0) throw std::invalid_argument("delta index must be >= 0");
  return CoeffRule{"delta-" + std::to_string(k),
                   [k, c](long long n) { return n == k ? c : Complex(0.0); },
                   k};
}

CoeffRule rule_from_table(std::string name, std::vector<Complex> table) {
  long long end = -1;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] != Complex(0.0)) end = static_cast<long long>(i);
  auto shared = std::make_shared<std::vector<Complex>>(std::move(table));
  return CoeffRule{std::move(name),
                   [shared](long long n) {
                     if (n < 0 || n >= static_cast<long long>(shared->size()))
                       return Complex(0.0);
                     return (*shared)[static_cast<std::size_t>(n)];
                   },
                   end >= 0 ? std::optional<long long>(end) : std::nullopt};
}

CoeffRule shift_rule(const CoeffRule& rule) {
  return CoeffRule{rule.name + "-shifted",
                   [a = rule.a](long long n) {
                     if (n < 1) return Complex(0.0);
                     return static_cast<double>(n) * a(n - 1);
                   },
                   rule.support_end ? std::optional<long long>(*rule.support_end + 1)
                                    : std::nullopt};
}

CoeffRule coshift_rule(const CoeffRule& rule) {
  return CoeffRule{rule.name + "-coshifted",
                   [a = rule.a](long long m) {
                     return a(m + 1) / static_cast<double>(m + 1);
                   },
                   rule.support_end
                       ? std::optional<long long>(std::max<long long>(
                             0, *rule.support_end - 1))
                       : std::nullopt};
}

const char* to_string(DomainDecision d) {
  switch (d) {
    case DomainDecision::in_domain: return "in_domain";
    case DomainDecision::out_of_domain: return "out_of_domain";
    default: return "inconclusive";
  }
}

DomainVerdict domain_membership(const CoeffRule& rule,
                                const DomainParams& params) {
  if (params.k_max < 4) throw std::invalid_argument("k_max must be >= 4");
  if (params.window < 2) throw std::invalid_argument("window must be >= 2");

  // Finite support: beyond the support every sample is identical, so a
  // short schedule gives the same verdict without the dead loop.
  long long k_max = params.k_max;
  if (rule.support_end)
    k_max = std::min(k_max, next_pow2(std::max<long long>(
                                64, 2 * (*rule.support_end + 1))));

  std::set<long long> points;
  std::vector<long long> levels;
  for (long long k = 1; k <= k_max; k <<= 1) {
    points.insert(k);
    points.insert(k + 1);
    levels.push_back(k);
  }

  DomainVerdict v;
  v.params = params;
  KahanSum acc;
  auto next = points.begin();
  for (long long n = 0; next != points.end(); ++n) {
    acc.add(rule.a(n));
    if (n == *next) {
      v.samples.push_back(DomainSample{n, acc.sum, std::abs(rule.a(n))});
      ++next;
    }
  }

  // Per-level oscillation: worst pairwise spread among the four samples
  // of two adjacent doubling levels.
  auto sample_at = [&](long long k) -> const DomainSample& {
    const auto it = std::lower_bound(
        v.samples.begin(), v.samples.end(), k,
        [](const DomainSample& s, long long key) { return s.k < key; });
    return *it;
  };
  for (std::size_t li = 1; li < levels.size(); ++li) {
    const Complex s[4] = {sample_at(levels[li - 1]).s,
                          sample_at(levels[li - 1] + 1).s,
                          sample_at(levels[li]).s, sample_at(levels[li] + 1).s};
    double osc = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        osc = std::max(osc, std::abs(s[i] - s[j]));
    v.oscillation_track.push_back(osc);
  }

  const std::size_t w =
      std::min<std::size_t>(v.samples.size(), static_cast<std::size_t>(params.window));
  v.window_oscillation = 0.0;
  double term_peak = 0.0;
  double s_peak = 0.0;
  for (std::size_t i = v.samples.size() - w; i < v.samples.size(); ++i) {
    term_peak = std::max(term_peak, v.samples[i].term_abs);
    s_peak = std::max(s_peak, std::abs(v.samples[i].s));
    for (std::size_t j = i + 1; j < v.samples.size(); ++j)
      v.window_oscillation = std::max(
          v.window_oscillation, std::abs(v.samples[i].s - v.samples[j].s));
  }
  v.terms_vanish = term_peak <= params.term_threshold;

  bool osc_stuck = v.oscillation_track.size() >= 4;
  if (osc_stuck) {
    const std::size_t last = v.oscillation_track.size() - 1;
    for (std::size_t i = last - 2; i <= last; ++i)
      osc_stuck = osc_stuck &&
                  v.oscillation_track[i] >= 0.9 * v.oscillation_track[i - 1];
  }
  const bool grew = s_peak > params.growth_bound || !std::isfinite(s_peak);

  if (v.terms_vanish && v.window_oscillation <= params.tau) {
    v.decision = DomainDecision::in_domain;
  } else if (!v.terms_vanish && (osc_stuck || grew)) {
    v.decision = DomainDecision::out_of_domain;
    std::ostringstream os;
    os << "term magnitude " << fmt(term_peak) << " stays above "
       << fmt(params.term_threshold);
    if (grew)
      os << "; partial sum reached " << fmt(s_peak);
    else
      os << "; oscillation " << fmt(v.oscillation_track.back())
         << " did not decrease across the last three doublings";
    v.witness = os.str();
  } else {
    v.decision = DomainDecision::inconclusive;
  }
  return v;
}

namespace {

// One image coefficient d_m, n running upward from n_start. Exact
// per-term denominators for short finite-support rules, otherwise a
// weight recurrence w_n = w_{n-1} * n / (n+m).
Complex sum_d_m(const CoeffRule& rule, int m, long long n_start,
                long long k_max, double* max_abs_seen) {
  KahanSum acc;
  double peak = 0.0;
  if (rule.support_end && *rule.support_end <= 100000) {
    // Fresh integer-product denominator per term: exact while the
    // product stays under 2^53, correctly rounded past it.
    for (long long n = n_start; n + m <= *rule.support_end; ++n) {
      double denom = 1.0;
      for (int i = 1; i <= m; ++i) denom *= static_cast<double>(n + i);
      const Complex a = rule.a(n + m);
      peak = std::max(peak, std::abs(a));
      acc.add(a / denom);
    }
  } else {
    double w = 1.0 / factorial_double(m);  // w_0 = 1/((0+1)...(0+m))
    for (long long n = 0; n <= k_max; ++n) {
      if (n > 0) w *= static_cast<double>(n) / static_cast<double>(n + m);
      if (n < n_start) continue;
      const Complex a = rule.a(n + m);
      peak = std::max(peak, std::abs(a));
      acc.add(a * w);
    }
  }
  if (max_abs_seen) *max_abs_seen = std::max(*max_abs_seen, peak);
  return acc.sum;
}

}  // namespace

FactorialImage factorial_apply(const CoeffRule& rule, int m_max,
                               long long k_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  DomainParams dp;
  dp.k_max = std::max<long long>(4, k_max);
  FactorialImage img;
  img.verdict = domain_membership(rule, dp);
  if (img.verdict.decision == DomainDecision::out_of_domain)
    throw DomainRefused("series sum a_n judged divergent, d_0 refused: " +
                        img.verdict.witness);
  img.k_used = k_max;
  img.d.resize(static_cast<std::size_t>(m_max + 1));
  img.tail.resize(static_cast<std::size_t>(m_max + 1));
  img.tail_rigorous.resize(static_cast<std::size_t>(m_max + 1));
  double max_abs = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    // Past m = 3 the majorant tail dives fast enough that the full
    // horizon is wasted work; cut where (1+K)^{1-m}/(m-1) < 1e-16.
    long long horizon = k_max;
    if (m >= 4) {
      const double k_need =
          std::pow(1e-16 * (m - 1), 1.0 / (1.0 - m)) - 1.0;
      if (std::isfinite(k_need) && k_need < static_cast<double>(k_max))
        horizon = std::max<long long>(64, static_cast<long long>(k_need) + 1);
    }
    img.d[static_cast<std::size_t>(m)] =
        sum_d_m(rule, m, 0, horizon, &max_abs);
    if (m >= 2) {
      img.tail[static_cast<std::size_t>(m)] =
          max_abs * std::pow(1.0 + static_cast<double>(horizon), 1.0 - m) /
          (m - 1);
      img.tail_rigorous[static_cast<std::size_t>(m)] = true;
    } else {
      img.tail[static_cast<std::size_t>(m)] = img.verdict.window_oscillation;
      img.tail_rigorous[static_cast<std::size_t>(m)] = false;
    }
  }
  return img;
}

SplitDm split_d_m(const CoeffRule& rule, int m, long long k_max) {
  if (m < 1) throw std::invalid_argument("split needs m >= 1");
  SplitDm s;
  s.s_m = rule.a(m) / factorial_double(m);
  s.t_m = sum_d_m(rule, m, 1, k_max, nullptr);
  return s;
}

std::vector<CmRow> c_m_table(int m_max, double tail_tol) {
  if (m_max < 2) throw std::invalid_argument("table starts at m = 2");
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tail_tol must be > 0");
  std::vector<CmRow> rows;
  rows.reserve(static_cast<std::size_t>(m_max - 1));
  KahanReal cum;
  for (int m = 2; m <= m_max; ++m) {
    // Midpoint correction: sum to n_stop, then add the integral from
    // n_stop + 1/2 of (1+x)^{-m}; the midpoint-rule error is below
    // (m/24) (n_stop + 3/2)^{-(m+1)}, pushed under tail_tol.
    const double need =
        std::pow(static_cast<double>(m) / (24.0 * tail_tol), 1.0 / (m + 1));
    const long long n_stop =
        std::max<long long>(16, static_cast<long long>(std::ceil(need)));
    KahanReal sum;
    for (long long n = 1; n <= n_stop; ++n)
      sum.add(std::pow(static_cast<double>(n + 1), -static_cast<double>(m)));
    const double correction =
        std::pow(static_cast<double>(n_stop) + 1.5, 1.0 - m) / (m - 1);
    const double c = sum.sum + correction;
    const double bound = 1.0 / (m - 1);
    if (!(c <= bound))
      throw std::logic_error("c_m exceeded its 1/(m-1) bound at m = " +
                             std::to_string(m));
    cum.add(c * c);
    rows.push_back(CmRow{m, c, bound, cum.sum});
  }
  return rows;
}

GammaSequence make_gamma(std::function<Complex(long long)> fn,
                         long long horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  GammaSequence g;
  g.gamma = std::move(fn);
  g.horizon = horizon;
  g.growth_ok = true;
  g.growth_weak_ok = true;
  g.first_violation = -1;
  double prev = std::abs(g.gamma(0));
  for (long long n = 0; n < horizon; ++n) {
    const double next = std::abs(g.gamma(n + 1));
    const double required = static_cast<double>(n + 1) * prev;
    if (!std::isfinite(next) || !std::isfinite(required)) {
      g.horizon = n;  // overflow ends the checkable range
      break;
    }
    if (!(next > required)) {
      g.growth_weak_ok = g.growth_weak_ok && next == required;
      if (g.growth_ok) g.first_violation = n;
      g.growth_ok = false;
      if (!g.growth_weak_ok) break;
    }
    prev = next;
  }
  return g;
}

CoeffRule gamma_shift_rule(const CoeffRule& rule, const GammaSequence& g) {
  return CoeffRule{rule.name + "-shifted",
                   [a = rule.a, gm = g.gamma](long long n) {
                     if (n < 1) return Complex(0.0);
                     return a(n - 1) * gm(n) / gm(n - 1);
                   },
                   rule.support_end ? std::optional<long long>(*rule.support_end + 1)
                                    : std::nullopt};
}

CoeffRule gamma_coshift_rule(const CoeffRule& rule, const GammaSequence& g) {
  return CoeffRule{rule.name + "-coshifted",
                   [a = rule.a, gm = g.gamma](long long m) {
                     return a(m + 1) * gm(m) / gm(m + 1);
                   },
                   rule.support_end
                       ? std::optional<long long>(std::max<long long>(
                             0, *rule.support_end - 1))
                       : std::nullopt};
}

DomainVerdict gamma_domain_membership(const GammaSequence& g,
                                      const CoeffRule& rule,
                                      const DomainParams& params,
                                      bool allow_boundary) {
  if (!g.growth_ok && !(allow_boundary && g.growth_weak_ok))
    throw GrowthViolation(
        "weight growth |gamma_{n+1}| > (n+1)|gamma_n| fails first at n = " +
        std::to_string(g.first_violation));
  CoeffRule abs_rule{rule.name + "-abs",
                     [a = rule.a](long long n) {
                       return Complex(std::abs(a(n)), 0.0);
                     },
                     rule.support_end};
  DomainVerdict v = domain_membership(abs_rule, params);
  if (v.decision != DomainDecision::in_domain) {
    // The growth condition gives sufficiency through absolute
    // convergence only; anything short of that proves nothing.
    v.decision = DomainDecision::inconclusive;
    v.witness.clear();
  }
  return v;
}

SmirnovDomainResult smirnov_domain_test(const SmirnovRatio& s,
                                        const HardyCoeffs& f,
                                        const CircleGrid& grid,
                                        double eps_zero, double bound,
                                        bool check_canonical) {
  const auto av = evaluate_on_grid(s.a, grid);
  const auto bv = evaluate_on_grid(s.b, grid);
  const auto fv = evaluate_on_grid(f, grid);
  double min_a = std::numeric_limits<double>::infinity();
  for (const Complex& v : av) min_a = std::min(min_a, std::abs(v));
  if (min_a <= eps_zero)
    throw DenominatorVanishes("min |a| on grid = " + fmt(min_a) +
                              " under eps_zero = " + fmt(eps_zero));
  KahanReal norm_sq;
  for (std::size_t j = 0; j < fv.size(); ++j)
    norm_sq.add(std::norm(bv[j] / av[j] * fv[j]));
  SmirnovDomainResult r;
  r.norm = std::sqrt(norm_sq.sum / static_cast<double>(grid.size()));
  r.bound = bound;
  r.member = r.norm <= bound;
  if (check_canonical) {
    double dev = 0.0;
    for (std::size_t j = 0; j < av.size(); ++j)
      dev = std::max(dev,
                     std::abs(std::norm(av[j]) + std::norm(bv[j]) - 1.0));
    r.canonical_dev = dev;
  }
  return r;
}

namespace {

void tally(ConditionOutcome& out, DomainDecision d, const std::string& who) {
  switch (d) {
    case DomainDecision::in_domain:
      ++out.pass_count;
      break;
    case DomainDecision::out_of_domain:
      ++out.fail_count;
      if (out.witness.empty()) out.witness = who + " left the domain";
      break;
    default:
      ++out.inconclusive_count;
      break;
  }
}

void check_compression(ShiftAlgebraReport& rep, const TruncatedOperator& t,
                       double tol) {
  const TruncatedOperator c = shift_compress(t);
  double dev = 0.0;
  for (int m = 0; m < c.size(); ++m)
    for (int n = 0; n < c.size(); ++n)
      dev = std::max(dev, std::abs(c.entry(m, n) - t.entry(m, n)));
  rep.compress_dev = dev;
  if (dev <= tol) {
    ++rep.compress_identity.pass_count;
  } else {
    ++rep.compress_identity.fail_count;
    rep.compress_identity.witness =
        "compression deviates by " + fmt(dev);
  }
}

}  // namespace

ShiftAlgebraReport shift_algebra_probe_toeplitz(
    const TruncatedOperator& t, const std::vector<HardyCoeffs>& samples,
    double tol) {
  ShiftAlgebraReport rep;
  rep.family = "toeplitz";
  rep.samples = static_cast<int>(samples.size());
  for (const HardyCoeffs& f : samples) {
    // The truncation's domain is the whole space, so both shift
    // conditions hold by construction; counted, not recomputed.
    ++rep.shift_domain.pass_count;
    if (std::abs(f.at(0)) == 0.0) ++rep.coshift_domain.pass_count;
  }
  check_compression(rep, t, tol);
  return rep;
}

ShiftAlgebraReport shift_algebra_probe_factorial(
    const std::vector<CoeffRule>& samples, int n, const DomainParams& params,
    double tol) {
  ShiftAlgebraReport rep;
  rep.family = "factorial";
  rep.samples = static_cast<int>(samples.size());
  for (const CoeffRule& r : samples) {
    tally(rep.shift_domain, domain_membership(shift_rule(r), params).decision,
          "z (" + r.name + ")");
    if (r.a(0) == Complex(0.0))
      tally(rep.coshift_domain,
            domain_membership(coshift_rule(r), params).decision,
            "backward shift of " + r.name);
  }
  std::vector<Complex> weights(static_cast<std::size_t>(n));
  double w = 1.0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) w *= i;
    weights[static_cast<std::size_t>(i)] = Complex(w, 0.0);
  }
  check_compression(rep, gamma_upper_triangular(weights, n), tol);
  return rep;
}

ShiftAlgebraReport shift_algebra_probe_gamma(
    const GammaSequence& g, const std::vector<CoeffRule>& samples, int n,
    const DomainParams& params, double tol, bool allow_boundary) {
  ShiftAlgebraReport rep;
  rep.family = "gamma";
  rep.samples = static_cast<int>(samples.size());

  // The weight sequence is only declared up to its horizon, so any rule
  // that evaluates weight ratios gets a schedule clamped to it. Short
  // horizons then yield inconclusive rather than a fake verdict.
  DomainParams clamped = params;
  clamped.k_max =
      std::max<long long>(4, std::min<long long>(params.k_max, g.horizon - 1));

  for (const CoeffRule& r : samples) {
    tally(rep.shift_domain,
          gamma_domain_membership(g, gamma_shift_rule(r, g), clamped,
                                  allow_boundary)
              .decision,
          "z (" + r.name + ")");
    if (r.a(0) == Complex(0.0)) {
      // Growth makes the backward-shift direction one sided: the
      // coshifted coefficients are dominated by |a_{m+1}|/(m+1), which
      // never touches the weights, so the full schedule applies.
      CoeffRule majorant{
          r.name + "-coshift-majorant",
          [a = r.a](long long m) {
            return Complex(std::abs(a(m + 1)) / static_cast<double>(m + 1),
                           0.0);
          },
          r.support_end ? std::optional<long long>(
                              std::max<long long>(0, *r.support_end - 1))
                        : std::nullopt};
      tally(rep.coshift_domain,
            gamma_domain_membership(g, majorant, params, allow_boundary)
                .decision,
            "backward shift of " + r.name);
    }
  }
  std::vector<Complex> weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    weights[static_cast<std::size_t>(i)] = g.gamma(i);
  check_compression(rep, gamma_upper_triangular(weights, n), tol);
  return rep;
}

ShiftAlgebraReport shift_algebra_probe_smirnov(
    const SmirnovRatio& s, const std::vector<HardyCoeffs>& polys, int n,
    const CircleGrid& grid, double tol) {
  ShiftAlgebraReport rep;
  rep.family = "smirnov";
  rep.samples = static_cast<int>(polys.size());
  const double eps = 1e-9;
  for (const HardyCoeffs& q : polys) {
    // Samples live on the dense set a * polynomial. The shifted sample
    // a (z q) keeps the same shape; the backward shift of a (z q) is
    // a q again, both testable through the membership oracle.
    const HardyCoeffs f = multiply(s.a, q);
    const auto fwd = smirnov_domain_test(s, shifted_up(f, 1), grid, eps);
    if (fwd.member)
      ++rep.shift_domain.pass_count;
    else {
      ++rep.shift_domain.fail_count;
      if (rep.shift_domain.witness.empty())
        rep.shift_domain.witness =
            "z a q escaped the bound, norm " + fmt(fwd.norm);
    }
    const auto back = smirnov_domain_test(s, f, grid, eps);
    if (back.member)
      ++rep.coshift_domain.pass_count;
    else {
      ++rep.coshift_domain.fail_count;
      if (rep.coshift_domain.witness.empty())
        rep.coshift_domain.witness =
            "backward shift escaped the bound, norm " + fmt(back.norm);
    }
  }
  check_compression(rep, realize(SymbolSpec(s), n), tol);
  return rep;
}

}  // namespace hardysym
