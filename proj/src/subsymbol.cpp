#include "hardysym/subsymbol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardysym {

namespace {

int effective_degree(const HardyCoeffs& f) { return std::max(f.degree(), 0); }

void check_depth(const TruncatedOperator& t, const HardyCoeffs& f,
                 int k_depth) {
  if (k_depth < 0) throw std::invalid_argument("depth must be >= 0");
  const int deg = effective_degree(f);
  if (deg + k_depth > t.size() - 1)
    throw ProbeTooDeep("deg(f) + depth = " + std::to_string(deg + k_depth) +
                       " exceeds N-1 = " + std::to_string(t.size() - 1));
}

/// Certified first output index when comparing a projected h*p product
/// against a direct application: coefficients below this index may miss
/// contributions from co-analytic h terms beyond the computed depth.
int certified_lo(const TruncatedOperator& t, int p_degree, int k_depth) {
  if (t.exact_band() && t.exact_band()->lo >= -k_depth) return 0;
  return std::max(0, p_degree - k_depth);
}

}  // namespace

LaurentSeries compute_h(const TruncatedOperator& t, const HardyCoeffs& f,
                        int k_depth) {
  check_depth(t, f, k_depth);
  const int n = t.size();
  std::vector<Complex> coeffs(static_cast<std::size_t>(k_depth + n),
                              Complex(0.0));
  const HardyCoeffs tf = apply(t, f);
  for (int j = 0; j < n; ++j)
    coeffs[static_cast<std::size_t>(k_depth + j)] = tf.at(j);
  for (int s = 1; s <= k_depth; ++s)
    coeffs[static_cast<std::size_t>(k_depth - s)] =
        apply(t, shifted_up(f, s)).at(0);
  return LaurentSeries(-k_depth, std::move(coeffs));
}

LaurentSeries compute_partial_h(const TruncatedOperator& t,
                                const HardyCoeffs& f, int n_cut) {
  return compute_h(t, f, n_cut);
}

SubSymbol sub_symbol(const TruncatedOperator& t, const HardyCoeffs& f,
                     const CircleGrid& grid, int k_depth,
                     std::optional<double> eps_zero) {
  LaurentSeries h = compute_h(t, f, k_depth);
  CircleGrid g = grid;
  bool raised = false;
  if (g.size() < h.band_width()) {
    g = CircleGrid(2 * h.band_width() + 1);
    raised = true;
  }
  const auto fv = evaluate_on_grid(f, g);
  const auto hv = evaluate_on_grid(h, g);
  double fmax = 0.0;
  for (const Complex& v : fv) fmax = std::max(fmax, std::abs(v));
  const double eps = eps_zero.value_or(1e-6 * fmax);
  std::vector<bool> mask(fv.size(), false);
  std::vector<Complex> r(fv.size(), Complex(0.0));
  bool any = false;
  for (std::size_t j = 0; j < fv.size(); ++j) {
    if (std::abs(fv[j]) > eps) {
      mask[j] = true;
      r[j] = hv[j] / fv[j];
      any = true;
    }
  }
  if (!any)
    throw AllPointsMasked("probe magnitude never exceeds eps_zero = " +
                          std::to_string(eps));
  return SubSymbol{f, std::move(h), g, std::move(r), std::move(mask), eps,
                   raised};
}

UniquenessReport uniqueness_probe(const TruncatedOperator& t,
                                  const std::vector<HardyCoeffs>& probes,
                                  const CircleGrid& grid, int k_depth,
                                  double tol,
                                  std::optional<double> eps_zero) {
  if (probes.size() < 2)
    throw std::invalid_argument("need at least two probes to compare");
  if (k_depth < 0) throw std::invalid_argument("depth must be >= 0");
  const int n = t.size();

  // Per-probe depth: honor the request, extend to any certified
  // co-analytic band, clamp to what the truncation admits.
  std::vector<int> depths(probes.size());
  int width_max = 1;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    int want = k_depth;
    if (t.exact_band() && t.exact_band()->lo < 0)
      want = std::max(want, -t.exact_band()->lo);
    const int cap = n - 1 - effective_degree(probes[i]);
    if (cap < 0)
      throw ProbeTooDeep("probe degree exceeds truncation size");
    depths[i] = std::min(want, cap);
    width_max = std::max(width_max, depths[i] + n);
  }

  // One shared grid so pointwise comparisons line up.
  CircleGrid g = grid;
  bool raised = false;
  if (g.size() < width_max) {
    g = CircleGrid(2 * width_max + 1);
    raised = true;
  }

  std::vector<SubSymbol> subs;
  subs.reserve(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i)
    subs.push_back(sub_symbol(t, probes[i], g, depths[i], eps_zero));

  UniquenessReport rep;
  rep.probe_depths = depths;
  rep.tol = tol;
  rep.n = n;
  rep.grid_size = g.size();
  rep.grid_was_raised = raised;
  rep.unique = true;
  rep.max_deviation = 0.0;
  rep.witness_i = rep.witness_j = -1;
  rep.witness_point = -1;
  rep.witness_theta = 0.0;

  bool any_comparable = false;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      PairDeviation pd{static_cast<int>(i), static_cast<int>(j), false, 0.0,
                       -1};
      for (int p = 0; p < g.size(); ++p) {
        const auto q = static_cast<std::size_t>(p);
        if (!subs[i].valid_mask[q] || !subs[j].valid_mask[q]) continue;
        pd.comparable = true;
        const double d = std::abs(subs[i].r_values[q] - subs[j].r_values[q]);
        if (d >= pd.max_dev) {
          pd.max_dev = d;
          pd.witness_point = p;
        }
      }
      if (pd.comparable) {
        any_comparable = true;
        if (pd.max_dev > rep.max_deviation) {
          rep.max_deviation = pd.max_dev;
          rep.witness_i = pd.i;
          rep.witness_j = pd.j;
          rep.witness_point = pd.witness_point;
          rep.witness_theta = g.theta(pd.witness_point);
        }
        if (pd.max_dev > tol) rep.unique = false;
      }
      rep.pairs.push_back(pd);
    }
  }
  if (!any_comparable)
    throw NoComparablePoints("every probe pair has an empty joint mask");
  return rep;
}

AnalyticityReport analyticity_test(const TruncatedOperator& t,
                                   const std::vector<HardyCoeffs>& probes,
                                   double tol) {
  AnalyticityReport rep;
  rep.tol = tol;
  rep.max_abs = 0.0;
  for (const HardyCoeffs& f : probes) {
    const HardyCoeffs zf = shifted_up(f, 1);
    if (zf.size() > t.size())
      throw ProbeTooDeep("probe degree exceeds truncation size");
    const Complex v = apply(t, zf).at(0);
    rep.probe_values.push_back(v);
    rep.max_abs = std::max(rep.max_abs, std::abs(v));
  }
  rep.analytic = rep.max_abs <= tol;
  return rep;
}

ExtensionReport extension_agreement(const TruncatedOperator& t,
                                    const HardyCoeffs& f,
                                    const std::vector<HardyCoeffs>& polys,
                                    const CircleGrid& grid, int k_depth,
                                    double tol) {
  // The probe must dominate the grid, otherwise the ratio h/f the
  // comparison stands for is untrustworthy.
  const auto fv = evaluate_on_grid(f, grid);
  double fmax = 0.0;
  for (const Complex& v : fv) fmax = std::max(fmax, std::abs(v));
  const double eps = 1e-6 * fmax;
  int valid = 0;
  for (const Complex& v : fv)
    if (std::abs(v) > eps) ++valid;
  if (valid * 10 < grid.size() * 9)
    throw std::invalid_argument("probe vanishes on more than 10% of the grid");

  const LaurentSeries h = compute_h(t, f, k_depth);
  ExtensionReport rep;
  rep.tol = tol;
  rep.max_dev = 0.0;
  rep.all_pass = true;
  for (const HardyCoeffs& p : polys) {
    const int pdeg = effective_degree(p);
    if (effective_degree(f) + pdeg + k_depth > t.size() - 1)
      throw ProbeTooDeep("deg(f p) + depth exceeds N-1");
    const HardyCoeffs lhs = riesz_project(multiply(h, p.as_series()));
    const HardyCoeffs rhs = apply(t, multiply(f, p));
    const int lo = certified_lo(t, pdeg, k_depth);
    double dev = 0.0;
    for (int k = lo; k < t.size(); ++k)
      dev = std::max(dev, std::abs(lhs.at(k) - rhs.at(k)));
    ExtensionEntry e{std::string(), pdeg, lo, t.size() - 1, dev, dev <= tol};
    rep.entries.push_back(e);
    rep.max_dev = std::max(rep.max_dev, dev);
    rep.all_pass = rep.all_pass && e.pass;
  }
  return rep;
}

StabilizationResult partial_stabilization(const TruncatedOperator& t,
                                          const HardyCoeffs& f,
                                          const HardyCoeffs& p, int cut_lo,
                                          int cut_hi, double tol) {
  if (cut_lo < 0 || cut_hi < cut_lo)
    throw std::invalid_argument("cut range is empty or negative");
  check_depth(t, f, cut_hi);

  std::vector<HardyCoeffs> projections;
  projections.reserve(static_cast<std::size_t>(cut_hi - cut_lo + 1));
  for (int cut = cut_lo; cut <= cut_hi; ++cut)
    projections.push_back(
        riesz_project(multiply(compute_partial_h(t, f, cut), p.as_series())));

  // Last cut whose projection differs from its successor; stabilization
  // begins right after it.
  int last_change = cut_lo - 1;
  for (int cut = cut_lo; cut < cut_hi; ++cut) {
    const auto& a = projections[static_cast<std::size_t>(cut - cut_lo)];
    const auto& b = projections[static_cast<std::size_t>(cut + 1 - cut_lo)];
    bool equal = true;
    const int hi = std::max(a.size(), b.size());
    for (int k = 0; k < hi && equal; ++k) equal = a.at(k) == b.at(k);
    if (!equal) last_change = cut;
  }

  StabilizationResult res;
  res.cut_lo = cut_lo;
  res.cut_hi = cut_hi;
  res.match_dev = 0.0;
  res.matches_apply = false;
  if (last_change + 1 > cut_hi - 1 && last_change >= cut_lo) {
    // changed at the final comparable pair: nothing stabilized in range
    res.stabilized_at = std::nullopt;
    res.stabilized = projections.back();
    return res;
  }
  const int n_star = std::max(last_change + 1, cut_lo);
  res.stabilized_at = n_star;
  res.stabilized = projections[static_cast<std::size_t>(n_star - cut_lo)];

  const HardyCoeffs rhs = apply(t, multiply(f, p));
  const int lo = certified_lo(t, effective_degree(p), n_star);
  for (int k = lo; k < t.size(); ++k)
    res.match_dev =
        std::max(res.match_dev, std::abs(res.stabilized.at(k) - rhs.at(k)));
  res.matches_apply = res.match_dev <= tol;
  return res;
}

}  // namespace hardysym
