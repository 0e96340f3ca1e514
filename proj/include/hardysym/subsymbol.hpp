#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardysym/hardy_ops.hpp"

namespace hardysym {

/// Candidate-symbol data attached to one probe polynomial f:
/// the mixed coefficient table h, its grid values divided by f, and the
/// mask of grid points where the division is trusted.
struct SubSymbol {
  HardyCoeffs f;
  LaurentSeries h;
  CircleGrid grid;
  std::vector<Complex> r_values;   // h(theta)/f(theta) on masked points
  std::vector<bool> valid_mask;    // |f(theta_j)| > eps_zero
  double eps_zero;
  bool grid_was_raised;            // caller grid was too coarse for h
};

/// Mixed coefficient table of T against probe f on the band
/// [-k_depth, N-1]: index -s (s >= 1) is output coefficient 0 of
/// T(f z^s), index s >= 0 is output coefficient s of T(f). Requires
/// deg(f) + k_depth <= N-1 so every shifted probe still fits the
/// truncation; each reported coefficient is then exact for any operator
/// the truncation certifies (see ExactBand).
LaurentSeries compute_h(const TruncatedOperator& t, const HardyCoeffs& f,
                        int k_depth);

/// Same table with the co-analytic side stopped at n_cut.
LaurentSeries compute_partial_h(const TruncatedOperator& t,
                                const HardyCoeffs& f, int n_cut);

/// Pointwise ratio h/f on the grid. The division is always pointwise,
/// never a coefficient deconvolution. When eps_zero is not given it
/// defaults to 1e-6 times the largest |f| on the grid. A grid with
/// fewer points than h's band width is replaced by one of size
/// 2*band+1 and the report notes the raise.
SubSymbol sub_symbol(const TruncatedOperator& t, const HardyCoeffs& f,
                     const CircleGrid& grid, int k_depth,
                     std::optional<double> eps_zero = std::nullopt);

struct PairDeviation {
  int i;
  int j;
  bool comparable;     // joint mask nonempty
  double max_dev;      // max |r_i - r_j| over the joint mask
  int witness_point;   // grid index achieving max_dev, -1 if none
};

struct UniquenessReport {
  std::vector<std::string> probe_ids;
  std::vector<int> probe_depths;    // per-probe co-analytic depth used
  std::vector<PairDeviation> pairs;
  bool unique;
  double max_deviation;             // over comparable pairs
  int witness_i;
  int witness_j;
  int witness_point;
  double witness_theta;
  double tol;
  int n;  // truncation size, fixes each probe band as [-depth, n-1]
  int grid_size;
  bool grid_was_raised;
};

/// Compare the candidate symbols of several probes pointwise. The
/// requested depth is clamped per probe to N-1-deg(f); when the
/// operator certifies a band reaching below -k_depth the depth is
/// raised to cover it, so band truncation cannot masquerade as probe
/// disagreement. Verdict is unique iff every comparable pair stays
/// within tol. NoComparablePoints when every pair has an empty joint
/// mask.
UniquenessReport uniqueness_probe(const TruncatedOperator& t,
                                  const std::vector<HardyCoeffs>& probes,
                                  const CircleGrid& grid, int k_depth,
                                  double tol,
                                  std::optional<double> eps_zero = std::nullopt);

struct AnalyticityReport {
  bool analytic;
  std::vector<Complex> probe_values;  // coefficient 0 of T(z f) per probe
  double max_abs;
  double tol;
};

/// T is analytic-symbol-like iff T(z f) has no constant term for every
/// probe in the family.
AnalyticityReport analyticity_test(const TruncatedOperator& t,
                                   const std::vector<HardyCoeffs>& probes,
                                   double tol);

struct ExtensionEntry {
  std::string poly_id;
  int poly_degree;
  int compared_lo;   // first certified output index
  int compared_hi;   // always N-1
  double max_dev;
  bool pass;
};

struct ExtensionReport {
  std::vector<ExtensionEntry> entries;
  double max_dev;
  bool all_pass;
  double tol;
};

/// For each polynomial p compare the projection of h_f * p against
/// T(f p), coefficientwise on the certified index range. Requires
/// deg(f p) + k_depth <= N-1 and f nonvanishing on at least 90% of the
/// grid.
ExtensionReport extension_agreement(const TruncatedOperator& t,
                                    const HardyCoeffs& f,
                                    const std::vector<HardyCoeffs>& polys,
                                    const CircleGrid& grid, int k_depth,
                                    double tol);

struct StabilizationResult {
  std::optional<int> stabilized_at;  // first cut after the last change
  HardyCoeffs stabilized;            // projection at that cut
  double match_dev;                  // vs apply(T, f p) on certified range
  bool matches_apply;
  int cut_lo;
  int cut_hi;
};

/// Sweep the co-analytic cut over [cut_lo, cut_hi] and find where the
/// projected product stops changing (exact comparison; the abandoned
/// terms leave the projection bitwise untouched once the cut passes
/// deg p). An empty stabilized_at means no stabilization inside the
/// range, reported rather than thrown.
StabilizationResult partial_stabilization(const TruncatedOperator& t,
                                          const HardyCoeffs& f,
                                          const HardyCoeffs& p, int cut_lo,
                                          int cut_hi, double tol);

}  // namespace hardysym
