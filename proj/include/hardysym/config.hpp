#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardysym/hardy_ops.hpp"
#include "hardysym/unbounded.hpp"

namespace hardysym {

struct ConfigEntry {
  std::string key;
  std::string value;
  int line;  // 1-based position in the source text
};

/// Flat "key = value" text. '#' starts a comment, blank lines are
/// ignored, keys may repeat (repeats express lists and keep declaration
/// order). Scalar getters read the last occurrence.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(const std::string& text);
  static KeyValueConfig from_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;  // ParseError when missing
  std::string get_or(const std::string& key, const std::string& dflt) const;
  long get_int(const std::string& key) const;
  long get_int_or(const std::string& key, long dflt) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double dflt) const;

  /// Every entry with this key, declaration order.
  std::vector<ConfigEntry> all(const std::string& key) const;
  const std::vector<ConfigEntry>& entries() const { return entries_; }

 private:
  const ConfigEntry* find(const std::string& key) const;
  std::vector<ConfigEntry> entries_;
};

/// One value token: "re" or "re,im". A list value is whitespace-split
/// tokens, e.g. "1 0,1" is 1 + i z when read as coefficients 0, 1, ...
Complex parse_complex_token(const std::string& tok, int line);
std::vector<Complex> parse_complex_list(const std::string& value, int line);

/// Repeated "<index> <re> [im]" entries folded into one series; repeats
/// of an index accumulate. Used for symbol.coeff and smirnov.*.coeff.
LaurentSeries indexed_coeffs_to_series(const std::vector<ConfigEntry>& lines);

/// Scalars shared by every command, with CLI overrides already applied.
struct RunSettings {
  int n = 16;        // truncation size, at least 4
  int m = 0;         // grid size; 0 means the 2N+1 default
  int k = 8;         // co-analytic probe depth request
  double tol = 1e-9;
  std::optional<double> eps_zero;
  std::uint64_t seed = 12345;

  int grid_size() const { return m > 0 ? m : 2 * n + 1; }
};

struct CliOverrides {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<double> tol;
};

RunSettings load_settings(const KeyValueConfig& kv, const CliOverrides& over,
                          std::uint64_t seed);

/// Operator described by the config: a symbol realization (operator.kind
/// = toeplitz | smirnov | gamma), an inline or file matrix
/// (operator.kind = matrix), with an optional additive perturbation at
/// one entry (perturb.m, perturb.n, perturb.delta). Referenced files
/// must exist when the config is read.
TruncatedOperator operator_from_config(const KeyValueConfig& kv,
                                       const RunSettings& rs);

/// Probe list: each "probe = c0 c1 ..." line is one polynomial
/// (coefficients from index 0; tokens "re" or "re,im"). "probe.random =
/// <count>" appends seeded random polynomials. Default when nothing is
/// configured: 1, z, z^2, 1 + z.
std::vector<HardyCoeffs> probes_from_config(const KeyValueConfig& kv,
                                            const RunSettings& rs,
                                            std::vector<std::string>* ids);

/// Polynomial list from repeated "poly = ..." lines; same token syntax.
/// Default: 1, z, z^2, z^3.
std::vector<HardyCoeffs> polys_from_config(const KeyValueConfig& kv,
                                           std::vector<std::string>* ids);

/// The distinguished probe f for extension and stabilization runs, from
/// "f = c0 c1 ..."; default 2 + z (zero-free on the circle).
HardyCoeffs probe_f_from_config(const KeyValueConfig& kv);

/// Named coefficient rule: "alternating-harmonic", "geometric",
/// "delta-<k>", or "table:<name>" with "rule.table = ..." inline values.
CoeffRule rule_by_name(const std::string& name, const KeyValueConfig& kv);
std::vector<CoeffRule> rules_from_config(const KeyValueConfig& kv);

/// Weight sequence from "gamma.rule = factorial | scaled-factorial" or
/// repeated "gamma.weight = re[,im]" lines, checked over gamma.horizon
/// (default 40).
GammaSequence gamma_from_config(const KeyValueConfig& kv);

/// Smirnov numerator/denominator from smirnov.b.coeff / smirnov.a.coeff
/// lines (each "index re [im]").
SmirnovRatio smirnov_from_config(const KeyValueConfig& kv);

}  // namespace hardysym
