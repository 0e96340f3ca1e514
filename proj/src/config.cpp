#include "hardysym/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "hardysym/io.hpp"

namespace hardysym {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "not a number: '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line, "trailing junk in number: '" + tok + "'");
  return v;
}

long to_long(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "not an integer: '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line, "trailing junk in integer: '" + tok + "'");
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream is(s);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text) {
  KeyValueConfig kv;
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
    kv.entries_.push_back(ConfigEntry{key, value, line_no});
  }
  return kv;
}

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open config: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse(buf.str());
}

const ConfigEntry* KeyValueConfig::find(const std::string& key) const {
  const ConfigEntry* hit = nullptr;
  for (const ConfigEntry& e : entries_)
    if (e.key == key) hit = &e;
  return hit;
}

bool KeyValueConfig::has(const std::string& key) const {
  return find(key) != nullptr;
}

std::string KeyValueConfig::get(const std::string& key) const {
  const ConfigEntry* e = find(key);
  if (!e) throw ParseError(0, "missing required key '" + key + "'");
  return e->value;
}

std::string KeyValueConfig::get_or(const std::string& key,
                                   const std::string& dflt) const {
  const ConfigEntry* e = find(key);
  return e ? e->value : dflt;
}

long KeyValueConfig::get_int(const std::string& key) const {
  const ConfigEntry* e = find(key);
  if (!e) throw ParseError(0, "missing required key '" + key + "'");
  return to_long(e->value, e->line);
}

long KeyValueConfig::get_int_or(const std::string& key, long dflt) const {
  const ConfigEntry* e = find(key);
  return e ? to_long(e->value, e->line) : dflt;
}

double KeyValueConfig::get_double(const std::string& key) const {
  const ConfigEntry* e = find(key);
  if (!e) throw ParseError(0, "missing required key '" + key + "'");
  return to_double(e->value, e->line);
}

double KeyValueConfig::get_double_or(const std::string& key,
                                     double dflt) const {
  const ConfigEntry* e = find(key);
  return e ? to_double(e->value, e->line) : dflt;
}

std::vector<ConfigEntry> KeyValueConfig::all(const std::string& key) const {
  std::vector<ConfigEntry> out;
  for (const ConfigEntry& e : entries_)
    if (e.key == key) out.push_back(e);
  return out;
}

Complex parse_complex_token(const std::string& tok, int line) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos) return Complex(to_double(tok, line), 0.0);
  return Complex(to_double(tok.substr(0, comma), line),
                 to_double(tok.substr(comma + 1), line));
}

std::vector<Complex> parse_complex_list(const std::string& value, int line) {
  std::vector<Complex> out;
  for (const std::string& tok : split_ws(value))
    out.push_back(parse_complex_token(tok, line));
  return out;
}

RunSettings load_settings(const KeyValueConfig& kv, const CliOverrides& over,
                          std::uint64_t seed) {
  RunSettings rs;
  rs.n = over.n ? *over.n : static_cast<int>(kv.get_int_or("N", 16));
  rs.m = over.m ? *over.m : static_cast<int>(kv.get_int_or("M", 0));
  rs.k = over.k ? *over.k : static_cast<int>(kv.get_int_or("K", 8));
  rs.tol = over.tol ? *over.tol : kv.get_double_or("tol", 1e-9);
  if (kv.has("eps_zero")) rs.eps_zero = kv.get_double("eps_zero");
  rs.seed = seed;
  if (rs.n < 4) throw std::invalid_argument("N must be at least 4");
  if (rs.m < 0) throw std::invalid_argument("M must be positive");
  if (rs.k < 0) throw std::invalid_argument("K must be >= 0");
  return rs;
}

LaurentSeries indexed_coeffs_to_series(const std::vector<ConfigEntry>& lines) {
  std::vector<std::pair<int, Complex>> vals;
  for (const ConfigEntry& e : lines) {
    const auto toks = split_ws(e.value);
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError(e.line, "expected '<index> <re> [im]'");
    const int idx = static_cast<int>(to_long(toks[0], e.line));
    const double re = to_double(toks[1], e.line);
    const double im = toks.size() == 3 ? to_double(toks[2], e.line) : 0.0;
    vals.emplace_back(idx, Complex(re, im));
  }
  if (vals.empty()) throw ParseError(0, "no coefficients given");
  int lo = vals.front().first;
  int hi = vals.front().first;
  for (const auto& [idx, c] : vals) {
    lo = std::min(lo, idx);
    hi = std::max(hi, idx);
  }
  std::vector<Complex> table(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [idx, c] : vals)
    table[static_cast<std::size_t>(idx - lo)] += c;
  return LaurentSeries(lo, std::move(table));
}

namespace {

HardyCoeffs indexed_coeffs_to_hardy(const std::vector<ConfigEntry>& lines,
                                    const std::string& what) {
  if (lines.empty()) throw ParseError(0, "missing " + what + " coefficients");
  const LaurentSeries s = indexed_coeffs_to_series(lines);
  if (s.n_min() < 0)
    throw ParseError(lines.front().line,
                     what + " must have nonnegative indices only");
  std::vector<Complex> table(static_cast<std::size_t>(s.n_max() + 1));
  for (int n = 0; n <= s.n_max(); ++n)
    table[static_cast<std::size_t>(n)] = s.at(n);
  return HardyCoeffs(std::move(table));
}

}  // namespace

SmirnovRatio smirnov_from_config(const KeyValueConfig& kv) {
  return SmirnovRatio{
      indexed_coeffs_to_hardy(kv.all("smirnov.b.coeff"), "smirnov.b"),
      indexed_coeffs_to_hardy(kv.all("smirnov.a.coeff"), "smirnov.a")};
}

GammaSequence gamma_from_config(const KeyValueConfig& kv) {
  const long horizon = kv.get_int_or("gamma.horizon", 40);
  if (kv.has("gamma.rule")) {
    const std::string name = kv.get("gamma.rule");
    if (name == "factorial")
      return make_gamma(
          [](long long n) {
            double f = 1.0;
            for (long long i = 2; i <= n; ++i) f *= static_cast<double>(i);
            return Complex(f, 0.0);
          },
          horizon);
    if (name == "scaled-factorial")
      return make_gamma(
          [](long long n) {
            double f = 1.0;
            for (long long i = 2; i <= n; ++i) f *= static_cast<double>(i);
            return Complex(f * std::pow(2.0, static_cast<double>(n)), 0.0);
          },
          horizon);
    throw std::invalid_argument("unknown gamma.rule '" + name + "'");
  }
  const auto lines = kv.all("gamma.weight");
  if (lines.empty())
    throw ParseError(0, "need gamma.rule or gamma.weight lines");
  if (lines.size() < 2)
    throw ParseError(lines.front().line, "need at least two gamma.weight lines");
  auto table = std::make_shared<std::vector<Complex>>();
  for (const ConfigEntry& e : lines)
    table->push_back(parse_complex_token(split_ws(e.value).at(0), e.line));
  const long long end = static_cast<long long>(table->size()) - 1;
  return make_gamma(
      [table](long long n) {
        if (n < 0 || n > static_cast<long long>(table->size()) - 1)
          return Complex(0.0);
        return (*table)[static_cast<std::size_t>(n)];
      },
      std::min<long long>(horizon, end));
}

TruncatedOperator operator_from_config(const KeyValueConfig& kv,
                                       const RunSettings& rs) {
  const std::string kind = kv.get_or("operator.kind", "toeplitz");
  std::optional<TruncatedOperator> op;
  if (kind == "toeplitz") {
    const auto lines = kv.all("symbol.coeff");
    if (lines.empty()) throw ParseError(0, "toeplitz needs symbol.coeff lines");
    op = realize(SymbolSpec(TrigPolynomial{indexed_coeffs_to_series(lines)}),
                 rs.n);
  } else if (kind == "smirnov") {
    op = realize(SymbolSpec(smirnov_from_config(kv)), rs.n);
  } else if (kind == "gamma") {
    const GammaSequence g = gamma_from_config(kv);
    std::vector<Complex> weights(static_cast<std::size_t>(rs.n));
    for (int i = 0; i < rs.n; ++i)
      weights[static_cast<std::size_t>(i)] = g.gamma(i);
    op = realize(SymbolSpec(GammaWeights{std::move(weights)}), rs.n);
  } else if (kind == "matrix") {
    if (kv.has("matrix.file")) {
      const std::string path = kv.get("matrix.file");
      if (!std::filesystem::exists(path)) {
        const auto e = kv.all("matrix.file");
        throw ParseError(e.back().line, "file not found: " + path);
      }
      op = read_matrix_file(path);
    } else {
      const auto rows = kv.all("matrix.row");
      if (rows.empty())
        throw ParseError(0, "matrix needs matrix.file or matrix.row lines");
      const long n = static_cast<long>(rows.size());
      Eigen::MatrixXcd mat(n, n);
      for (long m = 0; m < n; ++m) {
        const auto toks = split_ws(rows[static_cast<std::size_t>(m)].value);
        const int line = rows[static_cast<std::size_t>(m)].line;
        if (static_cast<long>(toks.size()) != 2 * n)
          throw ParseError(line, "matrix.row needs " + std::to_string(2 * n) +
                                     " numbers");
        for (long j = 0; j < n; ++j)
          mat(m, j) = Complex(to_double(toks[2 * j], line),
                              to_double(toks[2 * j + 1], line));
      }
      op = TruncatedOperator(std::move(mat));
    }
  } else {
    throw std::invalid_argument("unknown operator.kind '" + kind + "'");
  }

  if (kv.has("perturb.delta")) {
    const int pm = static_cast<int>(kv.get_int("perturb.m"));
    const int pn = static_cast<int>(kv.get_int("perturb.n"));
    if (pm < 0 || pm >= op->size() || pn < 0 || pn >= op->size())
      throw std::invalid_argument("perturbation index outside the matrix");
    const auto e = kv.all("perturb.delta");
    const Complex delta = parse_complex_token(e.back().value, e.back().line);
    Eigen::MatrixXcd mat = op->entries();
    mat(pm, pn) += delta;
    // A perturbed matrix no longer certifies any band.
    op = TruncatedOperator(std::move(mat));
  }
  return *op;
}

namespace {

HardyCoeffs coeff_list_to_hardy(const ConfigEntry& e) {
  auto coeffs = parse_complex_list(e.value, e.line);
  if (coeffs.empty()) throw ParseError(e.line, "empty coefficient list");
  return HardyCoeffs(std::move(coeffs));
}

std::string poly_label(const HardyCoeffs& p) {
  // Compact display name: constants and monomials get exact names,
  // anything else a degree tag.
  if (p.degree() <= 0) return "const";
  int terms = 0;
  int top = 0;
  for (int n = 0; n <= p.degree(); ++n)
    if (p.at(n) != Complex(0.0)) {
      ++terms;
      top = n;
    }
  if (terms == 1) return "z^" + std::to_string(top);
  return "deg" + std::to_string(p.degree());
}

}  // namespace

std::vector<HardyCoeffs> probes_from_config(const KeyValueConfig& kv,
                                            const RunSettings& rs,
                                            std::vector<std::string>* ids) {
  std::vector<HardyCoeffs> probes;
  std::vector<std::string> names;
  for (const ConfigEntry& e : kv.all("probe")) {
    probes.push_back(coeff_list_to_hardy(e));
    names.push_back(poly_label(probes.back()));
  }
  if (probes.empty()) {
    probes.push_back(HardyCoeffs::monomial(0));
    probes.push_back(HardyCoeffs::monomial(1));
    probes.push_back(HardyCoeffs::monomial(2));
    probes.push_back(HardyCoeffs({Complex(1.0), Complex(1.0)}));
    names = {"one", "z", "z^2", "one+z"};
  }
  const long random_count = kv.get_int_or("probe.random", 0);
  if (random_count > 0) {
    std::mt19937_64 rng(rs.seed);
    std::uniform_int_distribution<int> deg_dist(0, 3);
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    for (long i = 0; i < random_count; ++i) {
      const int deg = deg_dist(rng);
      std::vector<Complex> c(static_cast<std::size_t>(deg + 1));
      for (int j = 0; j <= deg; ++j)
        c[static_cast<std::size_t>(j)] = std::polar(mag(rng), phase(rng));
      probes.push_back(HardyCoeffs(std::move(c)));
      names.push_back("rand" + std::to_string(i));
    }
  }
  if (ids) *ids = std::move(names);
  return probes;
}

std::vector<HardyCoeffs> polys_from_config(const KeyValueConfig& kv,
                                           std::vector<std::string>* ids) {
  std::vector<HardyCoeffs> polys;
  std::vector<std::string> names;
  for (const ConfigEntry& e : kv.all("poly")) {
    polys.push_back(coeff_list_to_hardy(e));
    names.push_back(poly_label(polys.back()));
  }
  if (polys.empty()) {
    for (int d = 0; d <= 3; ++d) {
      polys.push_back(HardyCoeffs::monomial(d));
      names.push_back(d == 0 ? "one" : "z^" + std::to_string(d));
    }
  }
  if (ids) *ids = std::move(names);
  return polys;
}

HardyCoeffs probe_f_from_config(const KeyValueConfig& kv) {
  const auto lines = kv.all("f");
  if (lines.empty()) return HardyCoeffs({Complex(2.0), Complex(1.0)});
  return coeff_list_to_hardy(lines.back());
}

CoeffRule rule_by_name(const std::string& name, const KeyValueConfig& kv) {
  if (name == "alternating-harmonic") return alternating_harmonic_rule();
  if (name == "alternating-harmonic-shifted")
    return shift_rule(alternating_harmonic_rule());
  if (name == "geometric") return geometric_rule(0.5);
  if (name.rfind("delta-", 0) == 0)
    return delta_rule(to_long(name.substr(6), 0));
  if (name == "table") {
    const auto lines = kv.all("rule.table");
    if (lines.empty()) throw ParseError(0, "rule 'table' needs rule.table");
    return rule_from_table(
        "table", parse_complex_list(lines.back().value, lines.back().line));
  }
  throw std::invalid_argument("unknown rule '" + name + "'");
}

std::vector<CoeffRule> rules_from_config(const KeyValueConfig& kv) {
  std::vector<CoeffRule> rules;
  for (const ConfigEntry& e : kv.all("rule"))
    rules.push_back(rule_by_name(e.value, kv));
  if (rules.empty()) rules.push_back(alternating_harmonic_rule());
  return rules;
}

}  // namespace hardysym
