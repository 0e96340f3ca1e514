#include "hardysym/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hardysym {

namespace {

double parse_double(const std::string& tok, int line) {
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

long parse_long(const std::string& tok, int line) {
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

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

// Line reader that skips blank lines and tracks the 1-based position.
struct LineSource {
  std::istream& is;
  int line_no = 0;

  bool next(std::string& out) {
    while (std::getline(is, out)) {
      ++line_no;
      if (!split_ws(out).empty()) return true;
    }
    return false;
  }

  std::vector<std::string> expect_tokens(const std::string& what) {
    std::string line;
    if (!next(line)) throw ParseError(line_no + 1, "expected " + what);
    return split_ws(line);
  }
};

long expect_keyed_int(LineSource& src, const std::string& key) {
  const auto toks = src.expect_tokens("'" + key + " <int>'");
  if (toks.size() != 2 || toks[0] != key)
    throw ParseError(src.line_no, "expected '" + key + " <int>'");
  return parse_long(toks[1], src.line_no);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open for reading: " + path);
  return is;
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex v) {
  return format_float(v.real()) + " " + format_float(v.imag());
}

void write_series(std::ostream& os, const LaurentSeries& s) {
  os << "n_min " << s.n_min() << "\n";
  os << "count " << s.band_width() << "\n";
  for (const Complex& c : s.coeffs()) os << format_complex(c) << "\n";
}

LaurentSeries read_series(std::istream& is) {
  LineSource src{is};
  const long n_min = expect_keyed_int(src, "n_min");
  const long count = expect_keyed_int(src, "count");
  if (count < 1 || count > 1000000)
    throw ParseError(src.line_no, "count out of range");
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const auto toks = src.expect_tokens("coefficient pair 're im'");
    if (toks.size() != 2)
      throw ParseError(src.line_no, "expected exactly 're im'");
    coeffs.emplace_back(parse_double(toks[0], src.line_no),
                        parse_double(toks[1], src.line_no));
  }
  return LaurentSeries(static_cast<int>(n_min), std::move(coeffs));
}

void write_series_file(const std::string& path, const LaurentSeries& s) {
  auto os = open_out(path);
  write_series(os, s);
}

LaurentSeries read_series_file(const std::string& path) {
  auto is = open_in(path);
  return read_series(is);
}

void write_matrix(std::ostream& os, const TruncatedOperator& t) {
  os << t.size() << "\n";
  for (int m = 0; m < t.size(); ++m) {
    for (int n = 0; n < t.size(); ++n) {
      if (n > 0) os << " ";
      os << format_complex(t.entry(m, n));
    }
    os << "\n";
  }
}

TruncatedOperator read_matrix(std::istream& is) {
  LineSource src{is};
  const auto head = src.expect_tokens("matrix size header");
  if (head.size() != 1)
    throw ParseError(src.line_no, "header must be the size alone");
  const long n = parse_long(head[0], src.line_no);
  if (n < 1 || n > 4096) throw ParseError(src.line_no, "size out of range");
  Eigen::MatrixXcd mat(n, n);
  for (long m = 0; m < n; ++m) {
    const auto toks = src.expect_tokens("matrix row");
    if (static_cast<long>(toks.size()) != 2 * n)
      throw ParseError(src.line_no,
                       "row needs " + std::to_string(2 * n) + " numbers, got " +
                           std::to_string(toks.size()));
    for (long j = 0; j < n; ++j)
      mat(m, j) = Complex(parse_double(toks[2 * j], src.line_no),
                          parse_double(toks[2 * j + 1], src.line_no));
  }
  return TruncatedOperator(std::move(mat));
}

void write_matrix_file(const std::string& path, const TruncatedOperator& t) {
  auto os = open_out(path);
  write_matrix(os, t);
}

TruncatedOperator read_matrix_file(const std::string& path) {
  auto is = open_in(path);
  return read_matrix(is);
}

void write_uniqueness_report(std::ostream& os, const UniquenessReport& rep) {
  os << "uniqueness_report\n";
  os << "tol " << format_float(rep.tol) << "\n";
  os << "grid_size " << rep.grid_size << "\n";
  os << "grid_raised " << (rep.grid_was_raised ? 1 : 0) << "\n";
  os << "probes " << rep.probe_depths.size() << "\n";
  for (std::size_t i = 0; i < rep.probe_depths.size(); ++i) {
    const std::string id =
        i < rep.probe_ids.size() ? rep.probe_ids[i] : "p" + std::to_string(i);
    os << "probe " << i << " id " << id << " band " << -rep.probe_depths[i]
       << " " << rep.n - 1 << "\n";
  }
  os << "pairs " << rep.pairs.size() << "\n";
  for (const PairDeviation& pd : rep.pairs) {
    os << "pair " << pd.i << " " << pd.j << " comparable "
       << (pd.comparable ? 1 : 0) << " max_dev " << format_float(pd.max_dev)
       << " witness_point " << pd.witness_point << "\n";
  }
  os << "verdict " << (rep.unique ? "unique" : "not_unique") << "\n";
  os << "max_deviation " << format_float(rep.max_deviation) << "\n";
  os << "witness pair " << rep.witness_i << " " << rep.witness_j << " point "
     << rep.witness_point << " theta " << format_float(rep.witness_theta)
     << "\n";
}

void write_analyticity_report(std::ostream& os, const AnalyticityReport& rep,
                              const std::vector<std::string>& probe_ids) {
  os << "analyticity_report\n";
  os << "tol " << format_float(rep.tol) << "\n";
  os << "probes " << rep.probe_values.size() << "\n";
  for (std::size_t i = 0; i < rep.probe_values.size(); ++i) {
    const std::string id =
        i < probe_ids.size() ? probe_ids[i] : "p" + std::to_string(i);
    os << "probe " << i << " id " << id << " constant_term "
       << format_complex(rep.probe_values[i]) << "\n";
  }
  os << "verdict " << (rep.analytic ? "analytic" : "not_analytic") << "\n";
  os << "max_abs " << format_float(rep.max_abs) << "\n";
}

void write_extension_report(std::ostream& os, const ExtensionReport& rep) {
  os << "extension_report\n";
  os << "tol " << format_float(rep.tol) << "\n";
  os << "entries " << rep.entries.size() << "\n";
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const ExtensionEntry& e = rep.entries[i];
    const std::string id = e.poly_id.empty() ? "p" + std::to_string(i)
                                             : e.poly_id;
    os << "entry " << i << " id " << id << " degree " << e.poly_degree
       << " compared " << e.compared_lo << " " << e.compared_hi << " max_dev "
       << format_float(e.max_dev) << " " << pass_fail(e.pass) << "\n";
  }
  os << "verdict " << pass_fail(rep.all_pass) << "\n";
  os << "max_dev " << format_float(rep.max_dev) << "\n";
}

void write_stabilization_report(
    std::ostream& os, const std::vector<StabilizationResult>& rows,
    const std::vector<std::string>& ids, double tol) {
  os << "stabilization_report\n";
  os << "tol " << format_float(tol) << "\n";
  os << "rows " << rows.size() << "\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const StabilizationResult& r = rows[i];
    const std::string id = i < ids.size() ? ids[i] : "p" + std::to_string(i);
    os << "row " << i << " id " << id << " cuts " << r.cut_lo << " "
       << r.cut_hi << " stabilized_at ";
    if (r.stabilized_at)
      os << *r.stabilized_at;
    else
      os << "none";
    os << " match_dev " << format_float(r.match_dev) << " matches "
       << (r.matches_apply ? 1 : 0) << "\n";
    all_ok = all_ok && r.stabilized_at.has_value() && r.matches_apply;
  }
  os << "verdict " << pass_fail(all_ok) << "\n";
}

void write_toeplitz_check(std::ostream& os, const ToeplitzCheck& check,
                          double tol) {
  os << "toeplitz_check\n";
  os << "tol " << format_float(tol) << "\n";
  os << "verdict " << (check.is_toeplitz ? "toeplitz" : "not_toeplitz")
     << "\n";
  os << "max_deviation " << format_float(check.max_deviation) << " at "
     << check.at_m << " " << check.at_n << "\n";
}

void write_domain_verdict(std::ostream& os, const DomainVerdict& v,
                          const std::string& name) {
  os << "domain_verdict " << name << "\n";
  os << "decision " << to_string(v.decision) << "\n";
  os << "k_max " << v.params.k_max << "\n";
  os << "window " << v.params.window << "\n";
  os << "tau " << format_float(v.params.tau) << "\n";
  os << "term_threshold " << format_float(v.params.term_threshold) << "\n";
  os << "window_oscillation " << format_float(v.window_oscillation) << "\n";
  os << "terms_vanish " << (v.terms_vanish ? 1 : 0) << "\n";
  os << "samples " << v.samples.size() << "\n";
  for (const DomainSample& s : v.samples)
    os << "sample k " << s.k << " sum " << format_complex(s.s) << " term_abs "
       << format_float(s.term_abs) << "\n";
  if (!v.witness.empty()) os << "witness " << v.witness << "\n";
}

void write_shift_algebra_report(std::ostream& os,
                                const ShiftAlgebraReport& rep) {
  const auto line = [&os](const char* label, const ConditionOutcome& c) {
    os << label << " " << pass_fail(c.holds()) << " passes " << c.pass_count
       << " failures " << c.fail_count << " inconclusive "
       << c.inconclusive_count;
    if (!c.witness.empty()) os << " witness: " << c.witness;
    os << "\n";
  };
  os << "shift_algebra_report " << rep.family << "\n";
  os << "samples " << rep.samples << "\n";
  line("shift_domain", rep.shift_domain);
  line("compress_identity", rep.compress_identity);
  line("coshift_domain", rep.coshift_domain);
  os << "compress_deviation " << format_float(rep.compress_dev) << "\n";
}

void write_berezin_csv(std::ostream& os, const std::vector<BerezinRow>& rows) {
  os << "re_w,im_w,re_value,im_value,tail_bound\n";
  for (const BerezinRow& r : rows)
    os << format_float(r.w.real()) << "," << format_float(r.w.imag()) << ","
       << format_float(r.value.real()) << "," << format_float(r.value.imag())
       << "," << format_float(r.tail_bound) << "\n";
}

void write_cm_csv(std::ostream& os, const std::vector<CmRow>& rows) {
  os << "m,c_m,bound,cumulative_sq\n";
  for (const CmRow& r : rows)
    os << r.m << "," << format_float(r.c_m) << "," << format_float(r.bound)
       << "," << format_float(r.cumulative_sq) << "\n";
}

void write_dm_csv(std::ostream& os, const FactorialImage& img) {
  os << "m,re_d,im_d,tail,rigorous\n";
  for (std::size_t m = 0; m < img.d.size(); ++m)
    os << m << "," << format_float(img.d[m].real()) << ","
       << format_float(img.d[m].imag()) << "," << format_float(img.tail[m])
       << "," << (img.tail_rigorous[m] ? 1 : 0) << "\n";
}

}  // namespace hardysym
