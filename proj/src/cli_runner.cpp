#include "hardysym/cli_runner.hpp"

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hardysym/builtins.hpp"
#include "hardysym/config.hpp"
#include "hardysym/io.hpp"
#include "hardysym/subsymbol.hpp"

namespace hardysym {

namespace {

namespace fs = std::filesystem;

std::ofstream open_report(const fs::path& dir, const std::string& name,
                          bool no_timestamp) {
  fs::create_directories(dir);
  std::ofstream os(dir / name);
  if (!os) throw Error("cannot write " + (dir / name).string());
  if (!no_timestamp) {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    os << "generated " << buf << "\n";
  }
  return os;
}

KeyValueConfig resolve_config(const RunOptions& opts) {
  if (!opts.builtin.empty()) {
    const Builtin* b = find_builtin(opts.builtin);
    if (!b) throw Error("unknown builtin '" + opts.builtin + "'");
    return KeyValueConfig::parse(b->config);
  }
  if (!opts.config_path.empty())
    return KeyValueConfig::from_file(opts.config_path);
  throw Error("command needs --config <path> or --builtin <name>");
}

RunSettings settings_for(const KeyValueConfig& kv, const RunOptions& opts) {
  CliOverrides over;
  over.n = opts.n;
  over.m = opts.m;
  over.k = opts.k;
  over.tol = opts.tol;
  return load_settings(kv, over, opts.seed);
}

// Grid sized from the operator actually built (a matrix file fixes its
// own N, overriding the configured truncation).
CircleGrid grid_for(const RunSettings& rs, int n_eff) {
  return CircleGrid(rs.m > 0 ? rs.m : 2 * n_eff + 1);
}

int run_subsymbol(const KeyValueConfig& kv, const RunSettings& rs,
                  const RunOptions& opts) {
  const TruncatedOperator op = operator_from_config(kv, rs);
  std::vector<std::string> ids;
  const std::vector<HardyCoeffs> probes = probes_from_config(kv, rs, &ids);
  UniquenessReport rep = uniqueness_probe(op, probes, grid_for(rs, op.size()),
                                          rs.k, rs.tol, rs.eps_zero);
  rep.probe_ids = ids;
  auto os = open_report(opts.out_dir, "subsymbol_report.txt",
                        opts.no_timestamp);
  write_uniqueness_report(os, rep);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    std::ofstream hs(fs::path(opts.out_dir) /
                     ("h_" + std::to_string(i) + ".series"));
    write_series(hs, compute_h(op, probes[i],
                               rep.probe_depths[i]));
  }
  std::cout << "uniqueness: " << (rep.unique ? "unique" : "not_unique")
            << " max_deviation " << format_float(rep.max_deviation) << "\n";
  return rep.unique ? 0 : 2;
}

void default_domain_sections(std::ostream& os, const CoeffRule& r,
                             const DomainParams& dp) {
  write_domain_verdict(os, domain_membership(r, dp), r.name);
  os << "\n";
  const CoeffRule shifted = shift_rule(r);
  write_domain_verdict(os, domain_membership(shifted, dp), shifted.name);
  os << "\n";
  const CoeffRule coshifted = coshift_rule(r);
  write_domain_verdict(os, domain_membership(coshifted, dp), coshifted.name);
  os << "\n";
}

int run_check(const KeyValueConfig& kv, const RunSettings& rs,
              const RunOptions& opts) {
  std::string family = kv.get_or("family", "");
  if (family.empty()) {
    const std::string kind = kv.get_or("operator.kind", "toeplitz");
    family = kind == "smirnov" ? "smirnov"
             : kind == "gamma" ? "gamma"
                               : "toeplitz";
  }
  auto os = open_report(opts.out_dir, "check_report.txt", opts.no_timestamp);
  DomainParams dp;
  dp.k_max = kv.get_int_or("domain.k_max", dp.k_max);
  std::string verdict_line;

  if (family == "factorial") {
    const std::vector<CoeffRule> rules = rules_from_config(kv);
    const ShiftAlgebraReport rep =
        shift_algebra_probe_factorial(rules, rs.n, dp, rs.tol);
    write_shift_algebra_report(os, rep);
    os << "\n";
    for (const CoeffRule& r : rules) default_domain_sections(os, r, dp);
    verdict_line = std::string("shift_domain ") +
                   (rep.shift_domain.holds() ? "holds" : "fails");
  } else if (family == "gamma") {
    const GammaSequence g = gamma_from_config(kv);
    const bool boundary = kv.get_int_or("gamma.allow_boundary", 0) != 0;
    const std::vector<CoeffRule> rules = rules_from_config(kv);
    os << "gamma_growth strict " << (g.growth_ok ? 1 : 0) << " weak "
       << (g.growth_weak_ok ? 1 : 0) << " first_violation "
       << g.first_violation << "\n\n";
    const ShiftAlgebraReport rep =
        shift_algebra_probe_gamma(g, rules, rs.n, dp, rs.tol, boundary);
    write_shift_algebra_report(os, rep);
    verdict_line = std::string("shift_domain ") +
                   (rep.shift_domain.holds() ? "holds" : "fails");
  } else {
    const TruncatedOperator op = operator_from_config(kv, rs);
    const ToeplitzCheck tc = is_toeplitz_algebraic(op, rs.tol);
    write_toeplitz_check(os, tc, rs.tol);
    os << "\n";
    std::vector<std::string> ids;
    const std::vector<HardyCoeffs> probes = probes_from_config(kv, rs, &ids);
    const AnalyticityReport ar = analyticity_test(op, probes, rs.tol);
    write_analyticity_report(os, ar, ids);
    os << "\n";
    const int margin =
        static_cast<int>(kv.get_int_or("check.margin", op.size() >= 6 ? 2 : 1));
    const LaurentSeries diag = diagonal_symbol_recovery(op, margin);
    os << "diagonal_recovery margin " << margin << "\n";
    write_series(os, diag);
    os << "\n";
    ShiftAlgebraReport rep;
    if (family == "smirnov") {
      std::vector<std::string> poly_ids;
      const auto polys = polys_from_config(kv, &poly_ids);
      rep = shift_algebra_probe_smirnov(smirnov_from_config(kv), polys,
                                        op.size(), grid_for(rs, op.size()),
                                        rs.tol);
    } else {
      rep = shift_algebra_probe_toeplitz(op, probes, rs.tol);
    }
    write_shift_algebra_report(os, rep);
    verdict_line = std::string("toeplitz ") + (tc.is_toeplitz ? "yes" : "no") +
                   " analytic " + (ar.analytic ? "yes" : "no");
  }
  std::cout << "check: " << verdict_line << "\n";
  return 0;
}

int run_berezin(const KeyValueConfig& kv, const RunSettings& rs,
                const RunOptions& opts) {
  const TruncatedOperator op = operator_from_config(kv, rs);
  const double radius =
      opts.radius ? *opts.radius : kv.get_double_or("berezin.radius", 0.3);
  const int count = opts.count
                        ? *opts.count
                        : static_cast<int>(kv.get_int_or("berezin.count", 8));
  const auto rows = berezin_sweep(op, radius, count);
  auto os = open_report(opts.out_dir, "berezin.csv", opts.no_timestamp);
  write_berezin_csv(os, rows);
  std::cout << "berezin: " << rows.size() << " points at radius "
            << format_float(radius) << "\n";
  return 0;
}

int run_factorial(const KeyValueConfig& kv, const RunSettings& rs,
                  const RunOptions& opts) {
  (void)rs;
  std::vector<CoeffRule> rules;
  if (opts.rule)
    rules.push_back(rule_by_name(*opts.rule, kv));
  else
    rules = rules_from_config(kv);
  DomainParams dp;
  dp.k_max = kv.get_int_or("domain.k_max", dp.k_max);
  auto os = open_report(opts.out_dir, "factorial_report.txt",
                        opts.no_timestamp);
  for (const CoeffRule& r : rules) default_domain_sections(os, r, dp);
  const int m_max = static_cast<int>(kv.get_int_or("factorial.m_max", 8));
  const CoeffRule& lead = rules.front();
  std::string lead_line;
  try {
    const FactorialImage img = factorial_apply(lead, m_max, dp.k_max);
    std::ofstream csv(fs::path(opts.out_dir) / "dm.csv");
    write_dm_csv(csv, img);
    os << "image_table " << lead.name << " rows " << m_max + 1
       << " file dm.csv\n";
    lead_line = "d_0 " + format_float(img.d[0].real());
  } catch (const DomainRefused& e) {
    os << "image_table " << lead.name << " refused: " << e.what() << "\n";
    lead_line = "refused";
  }
  std::cout << "factorial: " << lead.name << " " << lead_line << "\n";
  return 0;
}

int run_cmtable(const KeyValueConfig& kv, const RunOptions& opts) {
  const int m_max =
      opts.mmax ? *opts.mmax : static_cast<int>(kv.get_int_or("cm.m_max", 50));
  const double tail_tol = kv.get_double_or("cm.tail_tol", 1e-12);
  const auto rows = c_m_table(m_max, tail_tol);
  auto os = open_report(opts.out_dir, "cmtable.csv", opts.no_timestamp);
  write_cm_csv(os, rows);
  std::cout << "cmtable: " << rows.size() << " rows, cumulative "
            << format_float(rows.back().cumulative_sq) << "\n";
  return 0;
}

int run_extension(const KeyValueConfig& kv, const RunSettings& rs,
                  const RunOptions& opts) {
  const TruncatedOperator op = operator_from_config(kv, rs);
  const HardyCoeffs f = probe_f_from_config(kv);
  std::vector<std::string> ids;
  const auto polys = polys_from_config(kv, &ids);
  ExtensionReport rep = extension_agreement(op, f, polys,
                                            grid_for(rs, op.size()), rs.k,
                                            rs.tol);
  for (std::size_t i = 0; i < rep.entries.size() && i < ids.size(); ++i)
    rep.entries[i].poly_id = ids[i];
  auto os = open_report(opts.out_dir, "extension_report.txt",
                        opts.no_timestamp);
  write_extension_report(os, rep);
  std::cout << "extension: " << (rep.all_pass ? "pass" : "fail") << " max_dev "
            << format_float(rep.max_dev) << "\n";
  return rep.all_pass ? 0 : 2;
}

int run_stabilize(const KeyValueConfig& kv, const RunSettings& rs,
                  const RunOptions& opts) {
  const TruncatedOperator op = operator_from_config(kv, rs);
  const HardyCoeffs f = probe_f_from_config(kv);
  std::vector<std::string> ids;
  const auto polys = polys_from_config(kv, &ids);
  const int cut_lo = static_cast<int>(kv.get_int_or("stabilize.cut_lo", 0));
  const int deg_f = std::max(f.degree(), 0);
  const int cut_hi = static_cast<int>(
      kv.get_int_or("stabilize.cut_hi", op.size() - 1 - deg_f));
  std::vector<StabilizationResult> rows;
  rows.reserve(polys.size());
  bool all_ok = true;
  for (const HardyCoeffs& p : polys) {
    rows.push_back(partial_stabilization(op, f, p, cut_lo, cut_hi, rs.tol));
    all_ok = all_ok && rows.back().stabilized_at.has_value() &&
             rows.back().matches_apply;
  }
  auto os = open_report(opts.out_dir, "stabilize_report.txt",
                        opts.no_timestamp);
  write_stabilization_report(os, rows, ids, rs.tol);
  std::cout << "stabilize: " << (all_ok ? "pass" : "fail") << "\n";
  return all_ok ? 0 : 2;
}

}  // namespace

int run_command(const RunOptions& opts) {
  const KeyValueConfig kv = resolve_config(opts);
  const RunSettings rs = settings_for(kv, opts);
  if (opts.command == "subsymbol") return run_subsymbol(kv, rs, opts);
  if (opts.command == "check") return run_check(kv, rs, opts);
  if (opts.command == "berezin") return run_berezin(kv, rs, opts);
  if (opts.command == "factorial") return run_factorial(kv, rs, opts);
  if (opts.command == "cmtable") return run_cmtable(kv, opts);
  if (opts.command == "extension") return run_extension(kv, rs, opts);
  if (opts.command == "stabilize") return run_stabilize(kv, rs, opts);
  throw Error("unknown command '" + opts.command + "'");
}

int run_suite(const RunOptions& opts) {
  fs::create_directories(opts.out_dir);
  std::ofstream summary(fs::path(opts.out_dir) / "suite_summary.txt");
  if (!summary) throw Error("cannot write suite summary");
  for (const Builtin& b : builtin_registry()) {
    RunOptions sub;
    sub.command = b.command;
    sub.builtin = b.name;
    sub.out_dir = (fs::path(opts.out_dir) / b.name).string();
    sub.no_timestamp = opts.no_timestamp;
    sub.seed = opts.seed;
    int code = 0;
    try {
      code = run_command(sub);
    } catch (const std::exception& e) {
      code = 1;
      std::cout << "suite " << b.name << " error: " << e.what() << "\n";
    }
    summary << b.name << " " << b.command << " exit " << code << "\n";
  }
  std::cout << "suite: " << builtin_registry().size() << " runs\n";
  return 0;
}

}  // namespace hardysym
