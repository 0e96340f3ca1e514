#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardysym/cli_runner.hpp"

namespace {

void add_config_flags(CLI::App* sub, hardysym::RunOptions& opts) {
  sub->add_option("--config", opts.config_path, "path to a key = value config file");
  sub->add_option("--builtin", opts.builtin, "name of a builtin example config");
  sub->add_option("--out", opts.out_dir, "output directory (default out)");
  sub->add_flag("--no-timestamp", opts.no_timestamp,
                "omit the generated line so reruns are byte identical");
}

void add_truncation_flags(CLI::App* sub, hardysym::RunOptions& opts) {
  sub->add_option("--N", opts.n, "truncation size override");
  sub->add_option("--M", opts.m, "grid size override (0 picks 2N+1)");
  sub->add_option("--K", opts.k, "co-analytic probe depth override");
  sub->add_option("--tol", opts.tol, "tolerance override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sub-symbol and shift-algebra diagnostics for truncated Hardy space operators"};
  app.require_subcommand(1);

  hardysym::RunOptions opts;
  if (const char* env = std::getenv("HS_SEED")) {
    try {
      opts.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: HS_SEED is not an integer: " << env << "\n";
      return 1;
    }
  }

  auto* sub = app.add_subcommand("subsymbol", "sub-symbol uniqueness probe");
  add_config_flags(sub, opts);
  add_truncation_flags(sub, opts);

  auto* chk = app.add_subcommand("check", "Toeplitz, analyticity and shift-algebra checks");
  add_config_flags(chk, opts);
  add_truncation_flags(chk, opts);

  auto* ber = app.add_subcommand("berezin", "Berezin transform sweep on a circle");
  add_config_flags(ber, opts);
  add_truncation_flags(ber, opts);
  ber->add_option("--radius", opts.radius, "circle radius in [0,1)");
  ber->add_option("--count", opts.count, "number of sample points");

  auto* fac = app.add_subcommand("factorial", "factorial-weight operator on a coefficient rule");
  add_config_flags(fac, opts);
  fac->add_option("--mmax", opts.mmax, "largest output index");
  fac->add_option("--rule", opts.rule, "coefficient rule name override");

  auto* cmt = app.add_subcommand("cmtable", "tail-coefficient constants with bounds");
  add_config_flags(cmt, opts);
  cmt->add_option("--mmax", opts.mmax, "largest m");

  auto* ext = app.add_subcommand("extension", "multiplicative extension agreement on polynomials");
  add_config_flags(ext, opts);
  add_truncation_flags(ext, opts);

  auto* stab = app.add_subcommand("stabilize", "projection stabilization across cut depths");
  add_config_flags(stab, opts);
  add_truncation_flags(stab, opts);

  auto* ste = app.add_subcommand("suite", "run every builtin example");
  ste->add_option("--out", opts.out_dir, "output directory (default out)");
  ste->add_flag("--no-timestamp", opts.no_timestamp,
                "omit generated lines so reruns are byte identical");

  CLI11_PARSE(app, argc, argv);

  opts.command = app.get_subcommands().front()->get_name();

  try {
    if (opts.command == "suite") return hardysym::run_suite(opts);
    return hardysym::run_command(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
