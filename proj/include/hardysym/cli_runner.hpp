#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hardysym {

/// Command invocation as resolved by the front end. Exactly one of
/// config_path / builtin supplies the config (suite needs neither).
struct RunOptions {
  std::string command;
  std::string config_path;
  std::string builtin;
  std::string out_dir = "out";
  bool no_timestamp = false;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<double> tol;
  std::optional<int> mmax;
  std::optional<double> radius;
  std::optional<int> count;
  std::optional<std::string> rule;
  std::uint64_t seed = 12345;
};

/// Exit codes: 0 clean verdict, 1 error (thrown out of here and mapped
/// by the caller), 2 negative verdict (not unique, extension failure,
/// no stabilization).
int run_command(const RunOptions& opts);

/// Run every builtin into <out_dir>/<name> and write a summary table.
/// Always 0 unless a builtin throws unexpectedly.
int run_suite(const RunOptions& opts);

}  // namespace hardysym
