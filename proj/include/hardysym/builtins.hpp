#pragma once

#include <string>
#include <vector>

namespace hardysym {

/// A named ready-to-run example: the command it drives and the full
/// config text it runs with. The registry covers every probe family so
/// the whole surface can be exercised with zero hand-authored inputs.
struct Builtin {
  std::string name;
  std::string command;
  std::string config;
};

const std::vector<Builtin>& builtin_registry();
const Builtin* find_builtin(const std::string& name);

}  // namespace hardysym
