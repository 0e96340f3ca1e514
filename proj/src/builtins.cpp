#include "hardysym/builtins.hpp"

namespace hardysym {

namespace {

// Every example the reports and papers on this machinery lean on,
// expressed as plain config text so a run needs no hand-written files.
std::vector<Builtin> make_registry() {
  std::vector<Builtin> v;

  v.push_back({"trig-basic", "subsymbol", R"(# banded symbol with one co-analytic diagonal
operator.kind = toeplitz
symbol.coeff = -1 0.5
symbol.coeff = 0 1
symbol.coeff = 1 0.25
N = 16
K = 8
tol = 1e-9
)"});

  v.push_back({"analytic-poly", "check", R"(operator.kind = toeplitz
symbol.coeff = 0 1
symbol.coeff = 1 1
symbol.coeff = 2 0.5
N = 16
tol = 1e-10
)"});

  v.push_back({"shift", "check", R"(# multiplication by z
operator.kind = toeplitz
symbol.coeff = 1 1
N = 16
tol = 1e-10
)"});

  v.push_back({"coshift", "check", R"(# backward shift; not analytic
operator.kind = toeplitz
symbol.coeff = -1 1
N = 16
tol = 1e-10
)"});

  v.push_back({"rank-one", "subsymbol", R"(# projection onto constants; candidate symbols disagree
operator.kind = matrix
matrix.row = 1 0 0 0 0 0 0 0 0 0 0 0
matrix.row = 0 0 0 0 0 0 0 0 0 0 0 0
matrix.row = 0 0 0 0 0 0 0 0 0 0 0 0
matrix.row = 0 0 0 0 0 0 0 0 0 0 0 0
matrix.row = 0 0 0 0 0 0 0 0 0 0 0 0
matrix.row = 0 0 0 0 0 0 0 0 0 0 0 0
K = 4
tol = 1e-9
)"});

  v.push_back({"perturbed-toeplitz", "check", R"(# single-entry dent in a banded symbol matrix
operator.kind = toeplitz
symbol.coeff = -1 0.5
symbol.coeff = 0 1
symbol.coeff = 1 0.25
N = 8
perturb.m = 2
perturb.n = 1
perturb.delta = 0.001
tol = 1e-9
)"});

  v.push_back({"smirnov-canonical", "check", R"(# canonical pair: a = 2/3 - z/3, b = (sqrt(2)/3)(1 + z)
operator.kind = smirnov
smirnov.a.coeff = 0 0.66666666666666663
smirnov.a.coeff = 1 -0.33333333333333331
smirnov.b.coeff = 0 0.47140452079103168
smirnov.b.coeff = 1 0.47140452079103168
N = 16
tol = 1e-8
)"});

  v.push_back({"factorial-domain", "factorial", R"(rule = alternating-harmonic
factorial.m_max = 8
)"});

  v.push_back({"factorial-check", "check", R"(family = factorial
rule = alternating-harmonic
rule = geometric
N = 16
tol = 1e-12
)"});

  v.push_back({"gamma-growth", "check", R"(family = gamma
gamma.rule = scaled-factorial
gamma.horizon = 40
rule = geometric
rule = delta-1
N = 12
tol = 1e-12
)"});

  v.push_back({"berezin-shift", "berezin", R"(operator.kind = toeplitz
symbol.coeff = 1 1
N = 32
berezin.radius = 0.3
berezin.count = 8
)"});

  v.push_back({"cmtable-50", "cmtable", R"(cm.m_max = 50
cm.tail_tol = 1e-12
)"});

  v.push_back({"extension-trig", "extension", R"(operator.kind = toeplitz
symbol.coeff = -1 0.5
symbol.coeff = 0 1
symbol.coeff = 1 0.25
N = 16
K = 8
tol = 1e-8
f = 2 1
poly = 1
poly = 0 1
poly = 0 0 1
poly = 0 0 0 1
)"});

  v.push_back({"stabilize-trig", "stabilize", R"(operator.kind = toeplitz
symbol.coeff = -1 0.5
symbol.coeff = 0 1
symbol.coeff = 1 0.25
N = 16
tol = 1e-12
f = 2 1
poly = 1
poly = 0 1
poly = 0 0 1
poly = 0 0 0 1
poly = 0 0 0 0 1
stabilize.cut_lo = 0
stabilize.cut_hi = 10
)"});

  v.push_back({"random-probes", "subsymbol", R"(# seeded random probes on top of fixed ones
operator.kind = toeplitz
symbol.coeff = -1 0.5
symbol.coeff = 0 1
symbol.coeff = 1 0.25
N = 16
K = 6
tol = 1e-9
probe = 1
probe = 0 1
probe.random = 2
)"});

  return v;
}

}  // namespace

const std::vector<Builtin>& builtin_registry() {
  static const std::vector<Builtin> registry = make_registry();
  return registry;
}

const Builtin* find_builtin(const std::string& name) {
  for (const Builtin& b : builtin_registry())
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace hardysym
