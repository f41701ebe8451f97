#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opdiff/problem_spec.hpp"

namespace opdiff {

struct VerifyOptions {
  int n_max = 12;
  int trials = 100;
  std::uint64_t seed = 12345;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The built-in correctness suites: golden expansions, counting identities,
/// solver-vs-recursion equivalence on random instances, the M-family closed
/// forms and algebraic identities, the polynomial lift, and the scalar
/// Fibonacci reduction.  Deterministic for a fixed seed.
std::vector<CheckOutcome> run_builtin_checks(const VerifyOptions& options);

/// Problem-specific checks for a parsed document: noniterative solution vs
/// direct recursion for every n up to n_max, plus the closed-form and
/// constant-solution checks when the families are a constant-modulus
/// m_parity pair.
std::vector<CheckOutcome> run_problem_checks(const ProblemSpec& spec,
                                             const VerifyOptions& options);

bool all_passed(const std::vector<CheckOutcome>& outcomes);

}  // namespace opdiff
