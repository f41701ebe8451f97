#pragma once

#include <cstdint>
#include <vector>

#include "opdiff/linear_backend.hpp"

namespace opdiff {

/// One problem instance: the two coefficient families and the initial data.
struct CauchyProblem {
  OperatorFamily fam0;
  OperatorFamily fam1;
  StateVector y0;
  StateVector y1;
};

/// Throws DimensionMismatchError when the four fields disagree.
void validate(const CauchyProblem& p);

/// Ground truth: direct iteration of Y_{k+2} = L0(k) Y_k + L1(k) Y_{k+1}
/// from (Y0, Y1) up to index n.
StateVector iterate_recurrence(const CauchyProblem& p, int n);

/// Noniterative solution for initial data Y0 = 0 (requires is_null(p.y0)).
StateVector solve_case_one(const CauchyProblem& p, int n);

/// Noniterative solution for initial data Y1 = 0 (requires is_null(p.y1)).
StateVector solve_case_two(const CauchyProblem& p, int n);

/// Noniterative solution for arbitrary initial data: the superposition of
/// the two one-sided solutions.  Returns Y0, Y1 verbatim for n = 0, 1.
StateVector solve_general(const CauchyProblem& p, int n);

/// One row of the term-count diagnostic for the case-one sum at index n.
struct TermCensusRow {
  int t;
  int u;
  int v;
  std::uint64_t term_count;

  bool operator==(const TermCensusRow&) const = default;
};

/// For each t in the case-one sum, the braced-sum exponents and the number
/// of ordered products it contributes.  Predicts evaluation cost.
std::vector<TermCensusRow> term_census(int n);

}  // namespace opdiff
