#include "opdiff/solver.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "opdiff/evaluate.hpp"

namespace opdiff {

namespace {

void require_nonnegative(int n) {
  if (n < 0) {
    throw std::invalid_argument("sequence index must be non-negative, got " + std::to_string(n));
  }
}

}  // namespace

void validate(const CauchyProblem& p) {
  const int d = p.fam0.dim();
  if (p.fam1.dim() != d || p.y0.dim() != d || p.y1.dim() != d) {
    throw DimensionMismatchError("Cauchy problem dimensions disagree: fam0=" +
                                 std::to_string(d) + " fam1=" + std::to_string(p.fam1.dim()) +
                                 " y0=" + std::to_string(p.y0.dim()) +
                                 " y1=" + std::to_string(p.y1.dim()));
  }
}

StateVector iterate_recurrence(const CauchyProblem& p, int n) {
  require_nonnegative(n);
  validate(p);
  return eval::iterate_recurrence(MatrixBackend{&p.fam0, &p.fam1}, p.y0, p.y1, n);
}

StateVector solve_case_one(const CauchyProblem& p, int n) {
  require_nonnegative(n);
  validate(p);
  if (!is_null(p.y0)) {
    throw std::invalid_argument("solve_case_one requires Y0 to be the null vector");
  }
  return eval::solve_case_one(MatrixBackend{&p.fam0, &p.fam1}, p.y1, n);
}

StateVector solve_case_two(const CauchyProblem& p, int n) {
  require_nonnegative(n);
  validate(p);
  if (!is_null(p.y1)) {
    throw std::invalid_argument("solve_case_two requires Y1 to be the null vector");
  }
  return eval::solve_case_two(MatrixBackend{&p.fam0, &p.fam1}, p.y0, n);
}

StateVector solve_general(const CauchyProblem& p, int n) {
  require_nonnegative(n);
  validate(p);
  return eval::solve_general(MatrixBackend{&p.fam0, &p.fam1}, p.y0, p.y1, n);
}

std::vector<TermCensusRow> term_census(int n) {
  require_nonnegative(n);
  std::vector<TermCensusRow> rows;
  const int t_max = std::abs(n - 1) / 2;
  for (int t = 0; t <= t_max; ++t) {
    const int v = n - 1 - 2 * t;
    rows.push_back(TermCensusRow{t, t, v, count_total(t, v)});
  }
  return rows;
}

}  // namespace opdiff
