#include "opdiff/diff_differential.hpp"

#include <stdexcept>

#include "opdiff/evaluate.hpp"

namespace opdiff {

PolyVector differentiate(const PolyVector& v) {
  PolyVector d;
  d.components.reserve(v.components.size());
  for (const auto& p : v.components) {
    d.components.push_back(p.derivative());
  }
  return d;
}

PolyVector apply_map(const LinearMap& m, const PolyVector& v) {
  if (v.dim() != m.dim()) {
    throw DimensionMismatchError("map of dimension " + std::to_string(m.dim()) +
                                 " applied to polynomial vector of dimension " +
                                 std::to_string(v.dim()));
  }
  PolyVector w = PolyVector::zero(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    PolyScalar acc;
    for (int j = 0; j < m.dim(); ++j) {
      acc = acc + m.at(i, j) * v.components[j];
    }
    w.components[i] = acc;
  }
  return w;
}

PolyVector apply_lifted(const Factor& f, const LiftedFamily& fam0, const LiftedFamily& fam1,
                        const PolyVector& vec) {
  const LiftedFamily& fam = f.which == Which::L0 ? fam0 : fam1;
  if (fam.differentiate) {
    return apply_map(fam.base.at(f.arg), differentiate(vec));
  }
  return apply_map(fam.base.at(f.arg), vec);
}

namespace {

void require_nonnegative(int n) {
  if (n < 0) {
    throw std::invalid_argument("sequence index must be non-negative, got " + std::to_string(n));
  }
}

}  // namespace

PolyVector solve_diffdiff(const LiftedFamily& fam0, const LiftedFamily& fam1,
                          const PolyVector& y0, const PolyVector& y1, int n) {
  require_nonnegative(n);
  return eval::solve_general(PolyBackend{&fam0, &fam1}, y0, y1, n);
}

PolyVector iterate_diffdiff(const LiftedFamily& fam0, const LiftedFamily& fam1,
                            const PolyVector& y0, const PolyVector& y1, int n) {
  require_nonnegative(n);
  return eval::iterate_recurrence(PolyBackend{&fam0, &fam1}, y0, y1, n);
}

}  // namespace opdiff
