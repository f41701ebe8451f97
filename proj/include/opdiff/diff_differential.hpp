#pragma once

#include "opdiff/polynomial.hpp"

namespace opdiff {

/// A coefficient family acting on polynomial-valued vectors.  When
/// differentiate is set the member at n acts as base(n) composed with d/dt
/// (derivative first, then the matrix mixing); otherwise it is the plain
/// matrix action.
struct LiftedFamily {
  OperatorFamily base;
  bool differentiate = false;
};

/// Componentwise formal derivative.
PolyVector differentiate(const PolyVector& v);

/// Matrix mixing of polynomial components: w_i = sum_j m_ij p_j.
PolyVector apply_map(const LinearMap& m, const PolyVector& v);

PolyVector apply_lifted(const Factor& f, const LiftedFamily& fam0, const LiftedFamily& fam1,
                        const PolyVector& vec);

/// Noniterative solution of the lifted recurrence over the polynomial
/// backend; the term structure is identical to the numeric case.
PolyVector solve_diffdiff(const LiftedFamily& fam0, const LiftedFamily& fam1,
                          const PolyVector& y0, const PolyVector& y1, int n);

/// Direct iteration of the lifted recurrence
/// Y_{k+2}(t) = base0(k) dY_k/dt + base1(k) Y_{k+1}(t).
PolyVector iterate_diffdiff(const LiftedFamily& fam0, const LiftedFamily& fam1,
                            const PolyVector& y0, const PolyVector& y1, int n);

/// Evaluation-backend adapter for polynomial-valued states.
struct PolyBackend {
  using State = PolyVector;

  const LiftedFamily* fam0 = nullptr;
  const LiftedFamily* fam1 = nullptr;

  State apply_factor(const Factor& f, const State& v) const {
    return apply_lifted(f, *fam0, *fam1, v);
  }
  State zero_like(const State& v) const { return State::zero(v.dim()); }
  void accumulate(State& acc, const State& term) const { add_in_place(acc, term); }
};

}  // namespace opdiff
