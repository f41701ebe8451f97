#pragma once

#include <cstdlib>
#include <utility>

#include "opdiff/ordered_products.hpp"

namespace opdiff::eval {

// Generic evaluation core, shared by the complex-vector and the
// polynomial-vector backends.  A backend provides:
//
//   using State = ...;
//   State apply_factor(const Factor&, const State&) const;
//   State zero_like(const State&) const;
//   void  accumulate(State& acc, const State& term) const;
//
// All sums are reduced sequentially in canonical term order, so results are
// reproducible bit for bit.

template <class Backend>
typename Backend::State apply_product(const Backend& b, const OrderedProduct& p,
                                      typename Backend::State vec) {
  for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) {
    vec = b.apply_factor(*it, vec);
  }
  return vec;
}

template <class Backend>
typename Backend::State apply_braced_sum(const Backend& b, const BracedSpec& spec,
                                         const typename Backend::State& vec) {
  auto acc = b.zero_like(vec);
  for (const auto& term : expand_braced(spec)) {
    b.accumulate(acc, apply_product(b, term, vec));
  }
  return acc;
}

/// Y_n for initial data Y_0 = 0, Y_1 = seed:
/// sum over t = 0 .. floor(|n-1|/2) of {L0^(t) L1^(n-1-2t)}_1 seed.
/// Terms with a negative L1 exponent contribute nothing.
template <class Backend>
typename Backend::State solve_case_one(const Backend& b, const typename Backend::State& seed,
                                       int n) {
  auto acc = b.zero_like(seed);
  const int t_max = std::abs(n - 1) / 2;
  for (int t = 0; t <= t_max; ++t) {
    b.accumulate(acc, apply_braced_sum(b, BracedSpec{t, n - 1 - 2 * t, 1, Constraint::None}, seed));
  }
  return acc;
}

/// Y_n for initial data Y_0 = seed, Y_1 = 0:
/// sum over t = 0 .. floor((n-2)/2) of {L0^(t+1) L1^(n-2-2t)}_2 seed,
/// keeping only the words that finish with an L0 factor.  n = 0 and n = 1
/// return the initial data directly.
template <class Backend>
typename Backend::State solve_case_two(const Backend& b, const typename Backend::State& seed,
                                       int n) {
  if (n == 0) return seed;
  if (n == 1) return b.zero_like(seed);
  auto acc = b.zero_like(seed);
  for (int t = 0; t <= (n - 2) / 2; ++t) {
    b.accumulate(acc, apply_braced_sum(
                          b, BracedSpec{t + 1, n - 2 - 2 * t, 2, Constraint::EndsWithL0}, seed));
  }
  return acc;
}

/// Superposition of the two one-sided solutions; n = 0 and n = 1 return the
/// initial data verbatim.
template <class Backend>
typename Backend::State solve_general(const Backend& b, const typename Backend::State& y0,
                                      const typename Backend::State& y1, int n) {
  if (n == 0) return y0;
  if (n == 1) return y1;
  auto acc = solve_case_two(b, y0, n);
  b.accumulate(acc, solve_case_one(b, y1, n));
  return acc;
}

/// Direct O(n) iteration of Y_{k+2} = L0(k) Y_k + L1(k) Y_{k+1}.
template <class Backend>
typename Backend::State iterate_recurrence(const Backend& b, typename Backend::State y0,
                                           typename Backend::State y1, int n) {
  if (n == 0) return y0;
  for (int k = 0; k + 1 < n; ++k) {
    auto next = b.apply_factor(Factor{Which::L0, k}, y0);
    b.accumulate(next, b.apply_factor(Factor{Which::L1, k}, y1));
    y0 = std::move(y1);
    y1 = std::move(next);
  }
  return y1;
}

}  // namespace opdiff::eval
