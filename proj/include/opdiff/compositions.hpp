#pragma once

#include <cstdint>
#include <vector>

namespace opdiff {

/// One pair of exponent tuples (tau, s) of common length r.  tau[i] is the
/// number of L0 letters and s[i] the number of L1 letters in the i-th
/// alternating block of a word with u L0 letters and v L1 letters in total.
///
/// Constraints for a pair enumerated under (u, v):
///   sum(tau) == u, sum(s) == v
///   r == 1: the unique pair is tau = (u), s = (v)
///   r >= 2: tau[0] >= 0 and tau[i] >= 1 for i >= 1;
///           s[i] >= 1 for i < r-1 and s[r-1] >= 0
struct CompositionPair {
  std::vector<int> tau;
  std::vector<int> s;

  int length() const { return static_cast<int>(tau.size()); }
  bool operator==(const CompositionPair&) const = default;
};

/// Exact binomial coefficient with the convention C(n, k) = 0 for k < 0,
/// n < 0 or k > n.  Throws std::overflow_error instead of wrapping when the
/// result does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// All composition pairs of length r for the exponent budget (u, v), in
/// lexicographic order on the concatenation tau||s.  Returns the empty
/// sequence when no pair exists (in particular when r > min(u, v) + 1,
/// when r < 1, or when u or v is negative).
std::vector<CompositionPair> enumerate_compositions(int u, int v, int r);

/// Number of length-r pairs: C(u, r-1) * C(v, r-1).
std::uint64_t count_by_length(int u, int v, int r);

/// Number of pairs over all lengths: C(u+v, min(u, v)).
std::uint64_t count_total(int u, int v);

}  // namespace opdiff
