#include "opdiff/compositions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace opdiff {

namespace {

constexpr std::uint64_t kMax64 = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > kMax64) {
    throw std::overflow_error("binomial product exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(p);
}

// Tuples of length |minima| with entry i >= minima[i] and fixed sum,
// emitted in ascending lexicographic order.
void emit_tuples(const std::vector<int>& minima, const std::vector<int>& min_suffix,
                 std::size_t pos, int remaining, std::vector<int>& current,
                 std::vector<std::vector<int>>& out) {
  if (pos + 1 == minima.size()) {
    if (remaining >= minima[pos]) {
      current[pos] = remaining;
      out.push_back(current);
    }
    return;
  }
  const int hi = remaining - min_suffix[pos + 1];
  for (int x = minima[pos]; x <= hi; ++x) {
    current[pos] = x;
    emit_tuples(minima, min_suffix, pos + 1, remaining - x, current, out);
  }
}

std::vector<std::vector<int>> tuples_with_minima(int total, const std::vector<int>& minima) {
  std::vector<std::vector<int>> out;
  std::vector<int> min_suffix(minima.size() + 1, 0);
  for (std::size_t i = minima.size(); i-- > 0;) {
    min_suffix[i] = min_suffix[i + 1] + minima[i];
  }
  if (total < min_suffix[0]) {
    return out;
  }
  std::vector<int> current(minima.size(), 0);
  emit_tuples(minima, min_suffix, 0, total, current, out);
  return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: the running value is C(n-k+i, i).
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > kMax64) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<CompositionPair> enumerate_compositions(int u, int v, int r) {
  std::vector<CompositionPair> out;
  if (u < 0 || v < 0 || r < 1) {
    return out;
  }
  if (r == 1) {
    out.push_back(CompositionPair{{u}, {v}});
    return out;
  }
  // First L0 block may be empty, later ones may not; the last L1 block may
  // be empty, earlier ones may not.
  std::vector<int> tau_min(static_cast<std::size_t>(r), 1);
  tau_min.front() = 0;
  std::vector<int> s_min(static_cast<std::size_t>(r), 1);
  s_min.back() = 0;

  const auto taus = tuples_with_minima(u, tau_min);
  const auto ss = tuples_with_minima(v, s_min);
  out.reserve(taus.size() * ss.size());
  for (const auto& tau : taus) {
    for (const auto& s : ss) {
      out.push_back(CompositionPair{tau, s});
    }
  }
  return out;
}

std::uint64_t count_by_length(int u, int v, int r) {
  if (u < 0 || v < 0 || r < 1) {
    return 0;
  }
  return checked_mul(binomial(u, r - 1), binomial(v, r - 1));
}

std::uint64_t count_total(int u, int v) {
  if (u < 0 || v < 0) {
    return 0;
  }
  return binomial(u + v, std::min(u, v));
}

}  // namespace opdiff
