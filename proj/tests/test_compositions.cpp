#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "opdiff/compositions.hpp"

using namespace opdiff;

namespace {

// Independent oracle: enumerate every r-tuple pair by unconstrained
// recursion and keep the ones satisfying the block constraints directly.
void all_tuples(int total, int len, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == len - 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    current.push_back(x);
    all_tuples(total - x, len, current, out);
    current.pop_back();
  }
}

bool tau_ok(const std::vector<int>& tau) {
  for (std::size_t i = 1; i < tau.size(); ++i) {
    if (tau[i] < 1) return false;
  }
  return true;
}

bool s_ok(const std::vector<int>& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] < 1) return false;
  }
  return true;
}

std::vector<CompositionPair> brute_force(int u, int v, int r) {
  std::vector<CompositionPair> out;
  if (u < 0 || v < 0 || r < 1) return out;
  if (r == 1) {
    out.push_back(CompositionPair{{u}, {v}});
    return out;
  }
  std::vector<std::vector<int>> taus, ss;
  std::vector<int> scratch;
  all_tuples(u, r, scratch, taus);
  all_tuples(v, r, scratch, ss);
  for (const auto& tau : taus) {
    if (!tau_ok(tau)) continue;
    for (const auto& s : ss) {
      if (!s_ok(s)) continue;
      out.push_back(CompositionPair{tau, s});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("binomial basics and conventions") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 2) == 21);
  CHECK(binomial(10, 4) == 210);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -2) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("binomial overflow is an error, not a wraparound") {
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
  CHECK_THROWS_AS(binomial(80, 40), std::overflow_error);
}

TEST_CASE("enumerate_compositions reproduces the known (2,1) expansion") {
  const auto got = enumerate_compositions(2, 1, 2);
  REQUIRE(got.size() == 2);
  CHECK(got[0] == CompositionPair{{0, 2}, {1, 0}});
  CHECK(got[1] == CompositionPair{{1, 1}, {1, 0}});

  const auto r1 = enumerate_compositions(2, 1, 1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == CompositionPair{{2}, {1}});
}

TEST_CASE("enumerate_compositions edge cases") {
  const auto identity = enumerate_compositions(0, 0, 1);
  REQUIRE(identity.size() == 1);
  CHECK(identity[0] == CompositionPair{{0}, {0}});

  CHECK(enumerate_compositions(3, 2, 4).empty());  // r exceeds min(u,v)+1
  CHECK(enumerate_compositions(-1, 2, 1).empty());
  CHECK(enumerate_compositions(2, -1, 1).empty());
  CHECK(enumerate_compositions(2, 2, 0).empty());
}

TEST_CASE("count_by_length frozen values") {
  CHECK(count_by_length(2, 1, 2) == 2);
  CHECK(count_by_length(2, 1, 1) == 1);
  // Value computed by the brute-force oracle below.
  CHECK(brute_force(5, 7, 3).size() == 210);
  CHECK(count_by_length(5, 7, 3) == 210);
}

TEST_CASE("count_total frozen values") {
  CHECK(count_total(2, 1) == 3);
  CHECK(count_total(0, 5) == 1);
  CHECK(count_total(0, 0) == 1);
  CHECK(count_total(4, 6) == 210);
  CHECK(count_total(-1, 3) == 0);
}

TEST_CASE("enumeration matches the brute-force oracle exactly") {
  for (int u = 0; u <= 5; ++u) {
    for (int v = 0; v <= 5; ++v) {
      for (int r = 1; r <= std::min(u, v) + 2; ++r) {
        const auto got = enumerate_compositions(u, v, r);
        auto expected = brute_force(u, v, r);
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
          return std::pair(a.tau, a.s) < std::pair(b.tau, b.s);
        });
        REQUIRE(got.size() == expected.size());
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
          return std::pair(a.tau, a.s) < std::pair(b.tau, b.s);
        });
        CHECK(sorted == expected);
        // Canonical order is lexicographic on tau||s.
        CHECK(got == sorted);
      }
    }
  }
}

TEST_CASE("per-length counts and the total identity hold up to 10") {
  for (int u = 0; u <= 10; ++u) {
    for (int v = 0; v <= 10; ++v) {
      std::uint64_t sum = 0;
      for (int r = 1; r <= std::min(u, v) + 1; ++r) {
        const auto comps = enumerate_compositions(u, v, r);
        CHECK(comps.size() == count_by_length(u, v, r));
        sum += comps.size();
      }
      CHECK(sum == count_total(u, v));
    }
  }
}

TEST_CASE("every enumerated pair satisfies its own invariants, no duplicates") {
  for (int u = 0; u <= 6; ++u) {
    for (int v = 0; v <= 6; ++v) {
      for (int r = 1; r <= std::min(u, v) + 1; ++r) {
        const auto comps = enumerate_compositions(u, v, r);
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& c : comps) {
          CHECK(c.length() == r);
          CHECK(std::accumulate(c.tau.begin(), c.tau.end(), 0) == u);
          CHECK(std::accumulate(c.s.begin(), c.s.end(), 0) == v);
          if (r >= 2) {
            CHECK(c.tau.front() >= 0);
            for (int i = 1; i < r; ++i) CHECK(c.tau[i] >= 1);
            for (int i = 0; i + 1 < r; ++i) CHECK(c.s[i] >= 1);
            CHECK(c.s.back() >= 0);
          }
          CHECK(seen.emplace(c.tau, c.s).second);
        }
      }
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_compositions(6, 4, 3) == enumerate_compositions(6, 4, 3));
}
