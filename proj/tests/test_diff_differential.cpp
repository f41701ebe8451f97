#include <random>
#include <vector>

#include "doctest.h"
#include "opdiff/diff_differential.hpp"
#include "opdiff/m_family.hpp"

using namespace opdiff;

namespace {

PolyVector make_poly_vec(std::vector<PolyScalar> components) {
  return PolyVector{std::move(components)};
}

PolyVector random_poly_vec(std::mt19937_64& rng, int dim, int degree) {
  std::normal_distribution<double> gauss;
  PolyVector v;
  for (int i = 0; i < dim; ++i) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = Complex{gauss(rng), gauss(rng)};
    v.components.push_back(PolyScalar{std::move(coeffs)});
  }
  return v;
}

// Independent oracle: iterate the lifted recurrence with inline polynomial
// arithmetic, touching none of the production evaluation paths.
PolyVector oracle_recursion(const OperatorFamily& base0, const OperatorFamily& base1,
                            PolyVector y0, PolyVector y1, int n) {
  if (n == 0) return y0;
  for (int k = 0; k + 1 < n; ++k) {
    const int dim = y0.dim();
    PolyVector next = PolyVector::zero(dim);
    const LinearMap& l0 = base0.at(k);
    const LinearMap& l1 = base1.at(k);
    for (int i = 0; i < dim; ++i) {
      PolyScalar acc;
      for (int j = 0; j < dim; ++j) {
        acc = acc + l0.at(i, j) * y0.components[j].derivative();
        acc = acc + l1.at(i, j) * y1.components[j];
      }
      next.components[i] = acc;
    }
    y0 = std::move(y1);
    y1 = std::move(next);
  }
  return y1;
}

int max_degree(const PolyVector& v) {
  int d = -1;
  for (const auto& p : v.components) d = std::max(d, p.degree());
  return d;
}

}  // namespace

TEST_CASE("polynomial scalar arithmetic") {
  const PolyScalar p{1.0, 2.0, 3.0};  // 1 + 2t + 3t^2
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == Complex{2.0});
  CHECK(p.coeff(9) == Complex{0.0});
  CHECK(p.derivative() == PolyScalar{2.0, 6.0});
  CHECK(PolyScalar{}.derivative() == PolyScalar{});
  CHECK(PolyScalar{5.0}.derivative() == PolyScalar{});

  // Trailing zeros trim, including after cancellation.
  CHECK(PolyScalar{1.0, 0.0, 0.0}.degree() == 0);
  CHECK((p - p).is_zero());
  CHECK((Complex{0.0} * p).is_zero());
}

TEST_CASE("differentiate acts componentwise") {
  const PolyVector v = make_poly_vec({PolyScalar{0.0, 0.0, 1.0}, PolyScalar{0.0, 1.0}});
  CHECK(differentiate(v) == make_poly_vec({PolyScalar{0.0, 2.0}, PolyScalar{1.0}}));

  const PolyVector constants = make_poly_vec({PolyScalar{3.0}, PolyScalar{-2.0}});
  CHECK(is_null(differentiate(constants)));

  const PolyVector mixed = make_poly_vec({PolyScalar{3.0, 0.0, 0.0, 4.0}, PolyScalar{}});
  CHECK(differentiate(mixed) == make_poly_vec({PolyScalar{0.0, 0.0, 12.0}, PolyScalar{}}));
}

TEST_CASE("apply_lifted differentiates first, then mixes") {
  const LiftedFamily id_lift{OperatorFamily::constant(LinearMap::identity(1)), true};
  const LiftedFamily id_plain{OperatorFamily::constant(LinearMap::identity(1)), false};

  const PolyVector t_squared = make_poly_vec({PolyScalar{0.0, 0.0, 1.0}});
  CHECK(apply_lifted({Which::L0, 0}, id_lift, id_plain, t_squared) ==
        make_poly_vec({PolyScalar{0.0, 2.0}}));
  CHECK(apply_lifted({Which::L1, 5}, id_lift, id_plain, t_squared) == t_squared);

  // Raising map composed with d/dt on (0, t^3).
  const MFamilyOperators ops = build_operators({2, {Complex{1.0}}, 1.0});
  const LiftedFamily lift_m_plus{OperatorFamily::constant(ops.m_plus), true};
  const PolyVector v = make_poly_vec({PolyScalar{}, PolyScalar{0.0, 0.0, 0.0, 1.0}});
  CHECK(apply_lifted({Which::L0, 0}, lift_m_plus, id_plain, v) ==
        make_poly_vec({PolyScalar{0.0, 0.0, 3.0}, PolyScalar{}}));
}

TEST_CASE("lifted parity solve matches the two branch formulas at rho=1") {
  const MFamilyConfig cfg{2, {Complex{1.0}}, 1.0};
  const MFamilyOperators ops = build_operators(cfg);
  auto [base0, base1] = parity_families(cfg);
  const LiftedFamily fam0{base0, true};
  const LiftedFamily fam1{base1, false};

  const PolyVector y1 = make_poly_vec({PolyScalar{0.0, 0.0, 1.0}, PolyScalar{0.0, 1.0}});
  const PolyVector y0 = PolyVector::zero(2);

  // Odd branch: D+ y1 + M- dy1/dt = (t^2, 2t).
  const PolyVector odd = solve_diffdiff(fam0, fam1, y0, y1, 5);
  CHECK(coeff_distance(odd, make_poly_vec({PolyScalar{0.0, 0.0, 1.0}, PolyScalar{0.0, 2.0}})) <=
        1e-12);

  // Even branch: D+ dy1/dt + M- y1 = (2t, t^2).
  const PolyVector even = solve_diffdiff(fam0, fam1, y0, y1, 6);
  CHECK(coeff_distance(even, make_poly_vec({PolyScalar{0.0, 2.0}, PolyScalar{0.0, 0.0, 1.0}})) <=
        1e-12);

  // n=2 row: M- y1.
  CHECK(coeff_distance(solve_diffdiff(fam0, fam1, y0, y1, 2), apply_map(ops.m_minus, y1)) <=
        1e-12);
}

TEST_CASE("constant inputs kill every derivative-bearing term") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss;
  LinearMap arbitrary = LinearMap::zero(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) arbitrary.at(i, j) = Complex{gauss(rng), gauss(rng)};
  }
  const LiftedFamily fam0{OperatorFamily::constant(arbitrary), true};
  const LiftedFamily fam1{OperatorFamily::constant(LinearMap::identity(2)), false};

  const PolyVector constants = make_poly_vec({PolyScalar{2.0}, PolyScalar{-1.0}});
  // With Y0 = constants and Y1 = 0, only words with an L0 acting directly on
  // the seed can contribute at n=2; the derivative annihilates it.
  CHECK(is_null(solve_diffdiff(fam0, fam1, constants, PolyVector::zero(2), 2)));
  CHECK(is_null(solve_diffdiff(fam0, fam1, constants, PolyVector::zero(2), 3)));
}

TEST_CASE("solve_diffdiff equals the independent polynomial recursion") {
  std::mt19937_64 rng(32);
  std::normal_distribution<double> gauss;
  for (const int dim : {1, 2, 4}) {
    auto random_map = [&] {
      LinearMap m = LinearMap::zero(dim);
      const double s = 1.0 / std::sqrt(static_cast<double>(dim));
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m.at(i, j) = s * Complex{gauss(rng), gauss(rng)};
      }
      return m;
    };
    const OperatorFamily base0 = OperatorFamily::periodic({random_map(), random_map()});
    const OperatorFamily base1 = OperatorFamily::constant(random_map());
    const LiftedFamily fam0{base0, true};
    const LiftedFamily fam1{base1, false};
    const PolyVector y0 = random_poly_vec(rng, dim, 5);
    const PolyVector y1 = random_poly_vec(rng, dim, 4);

    for (int n = 0; n <= 10; ++n) {
      const PolyVector expected = oracle_recursion(base0, base1, y0, y1, n);
      const PolyVector solved = solve_diffdiff(fam0, fam1, y0, y1, n);
      const PolyVector iterated = iterate_diffdiff(fam0, fam1, y0, y1, n);
      const double tol = 1e-9 * (1.0 + max_coeff_abs(expected));
      CHECK(coeff_distance(solved, expected) <= tol);
      CHECK(coeff_distance(iterated, expected) <= tol);
    }
  }
}

TEST_CASE("each L0 application lowers the maximum degree") {
  std::mt19937_64 rng(33);
  const MFamilyConfig cfg{4, {Complex{0.6, 0.8}, Complex{0.0, 1.0}}, 1.0};
  auto [base0, base1] = parity_families(cfg);
  const LiftedFamily fam0{base0, true};
  const LiftedFamily fam1{base1, false};

  const PolyVector v = random_poly_vec(rng, 4, 5);
  const PolyVector dropped = apply_lifted({Which::L0, 2}, fam0, fam1, v);
  CHECK(max_degree(dropped) <= max_degree(v) - 1);
  const PolyVector kept = apply_lifted({Which::L1, 2}, fam0, fam1, v);
  CHECK(max_degree(kept) <= max_degree(v));

  // Solutions never exceed the degree of the inputs.
  const PolyVector y1 = random_poly_vec(rng, 4, 5);
  for (int n = 0; n <= 8; ++n) {
    CHECK(max_degree(solve_diffdiff(fam0, fam1, PolyVector::zero(4), y1, n)) <= 5);
  }
}
