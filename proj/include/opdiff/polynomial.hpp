#pragma once

#include <initializer_list>
#include <vector>

#include "opdiff/linear_backend.hpp"

namespace opdiff {

/// Univariate polynomial with complex coefficients, stored in ascending
/// powers.  Trailing exact-zero coefficients are trimmed, so the empty
/// coefficient list is the canonical zero polynomial.
class PolyScalar {
 public:
  PolyScalar() = default;
  explicit PolyScalar(std::vector<Complex> ascending);
  PolyScalar(std::initializer_list<Complex> ascending);

  static PolyScalar constant(const Complex& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int k) const;
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  PolyScalar derivative() const;

  friend PolyScalar operator+(const PolyScalar& a, const PolyScalar& b);
  friend PolyScalar operator-(const PolyScalar& a, const PolyScalar& b);
  friend PolyScalar operator*(const Complex& alpha, const PolyScalar& p);

  bool operator==(const PolyScalar&) const = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

double max_coeff_abs(const PolyScalar& p);
double coeff_distance(const PolyScalar& a, const PolyScalar& b);

/// Fixed-dimension vector whose components are polynomials.
struct PolyVector {
  std::vector<PolyScalar> components;

  int dim() const { return static_cast<int>(components.size()); }
  static PolyVector zero(int dim) { return PolyVector{std::vector<PolyScalar>(dim)}; }
  bool operator==(const PolyVector&) const = default;
};

bool is_null(const PolyVector& v);
PolyVector& add_in_place(PolyVector& a, const PolyVector& b);
double max_coeff_abs(const PolyVector& v);
double coeff_distance(const PolyVector& a, const PolyVector& b);

}  // namespace opdiff
