#include "opdiff/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace opdiff {

PolyScalar::PolyScalar(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

PolyScalar::PolyScalar(std::initializer_list<Complex> ascending) : coeffs_(ascending) {
  trim();
}

PolyScalar PolyScalar::constant(const Complex& c) {
  return PolyScalar{std::vector<Complex>{c}};
}

Complex PolyScalar::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
    return Complex{};
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

void PolyScalar::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) {
    coeffs_.pop_back();
  }
}

PolyScalar PolyScalar::derivative() const {
  if (coeffs_.size() <= 1) {
    return PolyScalar{};
  }
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return PolyScalar{std::move(d)};
}

PolyScalar operator+(const PolyScalar& a, const PolyScalar& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  }
  return PolyScalar{std::move(c)};
}

PolyScalar operator-(const PolyScalar& a, const PolyScalar& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  }
  return PolyScalar{std::move(c)};
}

PolyScalar operator*(const Complex& alpha, const PolyScalar& p) {
  if (alpha == Complex{}) {
    return PolyScalar{};
  }
  std::vector<Complex> c = p.coeffs_;
  for (auto& x : c) x *= alpha;
  return PolyScalar{std::move(c)};
}

double max_coeff_abs(const PolyScalar& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double coeff_distance(const PolyScalar& a, const PolyScalar& b) {
  return max_coeff_abs(a - b);
}

bool is_null(const PolyVector& v) {
  return std::all_of(v.components.begin(), v.components.end(),
                     [](const PolyScalar& p) { return p.is_zero(); });
}

PolyVector& add_in_place(PolyVector& a, const PolyVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("polynomial vector dimensions disagree");
  }
  for (int i = 0; i < a.dim(); ++i) {
    a.components[i] = a.components[i] + b.components[i];
  }
  return a;
}

double max_coeff_abs(const PolyVector& v) {
  double m = 0.0;
  for (const auto& p : v.components) m = std::max(m, max_coeff_abs(p));
  return m;
}

double coeff_distance(const PolyVector& a, const PolyVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("polynomial vector dimensions disagree");
  }
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    m = std::max(m, coeff_distance(a.components[i], b.components[i]));
  }
  return m;
}

}  // namespace opdiff
