#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "opdiff/errors.hpp"
#include "opdiff/ordered_products.hpp"

namespace opdiff {

using Complex = std::complex<double>;

/// Element of the state space: a fixed-dimension complex vector.
struct StateVector {
  std::vector<Complex> components;

  int dim() const { return static_cast<int>(components.size()); }
  static StateVector zero(int dim) { return StateVector{std::vector<Complex>(dim)}; }
  bool operator==(const StateVector&) const = default;
};

bool is_null(const StateVector& v);
StateVector& add_in_place(StateVector& a, const StateVector& b);
StateVector add(StateVector a, const StateVector& b);
StateVector scale(const Complex& alpha, StateVector v);
double max_abs(const StateVector& v);
double distance(const StateVector& a, const StateVector& b);

/// Dense square complex matrix, row-major.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(int dim, std::vector<Complex> row_major);

  static LinearMap zero(int dim);
  static LinearMap identity(int dim);
  static LinearMap from_rows(const std::vector<std::vector<Complex>>& rows);

  int dim() const { return dim_; }
  Complex& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  StateVector apply(const StateVector& v) const;
  LinearMap adjoint() const;
  double max_abs() const;

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Complex& alpha, const LinearMap& a);

  bool operator==(const LinearMap&) const = default;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

/// A rule n -> LinearMap for n >= 0.  Three rules are supported: a constant
/// map, a periodic table indexed by n mod p, and an explicit table with an
/// optional fallback map.
class OperatorFamily {
 public:
  static OperatorFamily constant(LinearMap map);
  static OperatorFamily periodic(std::vector<LinearMap> maps);
  static OperatorFamily table(std::map<int, LinearMap> entries,
                              std::optional<LinearMap> fallback = std::nullopt);

  /// Member at index n.  Throws UnresolvedIndexError when n is negative or
  /// the table has neither an entry nor a fallback; a missing member is an
  /// error, never an implicit zero map.
  const LinearMap& at(int n) const;
  int dim() const { return dim_; }

 private:
  OperatorFamily() = default;

  enum class Rule : unsigned char { Constant, Periodic, Table };
  Rule rule_ = Rule::Constant;
  std::vector<LinearMap> maps_;
  std::map<int, LinearMap> entries_;
  std::optional<LinearMap> fallback_;
  int dim_ = 0;
};

StateVector apply_factor(const Factor& f, const OperatorFamily& fam0,
                         const OperatorFamily& fam1, const StateVector& vec);

/// Applies the factors right to left: the rightmost (lowest-index) factor
/// acts first, matching the written order of the product.
StateVector apply_product(const OrderedProduct& p, const OperatorFamily& fam0,
                          const OperatorFamily& fam1, const StateVector& vec);

/// Sum of apply_product over the expansion of the braced sum, reduced in
/// canonical term order.  An empty expansion yields the null vector.
StateVector apply_braced_sum(const BracedSpec& spec, const OperatorFamily& fam0,
                             const OperatorFamily& fam1, const StateVector& vec);

/// Adapter satisfying the evaluation-backend contract (see evaluate.hpp).
struct MatrixBackend {
  using State = StateVector;

  const OperatorFamily* fam0 = nullptr;
  const OperatorFamily* fam1 = nullptr;

  State apply_factor(const Factor& f, const State& v) const {
    return opdiff::apply_factor(f, *fam0, *fam1, v);
  }
  State zero_like(const State& v) const { return State::zero(v.dim()); }
  void accumulate(State& acc, const State& term) const { add_in_place(acc, term); }
};

}  // namespace opdiff
