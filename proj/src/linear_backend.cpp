#include "opdiff/linear_backend.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "opdiff/evaluate.hpp"

namespace opdiff {

bool is_null(const StateVector& v) {
  return std::all_of(v.components.begin(), v.components.end(),
                     [](const Complex& c) { return c == Complex{}; });
}

StateVector& add_in_place(StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("vector dimensions disagree: " + std::to_string(a.dim()) +
                                 " vs " + std::to_string(b.dim()));
  }
  for (int i = 0; i < a.dim(); ++i) {
    a.components[i] += b.components[i];
  }
  return a;
}

StateVector add(StateVector a, const StateVector& b) {
  add_in_place(a, b);
  return a;
}

StateVector scale(const Complex& alpha, StateVector v) {
  for (auto& c : v.components) c *= alpha;
  return v;
}

double max_abs(const StateVector& v) {
  double m = 0.0;
  for (const auto& c : v.components) m = std::max(m, std::abs(c));
  return m;
}

double distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("vector dimensions disagree");
  }
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    m = std::max(m, std::abs(a.components[i] - b.components[i]));
  }
  return m;
}

LinearMap::LinearMap(int dim, std::vector<Complex> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (dim_ < 1 || entries_.size() != static_cast<std::size_t>(dim_) * dim_) {
    throw DimensionMismatchError("matrix storage does not match dimension " +
                                 std::to_string(dim_));
  }
}

LinearMap LinearMap::zero(int dim) {
  return LinearMap(dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim));
}

LinearMap LinearMap::identity(int dim) {
  LinearMap m = zero(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const int dim = static_cast<int>(rows.size());
  LinearMap m = zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim) {
      throw DimensionMismatchError("matrix row " + std::to_string(i) + " has wrong length");
    }
    for (int j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

StateVector LinearMap::apply(const StateVector& v) const {
  if (v.dim() != dim_) {
    throw DimensionMismatchError("map of dimension " + std::to_string(dim_) +
                                 " applied to vector of dimension " + std::to_string(v.dim()));
  }
  StateVector w = StateVector::zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    Complex acc{};
    for (int j = 0; j < dim_; ++j) {
      acc += at(i, j) * v.components[j];
    }
    w.components[i] = acc;
  }
  return w;
}

LinearMap LinearMap::adjoint() const {
  LinearMap m = zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      m.at(i, j) = std::conj(at(j, i));
    }
  }
  return m;
}

double LinearMap::max_abs() const {
  double m = 0.0;
  for (const auto& c : entries_) m = std::max(m, std::abs(c));
  return m;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.dim_ != b.dim_) {
    throw DimensionMismatchError("matrix product dimensions disagree");
  }
  LinearMap c = LinearMap::zero(a.dim_);
  for (int i = 0; i < a.dim_; ++i) {
    for (int k = 0; k < a.dim_; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < a.dim_; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.dim_ != b.dim_) {
    throw DimensionMismatchError("matrix sum dimensions disagree");
  }
  LinearMap c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.dim_ != b.dim_) {
    throw DimensionMismatchError("matrix difference dimensions disagree");
  }
  LinearMap c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

LinearMap operator*(const Complex& alpha, const LinearMap& a) {
  LinearMap c = a;
  for (auto& e : c.entries_) e *= alpha;
  return c;
}

OperatorFamily OperatorFamily::constant(LinearMap map) {
  OperatorFamily f;
  f.rule_ = Rule::Constant;
  f.dim_ = map.dim();
  f.maps_.push_back(std::move(map));
  return f;
}

OperatorFamily OperatorFamily::periodic(std::vector<LinearMap> maps) {
  if (maps.empty()) {
    throw InvalidConfigError("periodic family needs at least one map");
  }
  OperatorFamily f;
  f.rule_ = Rule::Periodic;
  f.dim_ = maps.front().dim();
  for (const auto& m : maps) {
    if (m.dim() != f.dim_) {
      throw DimensionMismatchError("periodic family members have mixed dimensions");
    }
  }
  f.maps_ = std::move(maps);
  return f;
}

OperatorFamily OperatorFamily::table(std::map<int, LinearMap> entries,
                                     std::optional<LinearMap> fallback) {
  if (entries.empty() && !fallback) {
    throw InvalidConfigError("table family needs entries or a fallback map");
  }
  OperatorFamily f;
  f.rule_ = Rule::Table;
  f.dim_ = fallback ? fallback->dim() : entries.begin()->second.dim();
  for (const auto& [n, m] : entries) {
    if (n < 0) {
      throw InvalidConfigError("table family index " + std::to_string(n) + " is negative");
    }
    if (m.dim() != f.dim_) {
      throw DimensionMismatchError("table family members have mixed dimensions");
    }
  }
  f.entries_ = std::move(entries);
  f.fallback_ = std::move(fallback);
  return f;
}

const LinearMap& OperatorFamily::at(int n) const {
  if (n < 0) {
    throw UnresolvedIndexError("family queried at negative index " + std::to_string(n));
  }
  switch (rule_) {
    case Rule::Constant:
      return maps_.front();
    case Rule::Periodic:
      return maps_[static_cast<std::size_t>(n) % maps_.size()];
    case Rule::Table: {
      const auto it = entries_.find(n);
      if (it != entries_.end()) return it->second;
      if (fallback_) return *fallback_;
      throw UnresolvedIndexError("table family has no entry for index " + std::to_string(n));
    }
  }
  throw UnresolvedIndexError("corrupt family rule");
}

StateVector apply_factor(const Factor& f, const OperatorFamily& fam0,
                         const OperatorFamily& fam1, const StateVector& vec) {
  const OperatorFamily& fam = f.which == Which::L0 ? fam0 : fam1;
  return fam.at(f.arg).apply(vec);
}

StateVector apply_product(const OrderedProduct& p, const OperatorFamily& fam0,
                          const OperatorFamily& fam1, const StateVector& vec) {
  return eval::apply_product(MatrixBackend{&fam0, &fam1}, p, vec);
}

StateVector apply_braced_sum(const BracedSpec& spec, const OperatorFamily& fam0,
                             const OperatorFamily& fam1, const StateVector& vec) {
  return eval::apply_braced_sum(MatrixBackend{&fam0, &fam1}, spec, vec);
}

}  // namespace opdiff
