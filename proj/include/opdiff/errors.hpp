#pragma once

#include <stdexcept>
#include <string>

namespace opdiff {

/// An ordered-product factor would carry a negative evaluation index,
/// i.e. the composition is paired with a subscript it cannot legally use.
class NegativeIndexError : public std::domain_error {
 public:
  explicit NegativeIndexError(const std::string& what) : std::domain_error(what) {}
};

/// Vector/operator dimensions disagree.
class DimensionMismatchError : public std::invalid_argument {
 public:
  explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operator family has no member at the requested index.
class UnresolvedIndexError : public std::out_of_range {
 public:
  explicit UnresolvedIndexError(const std::string& what) : std::out_of_range(what) {}
};

/// A configuration or problem description violates its own invariants.
class InvalidConfigError : public std::invalid_argument {
 public:
  explicit InvalidConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace opdiff
