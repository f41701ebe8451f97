#pragma once

#include <string>
#include <vector>

#include "opdiff/compositions.hpp"

namespace opdiff {

enum class Which : unsigned char { L0, L1 };

/// One indexed factor of an ordered product: the operator family selector
/// and the index n at which the family is evaluated.
struct Factor {
  Which which;
  int arg;

  bool operator==(const Factor&) const = default;
};

/// Optional filter applied to the compositions of a braced sum.
enum class Constraint : unsigned char {
  None,
  FirstL0BlockPositive,  // tau_1 > 0
  FirstL0BlockZero,      // tau_1 == 0
  EndsWithL0,            // s_r == 0: the product finishes with an L0 factor
};

/// Descriptor of one braced sum {L0^(u) L1^(v)}_q.
struct BracedSpec {
  int u = 0;
  int v = 0;
  int q = 1;  // subscript, 1 or 2
  Constraint constraint = Constraint::None;
};

/// A fully ordered operator word.  Factors are stored left to right as
/// written; the leftmost factor acts last when applied to a vector.
struct OrderedProduct {
  std::vector<Factor> factors;
  int u = 0;
  int v = 0;
  int q = 1;
  CompositionPair comp;  // provenance
};

bool satisfies(const CompositionPair& comp, Constraint constraint);

/// Realizes a composition as the concrete indexed word.  A running argument
/// counter starts at k_q = 2u + v - q; every emitted L0 factor carries the
/// current counter value and lowers it by 2, every L1 factor carries it and
/// lowers it by 1.  Throws NegativeIndexError if any factor would carry a
/// negative index (this happens exactly when q = 2 and the word ends in L1),
/// and std::invalid_argument when q is not 1 or 2 or the composition does
/// not sum to (u, v).
OrderedProduct build_ordered_product(const CompositionPair& comp, int u, int v, int q);

/// All ordered products of the braced sum, in canonical order: ascending
/// length r, then the enumeration order of the compositions.  Negative u or
/// v yields the empty sequence (the braced sum is the zero operator there);
/// u = v = 0 yields the single empty product (the identity).
/// NegativeIndexError propagates from illegal (composition, q) pairings,
/// which a q = 2 expansion avoids only under the EndsWithL0 constraint
/// (or when v = 0).
std::vector<OrderedProduct> expand_braced(const BracedSpec& spec);

/// Canonical text form: factors as "L0(n)" / "L1(n)" separated by single
/// spaces; the empty product renders as "I".  Stable output consumed by the
/// CLI and golden tests.
std::string render_product(const OrderedProduct& p);

}  // namespace opdiff
