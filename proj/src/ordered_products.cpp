#include "opdiff/ordered_products.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "opdiff/errors.hpp"

namespace opdiff {

bool satisfies(const CompositionPair& comp, Constraint constraint) {
  switch (constraint) {
    case Constraint::None:
      return true;
    case Constraint::FirstL0BlockPositive:
      return comp.tau.front() > 0;
    case Constraint::FirstL0BlockZero:
      return comp.tau.front() == 0;
    case Constraint::EndsWithL0:
      return comp.s.back() == 0;
  }
  return false;
}

OrderedProduct build_ordered_product(const CompositionPair& comp, int u, int v, int q) {
  if (q != 1 && q != 2) {
    throw std::invalid_argument("ordered-product subscript must be 1 or 2, got " +
                                std::to_string(q));
  }
  if (comp.tau.empty() || comp.tau.size() != comp.s.size()) {
    throw std::invalid_argument("composition tuples must be non-empty and of equal length");
  }
  if (std::accumulate(comp.tau.begin(), comp.tau.end(), 0) != u ||
      std::accumulate(comp.s.begin(), comp.s.end(), 0) != v) {
    throw std::invalid_argument("composition does not sum to the requested (u, v)");
  }

  OrderedProduct p;
  p.u = u;
  p.v = v;
  p.q = q;
  p.comp = comp;
  p.factors.reserve(static_cast<std::size_t>(u + v));

  int counter = 2 * u + v - q;
  auto emit = [&](Which which, int step) {
    if (counter < 0) {
      throw NegativeIndexError("factor index " + std::to_string(counter) +
                               " is negative; composition is illegal for subscript q=" +
                               std::to_string(q));
    }
    p.factors.push_back(Factor{which, counter});
    counter -= step;
  };
  for (std::size_t i = 0; i < comp.tau.size(); ++i) {
    for (int j = 0; j < comp.tau[i]; ++j) emit(Which::L0, 2);
    for (int j = 0; j < comp.s[i]; ++j) emit(Which::L1, 1);
  }
  return p;
}

std::vector<OrderedProduct> expand_braced(const BracedSpec& spec) {
  if (spec.q != 1 && spec.q != 2) {
    throw std::invalid_argument("braced-sum subscript must be 1 or 2, got " +
                                std::to_string(spec.q));
  }
  std::vector<OrderedProduct> out;
  if (spec.u < 0 || spec.v < 0) {
    return out;  // zero operator
  }
  const int r_max = std::min(spec.u, spec.v) + 1;
  for (int r = 1; r <= r_max; ++r) {
    for (const auto& comp : enumerate_compositions(spec.u, spec.v, r)) {
      if (satisfies(comp, spec.constraint)) {
        out.push_back(build_ordered_product(comp, spec.u, spec.v, spec.q));
      }
    }
  }
  return out;
}

std::string render_product(const OrderedProduct& p) {
  if (p.factors.empty()) {
    return "I";
  }
  std::string text;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (i > 0) text += ' ';
    text += p.factors[i].which == Which::L0 ? "L0(" : "L1(";
    text += std::to_string(p.factors[i].arg);
    text += ')';
  }
  return text;
}

}  // namespace opdiff
