#pragma once

// Square classes of positive rationals and the scale-class map on
// similarity transforms. The class of a map with multiplier m = a/b is the
// squarefree part of a*b; class 1 means the scale is rational, i.e. the
// underlying rotation is already a coincidence rotation. Every class is its
// own inverse, so the image is an elementary Abelian 2-group.

#include "csl/lattice.hpp"
#include "csl/soc_sos.hpp"

namespace csl {

struct EtaClass {
  Int value{1};  // squarefree positive integer; 1 is the identity

  friend bool operator==(const EtaClass&, const EtaClass&) = default;
};

inline EtaClass eta_of(const SimilarityMap& s) {
  return {squarefree_part(s.multiplier())};
}

// Product of square classes: common primes cancel, the rest multiply.
inline EtaClass class_mul(const EtaClass& x, const EtaClass& y) {
  Int g = gcd_int(x.value, y.value);
  return {(x.value / g) * (y.value / g)};
}

inline int class_order(const EtaClass& c) { return c.value == 1 ? 1 : 2; }

// Checked pathway: the order of a class arising from a d-dimensional map
// must divide d. Non-identity classes in odd dimension would breach the
// representation and are reported as DimensionViolation.
inline int class_order(const EtaClass& c, int dim) {
  int ord = class_order(c);
  if (dim % ord != 0)
    fail(errc::dimension_violation,
         "class order " + std::to_string(ord) + " does not divide dimension " +
             std::to_string(dim));
  return ord;
}

// Square class of a direction: the parity vector of its decomposition,
// read as a squarefree integer. Equals the squarefree part of N(z).
inline EtaClass eta_of_direction(const SosFactorization& s) {
  Int v = s.eighth_exp % 2 != 0 ? 2 : 1;
  for (const auto& [p, l] : s.factors)
    if (l % 2 != 0) v *= p;
  return {v};
}

// Kernel of the scale-class map = the coincidence maps (after removing a
// rational scale); coincides with normalize_to_coincidence succeeding.
inline bool is_in_kernel(const SimilarityMap& s) {
  return eta_of(s).value == 1;
}

}  // namespace csl
