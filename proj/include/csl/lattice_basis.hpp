#pragma once

// Lattice-basis arithmetic: denominator clearing, sublattice indices,
// lattice intersections, and the commensurateness decision. A lattice is
// given by a square nonsingular basis matrix B; its points are B * Z^d.

#include <utility>

#include "csl/normal_form.hpp"

namespace csl {

// Least positive t with t*M integer, and the cleared matrix N = t*M.
inline std::pair<Int, IntMatrix> clear_denominators(const RatMatrix& m) {
  Int t = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t = lcm_int(t, den(m(i, j)));
  IntMatrix n(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      n(i, j) = num(m(i, j)) * (t / den(m(i, j)));
  return {t, n};
}

// [B-lattice : C-lattice] = |det(B^-1 C)| for a full-rank sublattice.
inline Int index_of_sublattice(const RatMatrix& b, const RatMatrix& c) {
  if (!b.is_square() || !c.is_square() || b.rows() != c.rows())
    fail(errc::internal, "index_of_sublattice expects square bases of equal dimension");
  RatMatrix a = solve(b, c);
  if (!is_integer_matrix(a))
    fail(errc::not_sublattice, "change of basis is not integral");
  Int d = int_det(to_integer(a));
  if (d == 0) fail(errc::singular, "sublattice basis is singular");
  return abs_int(d);
}

namespace basis_detail {

// Canonical lower-triangular basis of the column lattice of C.
inline IntMatrix canonical_basis(const IntMatrix& c) {
  HnfResult h = hnf(c.transpose());
  return h.H.transpose();
}

// Basis of Z^d  intersect  A * Z^d, for nonsingular rational A, via the
// integer kernel of [t*I | -N] where N = t*A.
inline IntMatrix standard_intersection(const RatMatrix& a) {
  int d = a.rows();
  auto [t, n] = clear_denominators(a);
  IntMatrix lhs = t * IntMatrix::identity(d);
  IntMatrix k = kernel_basis(concat_cols(lhs, -n));
  if (k.cols() != d) fail(errc::internal, "intersection kernel has wrong rank");
  IntMatrix c = k.block(0, 0, d, d);
  if (int_det(c) == 0) fail(errc::internal, "intersection basis is singular");
  return canonical_basis(c);
}

}  // namespace basis_detail

// Basis of B1*Z^d intersect B2*Z^d. Rational bases are always commensurate,
// so this never fails beyond singularity.
inline RatMatrix lattice_intersection(const RatMatrix& b1, const RatMatrix& b2) {
  if (!b1.is_square() || !b2.is_square() || b1.rows() != b2.rows())
    fail(errc::internal, "lattice_intersection expects square bases of equal dimension");
  RatMatrix a = solve(b1, b2);
  if (det(a) == Rational(0)) fail(errc::singular, "second basis is singular");
  return b1 * to_rational(basis_detail::standard_intersection(a));
}

// Commensurateness over Q(sqrt(n)): the transition matrix B1^-1 B2 must be
// rational. Equivalent to the intersection having finite index in both.
inline bool is_commensurate(const QuadMatrix& b1, const QuadMatrix& b2) {
  if (!b1.is_square() || !b2.is_square() || b1.rows() != b2.rows())
    fail(errc::internal, "is_commensurate expects square bases of equal dimension");
  QuadMatrix a = solve(b1, b2);
  if (det(b2) == QuadExt(Rational(0)))
    fail(errc::singular, "second basis is singular");
  return is_rational_matrix(a);
}

inline bool is_commensurate(const RatMatrix& b1, const RatMatrix& b2) {
  return is_commensurate(to_quad(b1), to_quad(b2));
}

// Intersection for bases over Q(sqrt(n)); requires commensurability.
inline QuadMatrix lattice_intersection(const QuadMatrix& b1, const QuadMatrix& b2) {
  QuadMatrix a = solve(b1, b2);
  if (det(a) == QuadExt(Rational(0)))
    fail(errc::singular, "second basis is singular");
  if (!is_rational_matrix(a))
    fail(errc::not_commensurate, "transition matrix has an irrational entry");
  IntMatrix c = basis_detail::standard_intersection(rational_part(a));
  return b1 * to_quad(to_rational(c));
}

}  // namespace csl
