#pragma once

// Lattices as rational Gram matrices and the similarity / coincidence maps
// acting on them. A map is stored in lattice coordinates: a rational matrix
// T with T' G T = m G for the (unique) rational multiplier m > 0. The
// underlying rotation is T / sqrt(m); sqrt(m) itself is never materialized,
// the multiplier carries all the scale information.

#include <utility>

#include "csl/lattice_basis.hpp"

namespace csl {

class Lattice {
 public:
  int dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }

  friend bool operator==(const Lattice& x, const Lattice& y) {
    return x.gram_ == y.gram_;
  }

  friend Lattice make_lattice(const RatMatrix& gram);

 private:
  explicit Lattice(RatMatrix gram) : gram_(std::move(gram)) {}
  RatMatrix gram_;
};

// Validates symmetry and positive definiteness (exact leading-minor test).
inline Lattice make_lattice(const RatMatrix& gram) {
  if (!gram.is_square())
    fail(errc::not_symmetric, "Gram matrix must be square");
  if (gram.rows() < 2)
    fail(errc::parse_error, "lattice dimension must be at least 2");
  if (!gram.is_symmetric())
    fail(errc::not_symmetric, "Gram matrix must be symmetric");
  for (int k = 1; k <= gram.rows(); ++k)
    if (det(gram.block(0, 0, k, k)) <= 0)
      fail(errc::not_positive_definite,
           "leading principal minor " + std::to_string(k) + " is not positive");
  return Lattice(gram);
}

class SimilarityMap {
 public:
  const Lattice& lattice() const { return lattice_; }
  const RatMatrix& transform() const { return t_; }
  const Rational& multiplier() const { return m_; }
  int dim() const { return lattice_.dim(); }
  bool is_coincidence() const { return m_ == 1; }

  friend SimilarityMap validate_similarity(const Lattice& l, const RatMatrix& t);

 private:
  SimilarityMap(Lattice l, RatMatrix t, Rational m)
      : lattice_(std::move(l)), t_(std::move(t)), m_(std::move(m)) {}

  Lattice lattice_;
  RatMatrix t_;
  Rational m_;
};

// The single validation path for maps. Recovers m from the (0,0) entry
// ratio and verifies T' G T = m G entrywise; rejects singular and
// orientation-reversing transforms. Stored maps satisfy det T = +m^{d/2}.
//
// Determinant sign: in even dimension a negative determinant means the
// underlying rotation is improper and the transform is rejected. In odd
// dimension the sign belongs to the scale, not the rotation (T and -T span
// the same lattice and -T = |scale| * R with R still proper), so the
// canonical positive-determinant representative is stored instead.
inline SimilarityMap validate_similarity(const Lattice& l, const RatMatrix& t) {
  int d = l.dim();
  if (!t.is_square() || t.rows() != d)
    fail(errc::not_similarity, "transform must be a " + std::to_string(d) + "x" +
                                   std::to_string(d) + " matrix");
  Rational dt = det(t);
  if (dt == 0) fail(errc::singular, "transform is singular");
  const RatMatrix& g = l.gram();
  RatMatrix s = t.transpose() * g * t;
  Rational m = s(0, 0) / g(0, 0);  // G(0,0) > 0 by positive definiteness
  if (m <= 0) fail(errc::not_similarity, "recovered multiplier is not positive");
  if (!(s == m * g))
    fail(errc::not_similarity, "T'GT is not a rational multiple of G");
  if (dt < 0) {
    if (d % 2 == 0)
      fail(errc::orientation_reversing, "transform reverses orientation");
    return SimilarityMap(l, -t, m);
  }
  return SimilarityMap(l, t, m);
}

// A similarity map with multiplier 1: the rotation itself maps the lattice
// to a commensurate copy.
class CoincidenceMap {
 public:
  explicit CoincidenceMap(SimilarityMap map) : map_(std::move(map)) {
    if (!map_.is_coincidence())
      fail(errc::internal, "coincidence map must have multiplier 1");
  }

  const SimilarityMap& map() const { return map_; }
  const RatMatrix& transform() const { return map_.transform(); }
  const Lattice& lattice() const { return map_.lattice(); }

  friend bool operator==(const CoincidenceMap& x, const CoincidenceMap& y) {
    return x.transform() == y.transform() && x.lattice() == y.lattice();
  }

 private:
  SimilarityMap map_;
};

struct SigmaPair {
  Int sigma1;  // [Gamma : Gamma ∩ T Gamma]
  Int sigma2;  // [T Gamma : Gamma ∩ T Gamma]

  friend bool operator==(const SigmaPair&, const SigmaPair&) = default;
};

// Coincidence indices through the intersection lattice. In lattice
// coordinates Gamma = Z^d and T Gamma = T * Z^d.
inline SigmaPair coincidence_index(const SimilarityMap& s) {
  int d = s.dim();
  RatMatrix id = to_rational(IntMatrix::identity(d));
  RatMatrix c = lattice_intersection(id, s.transform());
  SigmaPair out{index_of_sublattice(id, c),
                index_of_sublattice(s.transform(), c)};
  // determinant bookkeeping: sigma1 / sigma2 = |det T| = m^{d/2}
  Rational dt = det(s.transform());
  if (Rational(out.sigma1, out.sigma2) != (dt < 0 ? Rational(-dt) : dt))
    fail(errc::internal, "sigma ratio disagrees with det T");
  return out;
}

inline SimilarityMap compose(const SimilarityMap& s1, const SimilarityMap& s2) {
  if (!(s1.lattice() == s2.lattice()))
    fail(errc::lattice_mismatch, "maps act on different lattices");
  SimilarityMap out =
      validate_similarity(s1.lattice(), s1.transform() * s2.transform());
  if (out.multiplier() != s1.multiplier() * s2.multiplier())
    fail(errc::internal, "multiplier is not multiplicative");
  return out;
}

inline SimilarityMap invert(const SimilarityMap& s) {
  SimilarityMap out = validate_similarity(s.lattice(), rat_inverse(s.transform()));
  if (out.multiplier() * s.multiplier() != 1)
    fail(errc::internal, "inverse multiplier mismatch");
  return out;
}

// Divides out the scale when m is a rational square; the underlying
// rotation is then itself a coincidence rotation. Otherwise the map lies
// outside the coincidence group and NotCoincidence is raised.
inline CoincidenceMap normalize_to_coincidence(const SimilarityMap& s) {
  if (!is_rational_square(s.multiplier()))
    fail(errc::not_coincidence, "multiplier " + format_rational(s.multiplier()) +
                                    " is not the square of a rational");
  Rational q = rational_sqrt(s.multiplier());
  RatMatrix t = s.transform() * Rational(den(q), num(q));
  return CoincidenceMap(validate_similarity(s.lattice(), t));
}

}  // namespace csl
