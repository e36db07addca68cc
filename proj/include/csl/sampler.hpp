#pragma once

// Seeded generators for lattices and valid similarity maps, used by the
// verification suites and the test harness. Constructions:
//   * Z^2: multiplication by a Gaussian integer (multiplier N(z)), and
//     coincidence rotations z/conj(z);
//   * hexagonal: multiplication by a + b*w with w^2 = w - 1 gives the
//     integer matrix [[a,-b],[b,a+b]] with multiplier a^2+ab+b^2;
//   * any rational Gram: Cayley transform (I-A)(I+A)^-1 of a G-antisymmetric
//     rational A yields a rational coincidence rotation;
//   * Z^4: left multiplication by a Lipschitz quaternion, multiplier = its
//     norm (the generic source of non-square multipliers in dimension 4).
// Rational rescaling b*T multiplies the multiplier by b^2 throughout.

#include <random>

#include "csl/lattice.hpp"
#include "csl/soc_sos.hpp"

namespace csl {

inline const Lattice& hexagonal_lattice() {
  static const Lattice l =
      make_lattice(RatMatrix(2, 2, {Rational(2), Rational(1), Rational(1), Rational(2)}));
  return l;
}

inline Lattice cubic_lattice(int d) {
  return make_lattice(to_rational(IntMatrix::identity(d)));
}

// Multiplication by z on Z[i], in lattice coordinates.
inline SimilarityMap z2_multiplication_map(const GaussInt& z) {
  if (z.is_zero()) fail(errc::zero_input, "multiplication by zero");
  RatMatrix t(2, 2, {Rational(z.re), Rational(-z.im), Rational(z.im), Rational(z.re)});
  return validate_similarity(z2_lattice(), t);
}

// Multiplication by a + b*w on the hexagonal lattice.
inline SimilarityMap hex_multiplication_map(const Int& a, const Int& b) {
  if (a == 0 && b == 0) fail(errc::zero_input, "multiplication by zero");
  RatMatrix t(2, 2, {Rational(a), Rational(-b), Rational(b), Rational(a + b)});
  return validate_similarity(hexagonal_lattice(), t);
}

class MapSampler {
 public:
  explicit MapSampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational nonzero_rational(long max_abs) {
    long n = 0;
    while (n == 0) n = uniform(-max_abs, max_abs);
    return Rational(n, uniform(1, max_abs));
  }

  GaussInt nonzero_gauss(long max_component) {
    for (;;) {
      GaussInt z(uniform(-max_component, max_component),
                 uniform(-max_component, max_component));
      if (!z.is_zero()) return z;
    }
  }

  GaussInt gauss_with_norm_at_most(const Int& max_norm) {
    long r = 1;
    while (Int(r + 1) * (r + 1) * 2 <= max_norm) ++r;
    for (;;) {
      GaussInt z = nonzero_gauss(r);
      if (gauss_norm(z) <= max_norm) return z;
    }
  }

  Lattice random_diag_lattice(int d, long max_entry) {
    RatMatrix g(d, d);
    for (int i = 0; i < d; ++i) g(i, i) = Rational(uniform(1, max_entry));
    return make_lattice(g);
  }

  SimilarityMap z2_similarity(long max_component) {
    return z2_multiplication_map(nonzero_gauss(max_component));
  }

  SimilarityMap z2_coincidence(long max_component) {
    return soc_matrix(gauss_over_conj(nonzero_gauss(max_component))).map();
  }

  SimilarityMap hex_similarity(long max_component) {
    Int a = uniform(-max_component, max_component);
    Int b = uniform(-max_component, max_component);
    if (a == 0 && b == 0) a = 1;
    return hex_multiplication_map(a, b);
  }

  // u / conj(u) for an Eisenstein-style unit-modulus quotient.
  SimilarityMap hex_coincidence(long max_component) {
    SimilarityMap up = hex_similarity(max_component);
    return compose(up, invert(conj_of(up)));
  }

  // Rational coincidence rotation of an arbitrary lattice via the Cayley
  // transform of A = G^-1 S, S antisymmetric with small rational entries.
  SimilarityMap cayley_coincidence(const Lattice& l, long max_abs) {
    int d = l.dim();
    for (;;) {
      RatMatrix s(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          s(i, j) = Rational(uniform(-max_abs, max_abs), uniform(1, max_abs));
          s(j, i) = -s(i, j);
        }
      RatMatrix a = solve(l.gram(), s);
      RatMatrix id = to_rational(IntMatrix::identity(d));
      if (det(id + a) == 0) continue;
      RatMatrix r = (id - a) * inverse(id + a);
      return validate_similarity(l, r);
    }
  }

  // Left multiplication by the quaternion (a, b, c, d) on Z^4.
  SimilarityMap z4_similarity(long max_component) {
    Int a = uniform(-max_component, max_component);
    Int b = uniform(-max_component, max_component);
    Int c = uniform(-max_component, max_component);
    Int e = uniform(-max_component, max_component);
    if (a == 0 && b == 0 && c == 0 && e == 0) a = 1;
    RatMatrix t(4, 4,
                {Rational(a), Rational(-b), Rational(-c), Rational(-e),
                 Rational(b), Rational(a), Rational(-e), Rational(c),
                 Rational(c), Rational(e), Rational(a), Rational(-b),
                 Rational(e), Rational(-c), Rational(b), Rational(a)});
    return validate_similarity(cubic_lattice(4), t);
  }

  SimilarityMap rescale(const SimilarityMap& s, const Rational& b) {
    if (b == 0) fail(errc::zero_input, "rescaling by zero");
    return validate_similarity(s.lattice(), s.transform() * b);
  }

  // A valid similarity map on the given lattice: special generators for the
  // lattices with known multiplication structure, Cayley + rational scale
  // otherwise.
  SimilarityMap random_similarity(const Lattice& l, long size = 5) {
    if (l == z2_lattice()) {
      switch (uniform(0, 2)) {
        case 0: return z2_similarity(size);
        case 1: return z2_coincidence(size);
        default: return rescale(z2_similarity(size), nonzero_rational(size));
      }
    }
    if (l == hexagonal_lattice()) {
      switch (uniform(0, 2)) {
        case 0: return hex_similarity(size);
        case 1: return hex_coincidence(size);
        default: return rescale(hex_similarity(size), nonzero_rational(size));
      }
    }
    if (l.dim() == 4 && l == cubic_lattice(4)) {
      if (uniform(0, 1) == 0) return z4_similarity(size);
      return rescale(z4_similarity(size), nonzero_rational(size));
    }
    SimilarityMap r = cayley_coincidence(l, size);
    if (uniform(0, 1) == 0) return r;
    return rescale(r, nonzero_rational(size));
  }

 private:
  // The conjugate map of a hexagonal multiplication map (entries read back
  // from the matrix shape [[a,-b],[b,a+b]]).
  static SimilarityMap conj_of(const SimilarityMap& up) {
    Rational a = up.transform()(0, 0);
    Rational b = up.transform()(1, 0);
    RatMatrix t(2, 2, {a + b, b, -b, a});
    return validate_similarity(hexagonal_lattice(), t);
  }

  std::mt19937_64 rng_;
};

}  // namespace csl
