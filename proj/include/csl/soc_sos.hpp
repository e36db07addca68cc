#pragma once

// The planar theory on Z^2 = Z[i].
//
// A coincidence rotation of Z^2 is a unit-modulus element of Q(i) and
// factorizes uniquely as
//     q = i^k * prod_{p = 1 (4)} (omega_p / conj(omega_p))^{n_p},
// a direction z/|z| of a nonzero Gaussian integer factorizes uniquely as
//     z/|z| = ((1+i)/sqrt 2)^k * prod (omega_p / sqrt p)^{l_p},  0 <= k < 8.
// Irrational magnitudes are never evaluated; they exist purely as exponent
// bookkeeping. Squaring a direction halves into the first form through
// (omega_p/sqrt p)^2 = omega_p/conj(omega_p) and ((1+i)/sqrt 2)^2 = i.

#include <algorithm>
#include <vector>

#include "csl/gaussian.hpp"
#include "csl/lattice.hpp"

namespace csl {

struct SocFactorization {
  int unit_exp = 0;              // epsilon = i^unit_exp, 0..3
  std::map<Int, long> factors;   // p -> n_p, p = 1 (mod 4) prime, n_p != 0

  friend bool operator==(const SocFactorization&, const SocFactorization&) = default;
};

struct SosFactorization {
  int eighth_exp = 0;            // power of (1+i)/sqrt(2), 0..7
  std::map<Int, long> factors;   // p -> l_p, nonzero

  friend bool operator==(const SosFactorization&, const SosFactorization&) = default;
};

inline GaussRational reconstruct(const SocFactorization& f) {
  GaussInt num = unit_power(f.unit_exp);
  Int den = 1;
  for (const auto& [p, n] : f.factors) {
    GaussInt w = find_split_prime(p);
    if (n < 0) w = w.conj();
    long e = n < 0 ? -n : n;
    for (long k = 0; k < 2 * e; ++k) num = num * w;
    den *= pow_int(p, static_cast<unsigned long>(e));
  }
  return make_gauss_rational(num, den);  // (w/conj w)^n = w^{2n} / p^n
}

// Unique factorization of a unit-modulus element of Q(i).
inline SocFactorization soc_factorize(const GaussRational& q0) {
  GaussRational q = make_gauss_rational(q0.num, q0.den);  // enforce lowest terms
  if (!q.is_unit_modulus())
    fail(errc::not_unit_modulus,
         format_gauss_rational(q) + " does not have unit modulus");
  GaussFactorization f = gauss_factor(q.num);
  if (f.exp_one_plus_i != 0 || !f.inert.empty())
    fail(errc::internal, "reduced unit-modulus numerator has ramified or inert part");
  SocFactorization out;
  out.unit_exp = f.unit_exp;
  Int den_check = 1;
  for (const auto& [p, ab] : f.split) {
    auto [a, b] = ab;
    if ((a != 0 && b != 0) || (a + b) % 2 != 0)
      fail(errc::internal, "unit-modulus numerator has unbalanced split exponents");
    long n = a != 0 ? a / 2 : -(b / 2);
    out.factors[p] = n;
    den_check *= pow_int(p, static_cast<unsigned long>(a != 0 ? a / 2 : b / 2));
  }
  if (den_check != q.den)
    fail(errc::internal, "denominator disagrees with split exponents");
  return out;
}

// Direction decomposition of a nonzero Gaussian integer. From the full
// factorization: l_p = a_p - b_p, and the eighth-root exponent is
// e + 2*unit_exp mod 8. Inert primes and conjugate pairs only scale.
inline SosFactorization sos_decompose(const GaussInt& z) {
  if (z.is_zero()) fail(errc::zero_input, "zero has no direction");
  GaussFactorization f = gauss_factor(z);
  SosFactorization out;
  out.eighth_exp = static_cast<int>((f.exp_one_plus_i + 2 * f.unit_exp) % 8);
  for (const auto& [p, ab] : f.split)
    if (ab.first != ab.second) out.factors[p] = ab.first - ab.second;
  return out;
}

// Squaring the direction: the eighth root squares to i, each omega/sqrt(p)
// squares to omega/conj(omega), exponents carry over unchanged.
inline SocFactorization sos_square_to_soc(const SosFactorization& s) {
  SocFactorization out;
  out.unit_exp = s.eighth_exp % 4;
  out.factors = s.factors;
  return out;
}

// A direction as exact data: value = w / sqrt(radicand), norm(w) = radicand.
struct SosDirection {
  GaussInt w;
  Int radicand;
};

inline SosDirection reconstruct(const SosFactorization& s) {
  GaussInt w = GaussInt(1, 0);
  Int rad = 1;
  for (int k = 0; k < s.eighth_exp; ++k) w = w * GaussInt(1, 1);
  rad <<= s.eighth_exp;
  for (const auto& [p, l] : s.factors) {
    GaussInt om = find_split_prime(p);
    if (l < 0) om = om.conj();
    long e = l < 0 ? -l : l;
    for (long k = 0; k < e; ++k) w = w * om;
    rad *= pow_int(p, static_cast<unsigned long>(e));
  }
  if (gauss_norm(w) != rad) fail(errc::internal, "direction norm mismatch");
  return {w, rad};
}

inline SosDirection direction_of(const GaussInt& z) {
  if (z.is_zero()) fail(errc::zero_input, "zero has no direction");
  return {z, gauss_norm(z)};
}

// w1/sqrt(r1) == w2/sqrt(r2)  iff  w1 * conj(w2) is the positive real
// square root of r1*r2 (both sides have unit modulus).
inline bool same_direction(const SosDirection& x, const SosDirection& y) {
  GaussInt cross = x.w * y.w.conj();
  return cross.im == 0 && cross.re > 0 && cross.re * cross.re == x.radicand * y.radicand;
}

// The standard square lattice.
inline const Lattice& z2_lattice() {
  static const Lattice l = make_lattice(to_rational(IntMatrix::identity(2)));
  return l;
}

// Multiplication by x + iy as a matrix on Z^2.
inline CoincidenceMap soc_matrix(const GaussRational& q) {
  if (!q.is_unit_modulus())
    fail(errc::not_unit_modulus,
         format_gauss_rational(q) + " does not have unit modulus");
  Rational x = q.real(), y = q.imag();
  RatMatrix t(2, 2, {x, -y, y, x});
  return CoincidenceMap(validate_similarity(z2_lattice(), t));
}

// Sigma = prod p^{|n_p|}; cross-checked against the intersection-index
// machinery in the test suites.
inline Int coincidence_index_z2(const SocFactorization& f) {
  Int sigma = 1;
  for (const auto& [p, n] : f.factors)
    sigma *= pow_int(p, static_cast<unsigned long>(n < 0 ? -n : n));
  return sigma;
}

inline std::vector<Int> split_primes_upto(const Int& bound) {
  std::vector<Int> out;
  for (Int p = 5; p <= bound; p += 4)
    if (is_prime(p)) out.push_back(p);
  return out;
}

namespace soc_detail {

using Pattern = std::vector<std::pair<Int, long>>;

inline void extend_patterns(const std::vector<Int>& primes, size_t from,
                            const Int& budget, Pattern& current,
                            std::vector<Pattern>& out) {
  out.push_back(current);
  for (size_t i = from; i < primes.size(); ++i) {
    Int power = primes[i];
    for (long e = 1; power <= budget; ++e, power *= primes[i]) {
      for (long sign : {-1L, 1L}) {
        current.emplace_back(primes[i], sign * e);
        extend_patterns(primes, i + 1, budget / power, current, out);
        current.pop_back();
      }
    }
  }
}

}  // namespace soc_detail

// All coincidence factorizations with index at most max_index, in the
// documented order: ascending index, then lexicographic exponent data,
// then unit exponent.
inline std::vector<SocFactorization> enumerate_soc_z2(const Int& max_index) {
  if (max_index < 1) fail(errc::parse_error, "max_index must be at least 1");
  std::vector<Int> primes = split_primes_upto(max_index);
  std::vector<soc_detail::Pattern> patterns;
  soc_detail::Pattern current;
  soc_detail::extend_patterns(primes, 0, max_index, current, patterns);

  auto index_of = [](const soc_detail::Pattern& pat) {
    Int s = 1;
    for (const auto& [p, n] : pat) s *= pow_int(p, static_cast<unsigned long>(n < 0 ? -n : n));
    return s;
  };
  std::sort(patterns.begin(), patterns.end(),
            [&](const soc_detail::Pattern& x, const soc_detail::Pattern& y) {
              Int ix = index_of(x), iy = index_of(y);
              if (ix != iy) return ix < iy;
              return x < y;
            });

  std::vector<SocFactorization> out;
  out.reserve(patterns.size() * 4);
  for (const auto& pat : patterns)
    for (int unit = 0; unit < 4; ++unit) {
      SocFactorization f;
      f.unit_exp = unit;
      f.factors.insert(pat.begin(), pat.end());
      out.push_back(std::move(f));
    }
  return out;
}

}  // namespace csl
