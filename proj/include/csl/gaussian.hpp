#pragma once

// Exact arithmetic in Z[i] and Q(i): norms, Euclidean gcd, prime splitting,
// and unique factorization. Conventions fixed here and used everywhere:
//   * units are i^k, k in 0..3;
//   * the canonical associate of z != 0 has re > 0, im >= 0;
//   * for a split prime p = 1 (mod 4), omega_p = a + b i is the canonical
//     solution of a^2 + b^2 = p with a > b > 0, and its conjugate is the
//     second prime above p.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csl/numbers.hpp"

namespace csl {

struct GaussInt {
  Int re;
  Int im;

  GaussInt() : re(0), im(0) {}
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussInt conj() const { return {re, -im}; }

  friend GaussInt operator-(const GaussInt& z) { return {-z.re, -z.im}; }

  friend GaussInt operator+(const GaussInt& z, const GaussInt& w) {
    return {z.re + w.re, z.im + w.im};
  }

  friend GaussInt operator-(const GaussInt& z, const GaussInt& w) {
    return {z.re - w.re, z.im - w.im};
  }

  friend GaussInt operator*(const GaussInt& z, const GaussInt& w) {
    return {z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re};
  }

  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

inline Int gauss_norm(const GaussInt& z) { return z.re * z.re + z.im * z.im; }

inline bool is_gauss_unit(const GaussInt& z) { return gauss_norm(z) == 1; }

// z * i^k
inline GaussInt mul_unit(const GaussInt& z, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.im, z.re};
    case 2: return -z;
    default: return {z.im, -z.re};
  }
}

inline GaussInt unit_power(int k) { return mul_unit(GaussInt(1, 0), k); }

// Nearest-lattice-point division: z = q*w + r with N(r) <= N(w)/2.
inline std::pair<GaussInt, GaussInt> gauss_divmod(const GaussInt& z, const GaussInt& w) {
  if (w.is_zero()) fail(errc::division_by_zero, "Gaussian division by zero");
  GaussInt zw = z * w.conj();
  Int n = gauss_norm(w);
  GaussInt q{round_div(zw.re, n), round_div(zw.im, n)};
  return {q, z - q * w};
}

inline bool gauss_divides(const GaussInt& d, const GaussInt& z) {
  if (d.is_zero()) return z.is_zero();
  return gauss_divmod(z, d).second.is_zero();
}

inline GaussInt gauss_div_exact(const GaussInt& z, const GaussInt& d) {
  auto [q, r] = gauss_divmod(z, d);
  if (!r.is_zero()) fail(errc::internal, "inexact Gaussian division");
  return q;
}

// Canonical associate (re > 0, im >= 0) and the unit exponent k with
// i^k * z = associate. Exactly one of the four associates qualifies.
inline std::pair<GaussInt, int> canonical_associate(const GaussInt& z) {
  if (z.is_zero()) fail(errc::zero_input, "zero has no canonical associate");
  GaussInt w = z;
  for (int k = 0; k < 4; ++k) {
    if (w.re > 0 && w.im >= 0) return {w, k};
    w = mul_unit(w, 1);
  }
  fail(errc::internal, "no canonical associate found");
}

// Euclidean gcd, canonicalized to the first-quadrant associate.
inline GaussInt gauss_gcd(GaussInt z, GaussInt w) {
  if (z.is_zero() && w.is_zero())
    fail(errc::both_zero, "gcd of two zero Gaussian integers");
  while (!w.is_zero()) {
    GaussInt r = gauss_divmod(z, w).second;
    z = w;
    w = r;
  }
  return canonical_associate(z).first;
}

// The canonical Gaussian prime above a rational prime p = 1 (mod 4).
inline GaussInt find_split_prime(const Int& p) {
  if (p % 4 != 1 || !is_prime(p))
    fail(errc::not_split_prime,
         p.str() + " is not a prime congruent to 1 mod 4");
  for (Int b = 1; 2 * b * b < p; ++b) {
    Int a2 = p - b * b;
    if (is_perfect_square(a2)) return {sqrt_exact(a2), b};  // a > b is automatic
  }
  fail(errc::internal, "no two-square decomposition found for split prime " + p.str());
}

// z = i^unit_exp * (1+i)^exp_one_plus_i * prod omega_p^a_p conj(omega_p)^b_p
//   * prod q^c_q over inert primes q = 3 (mod 4).
struct GaussFactorization {
  int unit_exp = 0;                               // 0..3
  long exp_one_plus_i = 0;                        // >= 0
  std::map<Int, std::pair<long, long>> split;     // p -> (a_p, b_p)
  std::map<Int, long> inert;                      // q -> c_q

  GaussInt reconstruct() const {
    GaussInt z = unit_power(unit_exp);
    for (long k = 0; k < exp_one_plus_i; ++k) z = z * GaussInt(1, 1);
    for (const auto& [p, ab] : split) {
      GaussInt w = find_split_prime(p);
      for (long k = 0; k < ab.first; ++k) z = z * w;
      for (long k = 0; k < ab.second; ++k) z = z * w.conj();
    }
    for (const auto& [q, c] : inert)
      for (long k = 0; k < c; ++k) z = z * GaussInt(q, 0);
    return z;
  }

  friend bool operator==(const GaussFactorization&, const GaussFactorization&) = default;
};

inline GaussFactorization gauss_factor(const GaussInt& z) {
  if (z.is_zero()) fail(errc::zero_input, "cannot factor zero");
  GaussFactorization out;
  GaussInt rest = z;
  for (const auto& [p, e] : factor_integer(gauss_norm(z))) {
    if (p == 2) {
      out.exp_one_plus_i = e;
      for (int k = 0; k < e; ++k) rest = gauss_div_exact(rest, GaussInt(1, 1));
    } else if (p % 4 == 1) {
      GaussInt w = find_split_prime(p);
      long a = 0, b = 0;
      while (gauss_divides(w, rest)) {
        rest = gauss_div_exact(rest, w);
        ++a;
      }
      GaussInt wc = w.conj();
      while (gauss_divides(wc, rest)) {
        rest = gauss_div_exact(rest, wc);
        ++b;
      }
      if (a + b != e) fail(errc::internal, "split exponents disagree with the norm");
      out.split[p] = {a, b};
    } else {
      if (e % 2 != 0) fail(errc::internal, "odd inert exponent in a Gaussian norm");
      long c = e / 2;
      for (long k = 0; k < c; ++k) rest = gauss_div_exact(rest, GaussInt(p, 0));
      out.inert[p] = c;
    }
  }
  for (int k = 0; k < 4; ++k) {
    if (rest == unit_power(k)) {
      out.unit_exp = k;
      return out;
    }
  }
  fail(errc::internal, "factorization residue is not a unit");
}

// num / den with den > 0 and no rational prime dividing both (a rational
// prime divides a Gaussian integer iff it divides both components).
struct GaussRational {
  GaussInt num;
  Int den;

  GaussRational() : num(1, 0), den(1) {}
  GaussRational(GaussInt n, Int d) : num(std::move(n)), den(std::move(d)) {}

  Rational real() const { return Rational(num.re, den); }
  Rational imag() const { return Rational(num.im, den); }

  Rational norm() const { return Rational(gauss_norm(num), den * den); }
  bool is_unit_modulus() const { return gauss_norm(num) == den * den; }

  GaussRational conj() const { return {num.conj(), den}; }

  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

inline GaussRational make_gauss_rational(GaussInt num, Int den) {
  if (den == 0) fail(errc::division_by_zero, "Gaussian rational with zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  Int g = gcd_int(gcd_int(abs_int(num.re), abs_int(num.im)), den);
  if (g > 1) {
    num.re /= g;
    num.im /= g;
    den /= g;
  }
  return {num, den};
}

inline GaussRational operator*(const GaussRational& x, const GaussRational& y) {
  return make_gauss_rational(x.num * y.num, x.den * y.den);
}

// z / conj(z) = z^2 / N(z); unit modulus by construction.
inline GaussRational gauss_over_conj(const GaussInt& z) {
  if (z.is_zero()) fail(errc::zero_input, "zero has no direction");
  return make_gauss_rational(z * z, gauss_norm(z));
}

inline std::string format_gauss_int(const GaussInt& z) {
  if (z.im == 0) return z.re.str();
  std::string out;
  if (z.re != 0) out += z.re.str();
  if (z.im > 0 && z.re != 0) out += "+";
  if (z.im == -1)
    out += "-";
  else if (z.im != 1)
    out += z.im.str();
  out += "i";
  return out;
}

inline std::string format_gauss_rational(const GaussRational& q) {
  if (q.den == 1) return format_gauss_int(q.num);
  return "(" + format_gauss_int(q.num) + ")/" + q.den.str();
}

namespace gauss_detail {

// One signed term of a complex literal: integer, "i", "3i", "-i", ...
struct Term {
  Int value;
  bool imaginary;
};

inline std::string strip_space(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline GaussInt parse_complex_body(const std::string& s, const std::string& original) {
  if (s.empty()) fail(errc::parse_error, "empty complex literal: '" + original + "'");
  std::vector<Term> terms;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t start = pos;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++digits;
    }
    bool imag = pos < s.size() && s[pos] == 'i';
    if (imag) ++pos;
    if (digits == 0 && !imag)
      fail(errc::parse_error, "malformed complex literal: '" + original + "'");
    std::string body = s.substr(start, pos - start - (imag ? 1 : 0));
    Int v;
    if (body.empty() || body == "+")
      v = 1;
    else if (body == "-")
      v = -1;
    else
      v = parse_int(body);
    terms.push_back({v, imag});
  }
  if (terms.size() > 2)
    fail(errc::parse_error, "complex literal has too many terms: '" + original + "'");
  GaussInt z;
  bool seen_re = false, seen_im = false;
  for (const Term& t : terms) {
    if (t.imaginary) {
      if (seen_im) fail(errc::parse_error, "duplicate imaginary part: '" + original + "'");
      z.im = t.value;
      seen_im = true;
    } else {
      if (seen_re) fail(errc::parse_error, "duplicate real part: '" + original + "'");
      z.re = t.value;
      seen_re = true;
    }
  }
  return z;
}

}  // namespace gauss_detail

// Grammar: "a+bi" | "a-bi" | "bi" | "a" | "(a+bi)/c", whitespace-insensitive.
inline GaussRational parse_gauss_rational(std::string_view text) {
  std::string s = gauss_detail::strip_space(text);
  std::string original(text);
  if (!s.empty() && s.front() == '(') {
    size_t close = s.find(')');
    if (close == std::string::npos)
      fail(errc::parse_error, "unbalanced parenthesis: '" + original + "'");
    GaussInt z = gauss_detail::parse_complex_body(s.substr(1, close - 1), original);
    std::string tail = s.substr(close + 1);
    if (tail.empty()) return make_gauss_rational(z, 1);
    if (tail.size() < 2 || tail[0] != '/')
      fail(errc::parse_error, "expected '/denominator': '" + original + "'");
    Int d = parse_int(tail.substr(1));
    if (d == 0) fail(errc::parse_error, "zero denominator: '" + original + "'");
    return make_gauss_rational(z, d);
  }
  return make_gauss_rational(gauss_detail::parse_complex_body(s, original), 1);
}

inline GaussInt parse_gauss_int(std::string_view text) {
  GaussRational q = parse_gauss_rational(text);
  if (q.den != 1)
    fail(errc::parse_error, "expected a Gaussian integer: '" + std::string(text) + "'");
  return q.num;
}

}  // namespace csl
