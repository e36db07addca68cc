#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and rationals,
// plus the small pieces of multiplicative number theory the rest of the
// library leans on (trial-division factorization, squarefree parts,
// exact square tests). No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "csl/error.hpp"

namespace csl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Canonical rational from a (possibly negative-denominator) pair.
inline Rational make_rational(Int n, Int d) {
  if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

inline Int abs_int(const Int& x) { return boost::multiprecision::abs(x); }
inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int pow_int(const Int& base, unsigned long e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest-integer division, ties rounded toward +infinity.
inline Int round_div(const Int& a, const Int& b) {
  Int twice = 2 * a + b;
  return floor_div(twice, 2 * b);
}

inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

// Exact square root of a perfect square; error otherwise.
inline Int sqrt_exact(const Int& n) {
  Int r = isqrt(n);
  if (r * r != n) fail(errc::internal, "sqrt_exact of a non-square");
  return r;
}

inline bool is_rational_square(const Rational& q) {
  return q >= 0 && is_perfect_square(num(q)) && is_perfect_square(den(q));
}

inline Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q))
    fail(errc::internal, "rational_sqrt of a non-square");
  return Rational(sqrt_exact(num(q)), sqrt_exact(den(q)));
}

// Trial division; fine at desk scale (inputs here stay far below 2^64).
inline std::map<Int, int> factor_integer(Int n) {
  if (n <= 0) fail(errc::internal, "factor_integer expects n >= 1");
  std::map<Int, int> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out[p] = e;
  }
  if (n > 1) out[n] += 1;
  return out;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

// Largest squarefree divisor class: product of primes with odd exponent.
inline Int squarefree_part(const Int& n) {
  if (n <= 0) fail(errc::internal, "squarefree_part expects n >= 1");
  Int sf = 1;
  for (const auto& [p, e] : factor_integer(n))
    if (e % 2 != 0) sf *= p;
  return sf;
}

// Squarefree part of a positive rational: sf(p/q) = sf(p*q) = sf(p)*sf(q)
// since p, q are coprime.
inline Int squarefree_part(const Rational& q) {
  if (q <= 0) fail(errc::internal, "squarefree_part expects a positive rational");
  return squarefree_part(num(q)) * squarefree_part(den(q));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

inline Int parse_int(std::string_view text) {
  auto s = detail::trim(text);
  if (!detail::is_decimal_integer(s))
    fail(errc::parse_error, "malformed integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.remove_prefix(1);  // cpp_int rejects a leading '+'
  return Int(std::string(s));
}

// "p/q" or "p", optional sign on either component.
inline Rational parse_rational(std::string_view text) {
  auto s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int n = parse_int(s.substr(0, slash));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) fail(errc::parse_error, "rational with zero denominator: '" + std::string(text) + "'");
  return make_rational(n, d);
}

// Lowest terms, "/1" suppressed.
inline std::string format_rational(const Rational& q) {
  std::string out = num(q).str();
  if (den(q) != 1) out += "/" + den(q).str();
  return out;
}

}  // namespace csl
