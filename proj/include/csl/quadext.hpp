#pragma once

// Elements a + b*sqrt(n) of a real quadratic field Q(sqrt(n)), n squarefree
// and >= 2. One radicand per computation context; mixing radicands is an
// error. Purely rational values carry no radicand and combine with any
// context. This is the only place irrational scalars exist in the library.

#include <string>

#include "csl/numbers.hpp"

namespace csl {

class QuadExt {
 public:
  QuadExt() = default;  // zero, no radicand

  explicit QuadExt(Rational a) : a_(std::move(a)) {}

  QuadExt(Rational a, Rational b, long n) : a_(std::move(a)), b_(std::move(b)) {
    if (b_ != 0) {
      check_radicand(n);
      n_ = n;
    }
  }

  static QuadExt sqrt_of(long n) { return QuadExt(Rational(0), Rational(1), n); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long radicand() const { return n_; }  // 0 when the value is rational

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  const Rational& rational_value() const {
    if (!is_rational()) fail(errc::internal, "irrational QuadExt has no rational value");
    return a_;
  }

  QuadExt conj() const { return QuadExt(a_, -b_, n_); }

  // Field norm a^2 - n*b^2; zero only for the zero element.
  Rational norm() const { return a_ * a_ - Rational(n_) * b_ * b_; }

  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.n_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    long n = merge_radicand(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, n);
  }

  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long n = merge_radicand(x, y);
    return QuadExt(x.a_ * y.a_ + Rational(n) * x.b_ * y.b_,
                   x.a_ * y.b_ + x.b_ * y.a_, n);
  }

  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) fail(errc::division_by_zero, "division by zero in Q(sqrt(n))");
    long n = merge_radicand(x, y);
    (void)n;
    Rational nrm = y.norm();  // nonzero: sqrt(n) is irrational
    QuadExt t = x * y.conj();
    return QuadExt(t.a_ / nrm, t.b_ / nrm, t.n_);
  }

  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    // equal irrational parts: radicands must agree unless both vanish
    return x.b_ == 0 || x.n_ == y.n_;
  }

 private:
  static void check_radicand(long n) {
    if (n < 2) fail(errc::internal, "radicand must be >= 2");
    for (long p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) fail(errc::internal, "radicand must be squarefree");
  }

  // Unify contexts; 0 (pure rational) is compatible with anything.
  static long merge_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.n_ == 0) return y.n_;
    if (y.n_ == 0) return x.n_;
    if (x.n_ != y.n_)
      fail(errc::mixed_field, "operands live in different quadratic fields");
    return x.n_;
  }

  Rational a_{0};
  Rational b_{0};
  long n_ = 0;
};

// Single-entry-point arithmetic over Q(sqrt(n)), op one of + - * /.
inline QuadExt quad_arith(const QuadExt& x, const QuadExt& y, char op) {
  switch (op) {
    case '+': return x + y;
    case '-': return x - y;
    case '*': return x * y;
    case '/': return x / y;
  }
  fail(errc::internal, std::string("unknown quad_arith op '") + op + "'");
}

// "a+b*sqrt(n)"; rational values print as plain rationals.
inline std::string format_quadext(const QuadExt& x) {
  if (x.is_rational()) return format_rational(x.a());
  std::string out = format_rational(x.a());
  const Rational& b = x.b();
  out += (b < 0) ? "-" : "+";
  Rational babs = b < 0 ? Rational(-b) : b;
  out += format_rational(babs) + "*sqrt(" + std::to_string(x.radicand()) + ")";
  return out;
}

}  // namespace csl
