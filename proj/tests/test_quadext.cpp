#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "csl/quadext.hpp"

using namespace csl;

namespace {

QuadExt qe(long a, long b, long n = 2) {
  return QuadExt(Rational(a), Rational(b), n);
}

}  // namespace

TEST_CASE("quadratic field arithmetic on the worked values") {
  // (1 + sqrt 2)(1 - sqrt 2) = -1
  CHECK(quad_arith(qe(1, 1), qe(1, -1), '*') == qe(-1, 0));
  // (sqrt 2)^2 = 2
  CHECK(quad_arith(qe(0, 1), qe(0, 1), '*') == qe(2, 0));
  // 1 / (1 + sqrt 2) = -1 + sqrt 2, verified by multiplying back
  QuadExt inv = quad_arith(qe(1, 0), qe(1, 1), '/');
  CHECK(inv == qe(-1, 1));
  CHECK(quad_arith(inv, qe(1, 1), '*') == qe(1, 0));
}

TEST_CASE("division by zero and mixed radicands are rejected") {
  CHECK_THROWS_AS(quad_arith(qe(1, 1), qe(0, 0), '/'), Error);
  try {
    quad_arith(qe(1, 1, 2), qe(1, 1, 3), '+');
    FAIL("mixed radicands must not combine");
  } catch (const Error& e) {
    CHECK(e.code() == errc::mixed_field);
  }
  // rational values are compatible with any radicand
  CHECK(quad_arith(qe(3, 0, 2), qe(1, 1, 3), '+') == qe(4, 1, 3));
}

TEST_CASE("rationality is exactly b == 0") {
  CHECK(qe(5, 0).is_rational());
  CHECK_FALSE(qe(5, 1).is_rational());
  // (1+sqrt2)(1-sqrt2) lands back in Q
  CHECK(quad_arith(qe(1, 1), qe(1, -1), '*').is_rational());
  CHECK(qe(7, 0).rational_value() == Rational(7));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(2026);
  auto draw = [&]() {
    std::uniform_int_distribution<long> d(-6, 6);
    std::uniform_int_distribution<long> pos(1, 4);
    return QuadExt(Rational(d(rng), pos(rng)), Rational(d(rng), pos(rng)), 2);
  };
  for (int it = 0; it < 200; ++it) {
    QuadExt x = draw(), y = draw(), z = draw();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    if (!x.is_zero()) CHECK(x / x == QuadExt(Rational(1)));
  }
}

TEST_CASE("norm is multiplicative and vanishes only at zero") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int it = 0; it < 100; ++it) {
    QuadExt x = qe(d(rng), d(rng), 3), y = qe(d(rng), d(rng), 3);
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!x.is_zero()) CHECK(x.norm() != 0);
  }
}

TEST_CASE("formatting") {
  CHECK(format_quadext(qe(1, 1)) == "1+1*sqrt(2)");
  CHECK(format_quadext(qe(0, -1, 5)) == "0-1*sqrt(5)");
  CHECK(format_quadext(QuadExt(Rational(3, 4))) == "3/4");
}
