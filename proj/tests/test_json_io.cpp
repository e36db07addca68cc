#include <catch2/catch_amalgamated.hpp>

#include "csl/json_io.hpp"

using namespace csl;

TEST_CASE("rational json round trip and canonical form") {
  CHECK(rational_to_json(Rational(3, 5)) == json("3/5"));
  CHECK(rational_to_json(Rational(4)) == json("4"));  // "/1" suppressed
  CHECK(rational_from_json(json("-6/8")) == Rational(-3, 4));
  CHECK(rational_from_json(json(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(json("x")), Error);
  CHECK_THROWS_AS(rational_from_json(json(1.5)), Error);
}

TEST_CASE("matrix json") {
  RatMatrix m(2, 2, {Rational(1, 2), Rational(0), Rational(-1), Rational(3)});
  json j = matrix_to_json(m);
  CHECK(j == json::parse(R"([["1/2","0"],["-1","3"]])"));
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1\"],[\"1\",\"2\"]]")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), Error);
}

TEST_CASE("lattice json") {
  json j = json::parse(R"({"dim": 2, "gram": [["2","1"],["1","2"]]})");
  Lattice l = lattice_from_json(j);
  CHECK(l.dim() == 2);
  CHECK(lattice_to_json(l) == j);
  // dim gets validated against the matrix when present, derived otherwise
  CHECK(lattice_from_json(json::parse(R"({"gram": [["1","0"],["0","1"]]})")).dim() == 2);
  CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"dim": 3, "gram": [["1","0"],["0","1"]]})")),
                  Error);
  CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"gram": [["1","2"],["2","1"]]})")),
                  Error);
}

TEST_CASE("similarity map json") {
  json j = json::parse(
      R"({"T": [["1","-1"],["1","1"]], "lattice": {"dim": 2, "gram": [["1","0"],["0","1"]]}})");
  SimilarityMap s = simmap_from_json(j);
  CHECK(s.multiplier() == 2);
  CHECK(simmap_to_json(s) == j);
  CHECK_THROWS_AS(simmap_from_json(json::parse(R"({"T": [["1"]]})")), Error);
}

TEST_CASE("gauss and factorization json") {
  GaussInt z{Int(-4), Int(7)};
  CHECK(gauss_int_from_json(gauss_int_to_json(z)) == z);
  CHECK(gauss_int_from_json(json("1+i")) == GaussInt{Int(1), Int(1)});

  SocFactorization f;
  f.unit_exp = 1;
  f.factors[Int(5)] = 1;
  f.factors[Int(13)] = -1;
  json fj = soc_to_json(f);
  CHECK(fj == json::parse(R"({"unit_exp": 1, "factors": {"5": 1, "13": -1}})"));
  CHECK(soc_from_json(fj) == f);
  CHECK_THROWS_AS(soc_from_json(json::parse(R"({"unit_exp": 4, "factors": {}})")), Error);
  CHECK_THROWS_AS(soc_from_json(json::parse(R"({"unit_exp": 0, "factors": {"7": 1}})")), Error);
  CHECK_THROWS_AS(soc_from_json(json::parse(R"({"unit_exp": 0, "factors": {"5": 0}})")), Error);

  SosFactorization g;
  g.eighth_exp = 5;
  g.factors[Int(13)] = 2;
  CHECK(sos_from_json(sos_to_json(g)) == g);
}

TEST_CASE("big integers fall back to strings") {
  Int big = pow_int(Int(10), 30);
  json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(int_from_json(j) == big);
  CHECK(int_to_json(Int(42)) == json(42));
}

TEST_CASE("malformed json text") {
  CHECK_THROWS_AS(parse_json_text("{"), Error);
  CHECK(parse_json_text("[1,2]").is_array());
}
