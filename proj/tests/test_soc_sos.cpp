#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "csl/soc_sos.hpp"
#include "oracles.hpp"

using namespace csl;

namespace {

SocFactorization soc(int unit, std::initializer_list<std::pair<long, long>> facs) {
  SocFactorization f;
  f.unit_exp = unit;
  for (auto [p, n] : facs) f.factors[Int(p)] = n;
  return f;
}

SosFactorization sos(int k, std::initializer_list<std::pair<long, long>> facs) {
  SosFactorization f;
  f.eighth_exp = k;
  for (auto [p, n] : facs) f.factors[Int(p)] = n;
  return f;
}

}  // namespace

TEST_CASE("soc_factorize on the worked examples") {
  CHECK(soc_factorize(parse_gauss_rational("i")) == soc(1, {}));
  CHECK(soc_factorize(parse_gauss_rational("(3+4i)/5")) == soc(0, {{5, 1}}));
  CHECK(soc_factorize(parse_gauss_rational("(5+12i)/13")) == soc(0, {{13, 1}}));
  CHECK(soc_factorize(parse_gauss_rational("(3-4i)/5")) == soc(0, {{5, -1}}));
  CHECK_THROWS_AS(soc_factorize(parse_gauss_rational("(3+4i)/6")), Error);
}

TEST_CASE("soc reconstruct is the exact inverse") {
  CHECK(reconstruct(soc(0, {{5, 1}})) == parse_gauss_rational("(3+4i)/5"));
  CHECK(reconstruct(soc(1, {})) == parse_gauss_rational("i"));
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> unit(0, 3);
  std::uniform_int_distribution<long> exp(-3, 3);
  const long primes[] = {5, 13, 17, 29, 37};
  for (int it = 0; it < 150; ++it) {
    SocFactorization f;
    f.unit_exp = int(unit(rng));
    for (long p : primes) {
      long e = exp(rng);
      if (e != 0 && unit(rng) < 2) f.factors[Int(p)] = e;
    }
    GaussRational q = reconstruct(f);
    CHECK(q.is_unit_modulus());
    CHECK(soc_factorize(q) == f);
  }
}

TEST_CASE("soc factorizations multiply componentwise") {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int it = 0; it < 100; ++it) {
    GaussInt z{Int(d(rng)), Int(d(rng))}, w{Int(d(rng)), Int(d(rng))};
    if (z.is_zero() || w.is_zero()) continue;
    SocFactorization fz = soc_factorize(gauss_over_conj(z));
    SocFactorization fw = soc_factorize(gauss_over_conj(w));
    SocFactorization fzw = soc_factorize(gauss_over_conj(z * w));
    SocFactorization sum;
    sum.unit_exp = (fz.unit_exp + fw.unit_exp) % 4;
    sum.factors = fz.factors;
    for (const auto& [p, n] : fw.factors) {
      long m = (sum.factors.count(p) ? sum.factors[p] : 0) + n;
      if (m == 0)
        sum.factors.erase(p);
      else
        sum.factors[p] = m;
    }
    CHECK(fzw == sum);
    // and the same through the rational-quotient product
    CHECK(soc_factorize(gauss_over_conj(z) * gauss_over_conj(w)) == sum);
  }
}

TEST_CASE("sos_decompose on the worked examples") {
  CHECK(sos_decompose({Int(1), Int(1)}) == sos(1, {}));   // the primitive 8th root
  CHECK(sos_decompose({Int(2), Int(1)}) == sos(0, {{5, 1}}));
  CHECK(sos_decompose({Int(3), Int(0)}) == sos(0, {}));   // positive real direction
  CHECK(sos_decompose({Int(0), Int(1)}) == sos(2, {}));   // i is the square of it
  CHECK_THROWS_AS(sos_decompose({Int(0), Int(0)}), Error);
}

TEST_CASE("sos reconstruct matches the original direction symbolically") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int it = 0; it < 150; ++it) {
    GaussInt z{Int(d(rng)), Int(d(rng))};
    if (z.is_zero()) continue;
    SosDirection dir = reconstruct(sos_decompose(z));
    CHECK(gauss_norm(dir.w) == dir.radicand);
    CHECK(same_direction(dir, direction_of(z)));
  }
  // directions distinguish inequivalent inputs
  CHECK_FALSE(same_direction(direction_of({Int(1), Int(1)}), direction_of({Int(1), Int(-1)})));
  CHECK(same_direction(direction_of({Int(1), Int(1)}), direction_of({Int(3), Int(3)})));
}

TEST_CASE("squaring a direction lands on the coincidence factorization") {
  // the three worked cases
  CHECK(sos_square_to_soc(sos(1, {})) == soc(1, {}));
  CHECK(sos_square_to_soc(sos(0, {{5, 1}})) == soc(0, {{5, 1}}));
  CHECK(sos_square_to_soc(sos(4, {})) == soc(0, {}));  // (-1)^2 = 1
  // and the general bridge (z/|z|)^2 = z/conj(z)
  std::mt19937_64 rng(54);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int it = 0; it < 200; ++it) {
    GaussInt z{Int(d(rng)), Int(d(rng))};
    if (z.is_zero()) continue;
    CHECK(sos_square_to_soc(sos_decompose(z)) == soc_factorize(gauss_over_conj(z)));
  }
}

TEST_CASE("doubling the sos generators yields the soc generators") {
  // (1+i)/sqrt2 squares to i
  GaussRational i_over_1 = reconstruct(sos_square_to_soc(sos_decompose({Int(1), Int(1)})));
  CHECK(i_over_1 == parse_gauss_rational("i"));
  // omega_p/sqrt(p) squares to omega_p/conj(omega_p)
  for (long p : {5L, 13L, 17L}) {
    GaussInt w = find_split_prime(Int(p));
    SocFactorization f = sos_square_to_soc(sos_decompose(w));
    CHECK(f == soc_factorize(gauss_over_conj(w)));
    REQUIRE(f.factors.count(Int(p)) == 1);
    CHECK(f.factors.at(Int(p)) == 1);
  }
}

TEST_CASE("soc_matrix") {
  CHECK(soc_matrix(parse_gauss_rational("i")).transform() ==
        RatMatrix(2, 2, {Rational(0), Rational(-1), Rational(1), Rational(0)}));
  CHECK(soc_matrix(parse_gauss_rational("(3+4i)/5")).transform() ==
        RatMatrix(2, 2,
                  {Rational(3, 5), Rational(-4, 5), Rational(4, 5), Rational(3, 5)}));
  CHECK(soc_matrix(parse_gauss_rational("1")).transform() ==
        to_rational(IntMatrix::identity(2)));
  CHECK_THROWS_AS(soc_matrix(parse_gauss_rational("1+i")), Error);
}

TEST_CASE("coincidence_index_z2") {
  CHECK(coincidence_index_z2(soc(2, {})) == 1);
  CHECK(coincidence_index_z2(soc(0, {{5, 1}})) == 5);
  CHECK(coincidence_index_z2(soc(1, {{5, 1}, {13, -1}})) == 65);
  // oracle agreement through the matrix route
  for (const auto& f : {soc(0, {{5, 1}}), soc(1, {{5, 1}, {13, -1}}), soc(3, {{5, -2}})}) {
    RatMatrix t = soc_matrix(reconstruct(f)).transform();
    CHECK(coincidence_index_z2(f) == Int(oracle::residue_sigma(t).sigma1));
  }
}

TEST_CASE("enumeration counts and order") {
  SECTION("only the units have index 1") {
    auto all = enumerate_soc_z2(1);
    REQUIRE(all.size() == 4);
    for (int k = 0; k < 4; ++k) {
      CHECK(all[size_t(k)].unit_exp == k);
      CHECK(all[size_t(k)].factors.empty());
    }
  }
  SECTION("index 5 admits 12 elements") {
    auto all = enumerate_soc_z2(5);
    REQUIRE(all.size() == 12);
    // ascending index, exponent -1 before +1, units consecutive
    CHECK(all[0].factors.empty());
    CHECK(all[4].factors == std::map<Int, long>{{Int(5), -1}});
    CHECK(all[8].factors == std::map<Int, long>{{Int(5), 1}});
    for (size_t k = 0; k < all.size(); ++k)
      CHECK(all[k].unit_exp == int(k % 4));
  }
  SECTION("nothing new appears until index 13") {
    CHECK(enumerate_soc_z2(12).size() == 12);
    CHECK(enumerate_soc_z2(13).size() == 20);
  }
  SECTION("indices up to 30") {
    std::set<Int> indices;
    for (const auto& f : enumerate_soc_z2(30)) indices.insert(coincidence_index_z2(f));
    CHECK(indices == std::set<Int>{Int(1), Int(5), Int(13), Int(17), Int(25), Int(29)});
  }
  SECTION("bad bound") {
    CHECK_THROWS_AS(enumerate_soc_z2(0), Error);
  }
}

TEST_CASE("enumerated indices agree with the lattice engine up to 100") {
  for (const auto& f : enumerate_soc_z2(100)) {
    CoincidenceMap m = soc_matrix(reconstruct(f));
    SigmaPair sig = coincidence_index(m.map());
    Int expected = coincidence_index_z2(f);
    CHECK(sig.sigma1 == expected);
    CHECK(sig.sigma2 == expected);
  }
}

TEST_CASE("soc_factorize canonicalizes unreduced input") {
  GaussRational raw{GaussInt{Int(6), Int(8)}, Int(10)};  // (3+4i)/5 unreduced
  CHECK(soc_factorize(raw) == soc(0, {{5, 1}}));
}
