#pragma once

// Runnable verification suites behind `csl verify`. Each suite replays one
// of the structural facts the library is built on, over seeded random data:
//
//   commensurate   commensurateness is an equivalence relation; irrational
//                  rescalings break it, rational ones never do
//   scal           rational rescaling multiplies the multiplier by b^2;
//                  proportional maps have square multiplier ratio
//   eta            the scale-class map is a homomorphism with kernel equal
//                  to the normalizable maps; classes square to 1
//   square_closure the square of any similarity map of a rational lattice
//                  normalizes to a coincidence map; odd dimension collapses
//   z2             the full planar round trip: unit-modulus rationals,
//                  factorizations, indices and the SNF cross-check
//
// Suites are deterministic for a fixed seed.

#include <functional>
#include <string>
#include <vector>

#include "csl/eta.hpp"
#include "csl/sampler.hpp"

namespace csl {

constexpr std::uint64_t kDefaultVerifySeed = 0xC5117;

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::vector<SuiteResult> suites;

  bool ok() const {
    for (const auto& s : suites)
      if (s.failures > 0) return false;
    return true;
  }
};

namespace verify_detail {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.first_failure.empty()) result_.first_failure = describe();
    }
  }

  void check(bool ok, const std::string& label) {
    check(ok, [&] { return label; });
  }

  // Runs a block that must not throw; exceptions count as failures.
  template <class F>
  void check_runs(const std::string& label, F&& body) {
    ++result_.checks;
    try {
      body();
    } catch (const Error& e) {
      ++result_.failures;
      if (result_.first_failure.empty())
        result_.first_failure = label + ": " + e.what();
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline RatMatrix random_rational_basis(MapSampler& gen, int d, long max_abs) {
  for (;;) {
    RatMatrix b(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        b(i, j) = Rational(gen.uniform(-max_abs, max_abs), gen.uniform(1, 3));
    if (det(b) != 0) return b;
  }
}

inline Lattice suite_lattice(int which) {
  switch (which % 3) {
    case 0: return z2_lattice();
    case 1: return hexagonal_lattice();
    default: {
      RatMatrix g(3, 3);
      g(0, 0) = 1;
      g(1, 1) = 2;
      g(2, 2) = 3;
      return make_lattice(g);
    }
  }
}

}  // namespace verify_detail

inline SuiteResult run_commensurate_suite(std::uint64_t seed) {
  using namespace verify_detail;
  Checker c("commensurate");
  MapSampler gen(seed ^ 0x01);

  for (int it = 0; it < 40; ++it) {
    int d = 2 + static_cast<int>(gen.uniform(0, 1));
    RatMatrix b1 = random_rational_basis(gen, d, 6);
    RatMatrix b2 = random_rational_basis(gen, d, 6);
    c.check(is_commensurate(b1, b1), "reflexivity on a rational basis");
    c.check(is_commensurate(b1, b2) && is_commensurate(b2, b1),
            "rational bases must be mutually commensurate");
  }

  // Transitivity over Q(sqrt 2): scale a base lattice by c2, then by c3.
  for (int it = 0; it < 40; ++it) {
    QuadMatrix base = to_quad(random_rational_basis(gen, 2, 4));
    bool r2 = gen.uniform(0, 1) == 0;
    bool r3 = gen.uniform(0, 1) == 0;
    QuadExt c2 = r2 ? QuadExt(gen.nonzero_rational(4))
                    : QuadExt(Rational(0), gen.nonzero_rational(4), 2);
    QuadExt c3 = r3 ? QuadExt(gen.nonzero_rational(4))
                    : QuadExt(Rational(0), gen.nonzero_rational(4), 2);
    QuadMatrix g2 = base * c2;
    QuadMatrix g3 = g2 * c3;
    bool ab = is_commensurate(base, g2);
    bool bc = is_commensurate(g2, g3);
    bool ac = is_commensurate(base, g3);
    c.check(ab == r2, "scaling by an irrational must break commensurateness");
    c.check(bc == r3, "scaling by an irrational must break commensurateness");
    c.check(!(ab && bc) || ac, "transitivity");
    QuadExt prod = quad_arith(c2, c3, '*');
    c.check(ac == prod.is_rational(), "combined scale decides commensurateness");
  }

  // The two canonical negatives.
  QuadMatrix id = to_quad(to_rational(IntMatrix::identity(2)));
  QuadMatrix sqrt2_id = id * QuadExt::sqrt_of(2);
  c.check(!is_commensurate(id, sqrt2_id), "sqrt(2) * Z^2 vs Z^2");
  QuadExt half = QuadExt(Rational(0), Rational(1, 2), 2);  // sqrt(2)/2
  QuadMatrix rot45(2, 2);
  rot45(0, 0) = half;
  rot45(0, 1) = -half;
  rot45(1, 0) = half;
  rot45(1, 1) = half;
  c.check(!is_commensurate(id, rot45), "bare 45 degree rotation vs Z^2");
  return c.take();
}

inline SuiteResult run_scal_suite(std::uint64_t seed) {
  using namespace verify_detail;
  Checker c("scal");
  MapSampler gen(seed ^ 0x02);
  for (int it = 0; it < 60; ++it) {
    Lattice l = suite_lattice(it);
    SimilarityMap s = gen.random_similarity(l);
    Rational b = gen.nonzero_rational(6);
    SimilarityMap scaled = gen.rescale(s, b);
    c.check(scaled.multiplier() == b * b * s.multiplier(), [&] {
      return "rescaling by " + format_rational(b) + " gave multiplier " +
             format_rational(scaled.multiplier());
    });
    // proportional maps: multiplier ratio is the square of the factor
    Rational ratio = scaled.multiplier() / s.multiplier();
    c.check(is_rational_square(ratio), "multiplier ratio of proportional maps");
    c.check(rational_sqrt(ratio) == (b < 0 ? Rational(-b) : b),
            "ratio is exactly b^2");
  }
  return c.take();
}

inline SuiteResult run_eta_suite(std::uint64_t seed) {
  using namespace verify_detail;
  Checker c("eta");
  MapSampler gen(seed ^ 0x03);
  for (int it = 0; it < 80; ++it) {
    Lattice l = suite_lattice(it);
    SimilarityMap s1 = gen.random_similarity(l);
    SimilarityMap s2 = gen.random_similarity(l);
    EtaClass e1 = eta_of(s1), e2 = eta_of(s2);
    c.check(eta_of(compose(s1, s2)) == class_mul(e1, e2), "homomorphism");
    c.check(class_mul(e1, e1) == EtaClass{}, "classes are self-inverse");
    c.check(class_order(e1, l.dim()) <= 2, "order divides the dimension");
    bool kernel = is_in_kernel(s1);
    bool normalizable = true;
    try {
      normalize_to_coincidence(s1);
    } catch (const Error& e) {
      if (e.code() != errc::not_coincidence) throw;
      normalizable = false;
    }
    c.check(kernel == normalizable, "kernel membership == normalizability");
  }
  return c.take();
}

inline SuiteResult run_square_closure_suite(std::uint64_t seed) {
  using namespace verify_detail;
  Checker c("square_closure");
  MapSampler gen(seed ^ 0x04);
  for (int it = 0; it < 80; ++it) {
    Lattice l = [&]() -> Lattice {
      switch (it % 5) {
        case 0: return z2_lattice();
        case 1: return hexagonal_lattice();
        case 2: return suite_lattice(2);  // diag(1,2,3)
        case 3: return cubic_lattice(4);
        default: return gen.random_diag_lattice(4, 5);
      }
    }();
    SimilarityMap s = gen.random_similarity(l);
    c.check_runs("square must normalize to a coincidence map",
                 [&] { normalize_to_coincidence(compose(s, s)); });
    if (l.dim() % 2 == 1)
      c.check(is_rational_square(s.multiplier()),
              "odd dimension forces a square multiplier");
  }
  return c.take();
}

inline SuiteResult run_z2_suite(std::uint64_t seed) {
  using namespace verify_detail;
  Checker c("z2");
  MapSampler gen(seed ^ 0x05);

  for (int it = 0; it < 60; ++it) {
    GaussInt z = gen.nonzero_gauss(30);
    GaussRational q = gauss_over_conj(z);
    CoincidenceMap cm = soc_matrix(q);
    c.check(cm.map().multiplier() == 1, "unit-modulus rational rotates Z^2");
    SocFactorization f = soc_factorize(q);
    c.check(reconstruct(f) == q, "factorize/reconstruct round trip");
    // squaring bridge
    c.check(sos_square_to_soc(sos_decompose(z)) == f,
            "direction squared equals z/conj(z) factorization");
  }

  // SO(2, Q) both ways: Cayley rotations factorize; enumerated elements are
  // rational rotations whose indices agree with the intersection machinery
  // and with the Smith-form invariant factors.
  for (int it = 0; it < 20; ++it) {
    SimilarityMap r = gen.cayley_coincidence(z2_lattice(), 6);
    GaussRational q = make_gauss_rational(
        GaussInt(num(r.transform()(0, 0)) * den(r.transform()(1, 0)),
                 num(r.transform()(1, 0)) * den(r.transform()(0, 0))),
        den(r.transform()(0, 0)) * den(r.transform()(1, 0)));
    c.check_runs("rational rotation must factorize", [&] { soc_factorize(q); });
  }
  for (const SocFactorization& f : enumerate_soc_z2(40)) {
    CoincidenceMap cm = soc_matrix(reconstruct(f));
    SigmaPair sig = coincidence_index(cm.map());
    Int expected = coincidence_index_z2(f);
    c.check(sig.sigma1 == expected && sig.sigma2 == expected,
            "enumerated index agrees with the intersection index");
    RatMatrix id2 = to_rational(IntMatrix::identity(2));
    IntMatrix c0 = to_integer(lattice_intersection(id2, cm.transform()));
    SnfResult sf = snf(c0);
    c.check(sf.D(0, 0) * sf.D(1, 1) == expected && sf.D(1, 1) % sf.D(0, 0) == 0,
            "Smith invariant factors multiply to the index");
  }

  // Arithmetic laws the factorization rests on.
  for (int it = 0; it < 40; ++it) {
    GaussInt z = gen.nonzero_gauss(40);
    GaussInt w = gen.nonzero_gauss(40);
    c.check(gauss_norm(z * w) == gauss_norm(z) * gauss_norm(w),
            "norm is multiplicative");
    GaussInt g = gauss_gcd(z, w);
    c.check(gauss_divides(g, z) && gauss_divides(g, w), "gcd divides both");
    c.check(gauss_factor(z).reconstruct() == z, "factorization reconstructs");
  }
  return c.take();
}

inline SuiteReport run_verify(const std::string& suite, std::uint64_t seed) {
  SuiteReport report;
  if (suite == "commensurate" || suite == "all")
    report.suites.push_back(run_commensurate_suite(seed));
  if (suite == "scal" || suite == "all")
    report.suites.push_back(run_scal_suite(seed));
  if (suite == "eta" || suite == "all")
    report.suites.push_back(run_eta_suite(seed));
  if (suite == "square_closure" || suite == "all")
    report.suites.push_back(run_square_closure_suite(seed));
  if (suite == "z2" || suite == "all")
    report.suites.push_back(run_z2_suite(seed));
  if (report.suites.empty())
    fail(errc::parse_error, "unknown suite '" + suite +
                                "' (expected commensurate, scal, eta, "
                                "square_closure, z2 or all)");
  return report;
}

}  // namespace csl
