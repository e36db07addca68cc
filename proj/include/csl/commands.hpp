#pragma once

// The command layer behind the `csl` binary: JSON in, JSON out, stable
// error codes, deterministic bytes for identical inputs. Kept separate
// from the executable so tests can drive commands directly.

#include <cstdio>
#include <string>
#include <vector>

#include "csl/json_io.hpp"
#include "csl/verify.hpp"

namespace csl {

struct CommandResult {
  bool ok = true;
  json payload;            // set when ok
  errc code = errc::internal;  // set when !ok
  std::string message;

  int exit_code() const { return ok ? 0 : csl::exit_code(code); }
};

inline json to_json(const CommandResult& r) {
  if (r.ok) return json{{"status", "ok"}, {"payload", r.payload}};
  return json{{"status", "error"},
              {"error_code", code_name(r.code)},
              {"message", r.message}};
}

namespace cmd_detail {

template <class F>
CommandResult run(F&& body) {
  CommandResult r;
  try {
    r.payload = body();
  } catch (const Error& e) {
    r.ok = false;
    r.code = e.code();
    r.message = e.what();
  } catch (const json::exception& e) {
    r.ok = false;
    r.code = errc::parse_error;
    r.message = e.what();
  }
  return r;
}

// Accepts {"key": "literal"} or a bare JSON string.
inline std::string literal_field(const json& in, const char* key) {
  if (in.is_string()) return in.get<std::string>();
  if (in.is_object() && in.contains(key) && in.at(key).is_string())
    return in.at(key).get<std::string>();
  fail(errc::parse_error,
       std::string("expected a \"") + key + "\" string or a bare literal");
}

}  // namespace cmd_detail

inline CommandResult cmd_lattice_validate(const json& in) {
  return cmd_detail::run([&] {
    Lattice l = lattice_from_json(in);
    return lattice_to_json(l);
  });
}

inline CommandResult cmd_simmap_check(const json& in) {
  return cmd_detail::run([&] {
    SimilarityMap s = simmap_from_json(in);
    SigmaPair sigma = coincidence_index(s);
    EtaClass cls = eta_of(s);
    return json{{"m", rational_to_json(s.multiplier())},
                {"eta", int_to_json(cls.value)},
                {"sigma", sigma_to_json(sigma)},
                {"in_soc", is_in_kernel(s)}};
  });
}

inline CommandResult cmd_soc_factorize(const json& in) {
  return cmd_detail::run([&] {
    GaussRational q = parse_gauss_rational(cmd_detail::literal_field(in, "q"));
    SocFactorization f = soc_factorize(q);
    json out = soc_to_json(f);
    out["sigma"] = int_to_json(coincidence_index_z2(f));
    out["T"] = matrix_to_json(soc_matrix(q).transform());
    return out;
  });
}

inline CommandResult cmd_sos_decompose(const json& in) {
  return cmd_detail::run([&] {
    GaussInt z;
    if (in.is_object() && in.contains("re"))
      z = gauss_int_from_json(in);
    else
      z = parse_gauss_int(cmd_detail::literal_field(in, "z"));
    SosFactorization f = sos_decompose(z);
    json out = sos_to_json(f);
    out["eta"] = int_to_json(eta_of_direction(f).value);
    return out;
  });
}

inline CommandResult cmd_soc_enumerate(const Int& max_index) {
  return cmd_detail::run([&] {
    std::vector<SocFactorization> all = enumerate_soc_z2(max_index);
    json elements = json::array();
    for (const SocFactorization& f : all) {
      GaussRational q = reconstruct(f);
      json e = soc_to_json(f);
      e["sigma"] = int_to_json(coincidence_index_z2(f));
      e["q"] = format_gauss_rational(q);
      e["T"] = matrix_to_json(soc_matrix(q).transform());
      elements.push_back(std::move(e));
    }
    return json{{"count", elements.size()}, {"elements", std::move(elements)}};
  });
}

inline CommandResult cmd_verify(const std::string& suite, std::uint64_t seed) {
  CommandResult r = cmd_detail::run([&]() -> json {
    SuiteReport report = run_verify(suite, seed);
    json suites = json::array();
    for (const SuiteResult& s : report.suites) {
      json e{{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}};
      if (!s.first_failure.empty()) e["counterexample"] = s.first_failure;
      suites.push_back(std::move(e));
    }
    if (!report.ok())
      throw Error(errc::suite_failed, "verification failed: " + suites.dump());
    char seed_hex[32];
    std::snprintf(seed_hex, sizeof seed_hex, "0x%llx",
                  static_cast<unsigned long long>(seed));
    return json{{"seed", seed_hex}, {"suites", std::move(suites)}};
  });
  return r;
}

// Which library operations each command reaches (directly or through its
// payload); the test suite checks that the union covers the whole surface.
struct CommandInfo {
  std::string name;
  std::vector<std::string> ops;
};

inline const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"lattice validate", {"make_lattice"}},
      {"map check",
       {"make_lattice", "validate_similarity", "coincidence_index",
        "lattice_intersection", "index_of_sublattice", "clear_denominators",
        "hnf", "rat_inverse", "eta_of", "is_in_kernel"}},
      {"soc factorize",
       {"soc_factorize", "gauss_factor", "find_split_prime", "gauss_norm",
        "coincidence_index_z2", "soc_matrix"}},
      {"sos decompose",
       {"sos_decompose", "gauss_factor", "find_split_prime", "gauss_norm",
        "eta_of_direction"}},
      {"soc enumerate",
       {"enumerate_soc_z2", "coincidence_index_z2", "soc_matrix"}},
      {"verify",
       {"is_commensurate", "quad_arith", "compose", "invert",
        "normalize_to_coincidence", "class_mul", "class_order", "eta_of",
        "is_in_kernel", "snf", "sos_square_to_soc", "soc_factorize",
        "sos_decompose", "gauss_gcd", "gauss_norm", "gauss_factor",
        "coincidence_index", "validate_similarity", "lattice_intersection",
        "index_of_sublattice", "coincidence_index_z2", "enumerate_soc_z2",
        "soc_matrix", "make_lattice", "hnf", "rat_inverse",
        "clear_denominators", "find_split_prime"}},
  };
  return table;
}

}  // namespace csl
