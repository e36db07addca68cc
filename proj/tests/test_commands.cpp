#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "csl/commands.hpp"

using namespace csl;

TEST_CASE("lattice validate command") {
  CommandResult ok = cmd_lattice_validate(
      json::parse(R"({"dim": 2, "gram": [["1","0"],["0","1"]]})"));
  CHECK(ok.ok);
  CHECK(ok.exit_code() == 0);

  CommandResult hex = cmd_lattice_validate(
      json::parse(R"({"gram": [["2","1"],["1","2"]]})"));
  CHECK(hex.ok);

  CommandResult bad = cmd_lattice_validate(
      json::parse(R"({"gram": [["1","2"],["2","1"]]})"));
  CHECK_FALSE(bad.ok);
  CHECK(bad.code == errc::not_positive_definite);
  CHECK(to_json(bad)["error_code"] == "NotPositiveDefinite");
  CHECK(bad.exit_code() != 0);

  CommandResult garbage = cmd_lattice_validate(json("take the identity"));
  CHECK(garbage.code == errc::parse_error);
}

TEST_CASE("map check command emits the documented payload") {
  json z2 = json::parse(R"({"dim": 2, "gram": [["1","0"],["0","1"]]})");
  SECTION("similarity with multiplier 2") {
    CommandResult r = cmd_simmap_check(json{{"T", json::parse(R"([["1","-1"],["1","1"]])")},
                                            {"lattice", z2}});
    REQUIRE(r.ok);
    CHECK(r.payload["m"] == "2");
    CHECK(r.payload["eta"] == 2);
    CHECK(r.payload["sigma"] == json::array({2, 1}));
    CHECK(r.payload["in_soc"] == false);
  }
  SECTION("coincidence rotation") {
    CommandResult r = cmd_simmap_check(
        json{{"T", json::parse(R"([["3/5","-4/5"],["4/5","3/5"]])")}, {"lattice", z2}});
    REQUIRE(r.ok);
    CHECK(r.payload["m"] == "1");
    CHECK(r.payload["eta"] == 1);
    CHECK(r.payload["sigma"] == json::array({5, 5}));
    CHECK(r.payload["in_soc"] == true);
  }
  SECTION("reflection is rejected with its own code") {
    CommandResult r = cmd_simmap_check(
        json{{"T", json::parse(R"([["1","0"],["0","-1"]])")}, {"lattice", z2}});
    CHECK_FALSE(r.ok);
    CHECK(r.code == errc::orientation_reversing);
  }
}

TEST_CASE("soc factorize command") {
  CommandResult r = cmd_soc_factorize(json("(3+4i)/5"));
  REQUIRE(r.ok);
  CHECK(r.payload["unit_exp"] == 0);
  CHECK(r.payload["factors"] == json::parse(R"({"5": 1})"));
  CHECK(r.payload["sigma"] == 5);
  CHECK(r.payload["T"] == json::parse(R"([["3/5","-4/5"],["4/5","3/5"]])"));

  CHECK(cmd_soc_factorize(json{{"q", "i"}}).payload["unit_exp"] == 1);

  CommandResult bad = cmd_soc_factorize(json("(3+4i)/6"));
  CHECK(bad.code == errc::not_unit_modulus);
}

TEST_CASE("sos decompose command") {
  CommandResult r = cmd_sos_decompose(json("1+i"));
  REQUIRE(r.ok);
  CHECK(r.payload["eighth_exp"] == 1);
  CHECK(r.payload["factors"] == json::object());
  CHECK(r.payload["eta"] == 2);

  CommandResult viaobj = cmd_sos_decompose(json::parse(R"({"re": "2", "im": "1"})"));
  REQUIRE(viaobj.ok);
  CHECK(viaobj.payload["factors"] == json::parse(R"({"5": 1})"));
  CHECK(viaobj.payload["eta"] == 5);

  CHECK(cmd_sos_decompose(json("0")).code == errc::zero_input);
}

TEST_CASE("soc enumerate command") {
  CommandResult r1 = cmd_soc_enumerate(Int(1));
  REQUIRE(r1.ok);
  CHECK(r1.payload["count"] == 4);

  CommandResult r5 = cmd_soc_enumerate(Int(5));
  REQUIRE(r5.ok);
  CHECK(r5.payload["count"] == 12);
  REQUIRE(r5.payload["elements"].size() == 12);
  CHECK(r5.payload["elements"][0]["sigma"] == 1);
  CHECK(r5.payload["elements"][0]["q"] == "1");
  CHECK(r5.payload["elements"][4]["sigma"] == 5);
  // every element carries its matrix
  for (const auto& e : r5.payload["elements"]) CHECK(e.contains("T"));

  CommandResult r30 = cmd_soc_enumerate(Int(30));
  std::set<long> indices;
  for (const auto& e : r30.payload["elements"]) indices.insert(e["sigma"].get<long>());
  CHECK(indices == std::set<long>{1, 5, 13, 17, 25, 29});
}

TEST_CASE("verify command") {
  CommandResult all = cmd_verify("all", kDefaultVerifySeed);
  REQUIRE(all.ok);
  REQUIRE(all.payload["suites"].size() == 5);
  for (const auto& s : all.payload["suites"]) {
    CHECK(s["failures"] == 0);
    CHECK(s["checks"].get<int>() > 0);
  }
  CHECK(all.payload["seed"] == "0xc5117");

  CommandResult one = cmd_verify("square_closure", 0x1234);
  REQUIRE(one.ok);
  CHECK(one.payload["suites"].size() == 1);
  CHECK(one.payload["suites"][0]["name"] == "square_closure");

  CHECK(cmd_verify("bogus", 1).code == errc::parse_error);
}

TEST_CASE("identical inputs produce identical bytes") {
  json in = json::parse(
      R"({"T": [["3/5","-4/5"],["4/5","3/5"]], "lattice": {"dim": 2, "gram": [["1","0"],["0","1"]]}})");
  std::string a = to_json(cmd_simmap_check(in)).dump();
  std::string b = to_json(cmd_simmap_check(in)).dump();
  CHECK(a == b);
  std::string v1 = to_json(cmd_verify("z2", kDefaultVerifySeed)).dump();
  std::string v2 = to_json(cmd_verify("z2", kDefaultVerifySeed)).dump();
  CHECK(v1 == v2);
}

TEST_CASE("every library operation is reachable from the command table") {
  const std::set<std::string> surface = {
      // exact_core
      "hnf", "snf", "rat_inverse", "clear_denominators", "lattice_intersection",
      "index_of_sublattice", "quad_arith",
      // lattice_model
      "make_lattice", "validate_similarity", "is_commensurate",
      "coincidence_index", "compose", "invert", "normalize_to_coincidence",
      // gaussian_plane
      "gauss_norm", "gauss_gcd", "find_split_prime", "gauss_factor",
      "soc_factorize", "sos_decompose", "sos_square_to_soc", "soc_matrix",
      "coincidence_index_z2", "enumerate_soc_z2",
      // factor_group
      "eta_of", "class_mul", "class_order", "eta_of_direction", "is_in_kernel"};
  std::set<std::string> covered;
  for (const CommandInfo& cmd : command_table())
    covered.insert(cmd.ops.begin(), cmd.ops.end());
  for (const std::string& op : surface) {
    INFO("operation not reachable from any command: " << op);
    CHECK(covered.count(op) == 1);
  }
}

TEST_CASE("exit codes partition by error code") {
  std::set<int> seen;
  json z2 = json::parse(R"({"dim": 2, "gram": [["1","0"],["0","1"]]})");
  auto collect = [&](const CommandResult& r) {
    CHECK_FALSE(r.ok);
    CHECK(r.exit_code() >= 2);
    CHECK(seen.insert(r.exit_code()).second);  // all distinct
  };
  collect(cmd_lattice_validate(json("nonsense")));
  collect(cmd_lattice_validate(json::parse(R"({"gram": [["1","2"],["2","1"]]})")));
  collect(cmd_lattice_validate(json::parse(R"({"gram": [["1","2"],["3","4"]]})")));
  collect(cmd_simmap_check(json{{"T", json::parse(R"([["1","0"],["0","-1"]])")},
                                {"lattice", z2}}));
  collect(cmd_simmap_check(json{{"T", json::parse(R"([["1","1"],["1","1"]])")},
                                {"lattice", z2}}));
  collect(cmd_soc_factorize(json("(3+4i)/6")));
  collect(cmd_sos_decompose(json("0")));
}
