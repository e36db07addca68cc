// csl — exact coincidence/similarity rotation calculator.
//
// Subcommands mirror the library surface; every command prints one JSON
// object to stdout and exits 0 on success, or a stable per-error-code
// status otherwise. Input comes from a file path argument, "-" (stdin),
// or an inline literal.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>

#include "csl/commands.hpp"

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// File path | "-" | inline content, in that order.
std::string resolve_input(const std::string& arg) {
  if (arg.empty() || arg == "-") return read_stream(std::cin);
  std::ifstream file(arg);
  if (file.good()) return read_stream(file);
  return arg;
}

// Structured inputs must be JSON; bare literals are wrapped as strings so
// the command layer sees a uniform payload.
csl::json payload_of(const std::string& content) {
  csl::json j = csl::json::parse(content, nullptr, false);
  if (j.is_discarded()) return csl::json(content);
  return j;
}

int emit(const csl::CommandResult& result) {
  std::cout << csl::to_json(result).dump() << "\n";
  return result.exit_code();
}

std::uint64_t parse_seed(const std::string& text) {
  std::string s = text;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  if (s.empty()) throw CLI::ValidationError("--seed", "empty seed");
  std::uint64_t value = 0;
  for (char c : s) {
    int digit;
    if (c >= '0' && c <= '9')
      digit = c - '0';
    else if (c >= 'a' && c <= 'f')
      digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      digit = c - 'A' + 10;
    else
      throw CLI::ValidationError("--seed", "expected a hex seed");
    value = value * 16 + static_cast<std::uint64_t>(digit);
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coincidence and similarity rotations of lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand

  bool json_output = true;
  app.add_flag("--json", json_output, "emit JSON (the default and only format)");
  std::string seed_text = "0xC5117";
  app.add_option("--seed", seed_text, "hex seed for the verification suites");

  std::string input;

  auto* lattice = app.add_subcommand("lattice", "lattice operations");
  auto* lattice_validate =
      lattice->add_subcommand("validate", "validate a Gram matrix");
  lattice_validate->add_option("input", input, "file path, '-' for stdin, or inline JSON");

  auto* map = app.add_subcommand("map", "similarity map operations");
  auto* map_check = map->add_subcommand(
      "check", "validate a transform and report multiplier, class and indices");
  map_check->add_option("input", input, "file path, '-' for stdin, or inline JSON");

  auto* soc = app.add_subcommand("soc", "coincidence rotations of Z^2");
  auto* soc_factorize =
      soc->add_subcommand("factorize", "factor a unit-modulus element of Q(i)");
  soc_factorize->add_option("input", input,
                            "file path, '-' for stdin, or a literal like (3+4i)/5");
  auto* soc_enumerate =
      soc->add_subcommand("enumerate", "list coincidence rotations by index");
  std::int64_t max_index = 1;
  soc_enumerate->add_option("--max-index", max_index, "largest index to include")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* sos = app.add_subcommand("sos", "similarity rotations of Z^2");
  auto* sos_decompose =
      sos->add_subcommand("decompose", "decompose the direction of a Gaussian integer");
  sos_decompose->add_option("input", input,
                            "file path, '-' for stdin, or a literal like 1+i");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite,
                     "commensurate | scal | eta | square_closure | z2 | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    csl::CommandResult r;
    r.ok = false;
    r.code = csl::errc::parse_error;
    r.message = e.what();
    return emit(r);
  }

  if (lattice_validate->parsed())
    return emit(csl::cmd_lattice_validate(payload_of(resolve_input(input))));
  if (map_check->parsed())
    return emit(csl::cmd_simmap_check(payload_of(resolve_input(input))));
  if (soc_factorize->parsed())
    return emit(csl::cmd_soc_factorize(payload_of(resolve_input(input))));
  if (soc_enumerate->parsed())
    return emit(csl::cmd_soc_enumerate(csl::Int(max_index)));
  if (sos_decompose->parsed())
    return emit(csl::cmd_sos_decompose(payload_of(resolve_input(input))));
  if (verify->parsed()) {
    std::uint64_t seed;
    try {
      seed = parse_seed(seed_text);
    } catch (const CLI::Error&) {
      csl::CommandResult r;
      r.ok = false;
      r.code = csl::errc::parse_error;
      r.message = "malformed --seed value";
      return emit(r);
    }
    return emit(csl::cmd_verify(suite, seed));
  }
  return 1;
}
