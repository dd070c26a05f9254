#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "resmahler/mahler_numeric.hpp"

namespace resmahler {

/// Output of one CLI command. Everything except elapsed_ms is a pure
/// function of the inputs.
struct CommandResult {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result;
  nlohmann::json cross_check;  // null when no check ran
  int exit_code = 0;           // 0, or 4 when a requested check failed
  std::int64_t elapsed_ms = 0;

  nlohmann::json to_json() const;
};

/// Sampling flags shared by the commands that integrate over the torus.
struct SamplingFlags {
  std::uint64_t samples = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;
  unsigned shifts = 16;
  std::string method = "auto";  // auto | qmc | mc

  /// Throws InputError for an unknown method.
  QmcOptions options() const;
};

/// Univariate input (and constants) go to Jensen unless the method is
/// forced to qmc or mc; everything else is integrated.
CommandResult cmd_mm(std::string_view expr, const SamplingFlags& flags);

struct TheoremFlags {
  long eta = 1;
  int ell = 3;
  int p = 1;
  int q = 2;
  std::string family;  // dim3: support family text
  std::string poly;    // dim1: optional polynomial for the Kronecker test
  bool verify = false;
  bool full = false;   // trinomial, dim4: integrate the unreduced resultant
  SamplingFlags sampling;
};

/// name in {dim1, dim2, general, dim3, trinomial, dim4}.
CommandResult cmd_theorem(std::string_view name, const TheoremFlags& flags);

CommandResult cmd_identities(double tolerance, std::size_t samples, std::uint64_t seed);

CommandResult cmd_polytope(std::string_view family_text);

/// Plain "key: value" lines for terminal output.
std::string render_text(const CommandResult& r);

}  // namespace resmahler
