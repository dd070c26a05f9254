#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "resmahler/commands.hpp"
#include "resmahler/errors.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

void add_sampling_flags(CLI::App* cmd, resmahler::SamplingFlags& f) {
  cmd->add_option("--samples", f.samples, "Total integrand evaluations (a power of two is best)");
  cmd->add_option("--seed", f.seed, "Seed of the random shifts");
  cmd->add_option("--shifts", f.shifts, "Number of independent random shifts");
  cmd->add_option("--method", f.method, "auto, qmc or mc")->check(CLI::IsMember({"auto", "qmc", "mc"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw resmahler::InputError("cannot read family file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mahler measures of sparse resultants"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_output = false;
  app.add_flag("--json", json_output, "Print one JSON object instead of text");

  std::string expr;
  resmahler::SamplingFlags mm_flags;
  auto* mm = app.add_subcommand("mm", "Mahler measure of a polynomial");
  mm->add_option("polynomial", expr, "e.g. \"1 + x + y\"")->required();
  add_sampling_flags(mm, mm_flags);

  std::string theorem_name;
  resmahler::TheoremFlags th;
  auto* theorem = app.add_subcommand("theorem", "Closed-form Mahler measure of a resultant family");
  theorem->add_option("name", theorem_name, "dim1, dim2, general, dim3, trinomial or dim4")
      ->required()
      ->check(CLI::IsMember({"dim1", "dim2", "general", "dim3", "trinomial", "dim4"}));
  theorem->add_option("--eta", th.eta, "Binomial multiplier");
  theorem->add_option("--ell", th.ell, "Number of monomials in the long row");
  theorem->add_option("--p", th.p, "Middle exponent of the trinomial support {0,p,q}");
  theorem->add_option("--q", th.q, "Top exponent of the trinomial support {0,p,q}");
  theorem->add_option("--family", th.family, "Support family text (dim3)");
  theorem->add_option("--poly", th.poly, "Univariate polynomial for the Kronecker test (dim1)");
  theorem->add_flag("--verify", th.verify, "Cross-check against numerical integration");
  theorem->add_flag("--full", th.full, "Integrate the unreduced resultant (trinomial, dim4)");
  add_sampling_flags(theorem, th.sampling);

  double tolerance = 1e-9;
  std::size_t identity_samples = 10000;
  std::uint64_t identity_seed = 0;
  auto* identities = app.add_subcommand("identities", "Check polylogarithm functional equations");
  identities->add_option("--tolerance", tolerance, "Maximum allowed absolute deviation");
  identities->add_option("--samples", identity_samples, "Random points per identity");
  identities->add_option("--seed", identity_seed, "Seed of the random points");

  std::string family_file;
  std::string family_text;
  auto* polytope = app.add_subcommand("polytope", "Classify a support family");
  auto* file_opt = polytope->add_option("file", family_file, "Family file, one support per line");
  polytope->add_option("--text", family_text, "Inline family, supports separated by '|'")->excludes(file_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    resmahler::CommandResult result;
    if (*mm) {
      result = resmahler::cmd_mm(expr, mm_flags);
    } else if (*theorem) {
      result = resmahler::cmd_theorem(theorem_name, th);
    } else if (*identities) {
      result = resmahler::cmd_identities(tolerance, identity_samples, identity_seed);
    } else {
      if (family_file.empty() && family_text.empty()) throw resmahler::InputError("polytope needs a file or --text");
      result = resmahler::cmd_polytope(family_file.empty() ? family_text : read_file(family_file));
    }
    if (json_output) {
      std::cout << result.to_json().dump() << '\n';
    } else {
      std::cout << resmahler::render_text(result);
    }
    return result.exit_code;
  } catch (const resmahler::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const resmahler::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
