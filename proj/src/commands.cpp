#include "resmahler/commands.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "resmahler/closed_form.hpp"
#include "resmahler/errors.hpp"
#include "resmahler/lattice_geometry.hpp"
#include "resmahler/special_functions.hpp"
#include "resmahler/theorem_evaluators.hpp"

namespace resmahler {
namespace {

using nlohmann::json;

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json estimate_json(const MahlerEstimate& e) {
  json j{{"value", e.value}, {"std_error", e.std_error}, {"method", std::string(to_string(e.method))}};
  if (e.is_statistical()) {
    j["samples"] = e.samples;
    j["resampled"] = e.resampled;
  }
  return j;
}

json closed_form_json(const ClosedFormValue& v) {
  json terms = json::array();
  for (const auto& t : v.terms()) {
    json factors = json::array();
    for (const auto& f : t.factors) {
      json jf{{"symbol", to_string(f)}};
      if (const auto* p = std::get_if<P3At>(&f)) jf["point"] = {p->point.real(), p->point.imag()};
      if (const auto* d = std::get_if<DAt>(&f)) jf["point"] = {d->point.real(), d->point.imag()};
      factors.push_back(std::move(jf));
    }
    terms.push_back({{"coefficient", to_string(t.coefficient)}, {"factors", std::move(factors)}});
  }
  return {{"expression", v.to_string()}, {"closed_form_terms", std::move(terms)}, {"numeric", v.numeric()}};
}

json cross_check_json(const CrossCheck& c) {
  json j = estimate_json(c.numeric);
  j["closed"] = c.closed;
  j["difference"] = c.difference;
  j["pass"] = c.pass;
  return j;
}

json sampling_json(const SamplingFlags& f) {
  return {{"samples", f.samples}, {"seed", f.seed}, {"shifts", f.shifts}, {"method", f.method}};
}

// Shift a one-variable Laurent polynomial to an ordinary polynomial; the
// monomial factor does not change the measure.
RationalPoly to_univariate(const RationalLaurent& p) {
  int low = 0;
  int high = 0;
  for (const auto& [e, c] : p.terms()) {
    low = std::min(low, e[0]);
    high = std::max(high, e[0]);
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(high - low + 1));
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e[0] - low)] = c;
  return RationalPoly(std::move(coeffs));
}

void finish_check(CommandResult& r, const CrossCheck& c, double scale = 1.0) {
  CrossCheck s = c;
  if (scale != 1.0) {
    s.closed *= scale;
    s.numeric.value *= scale;
    s.numeric.std_error *= std::abs(scale);
    s.difference *= scale;
  }
  r.cross_check = cross_check_json(s);
  if (!s.pass) r.exit_code = 4;
}

json family_json(const SupportFamily& family) {
  json supports = json::array();
  for (const auto& s : family.supports()) supports.push_back(s.points());
  return supports;
}

}  // namespace

json CommandResult::to_json() const {
  return {{"command", command}, {"inputs", inputs}, {"result", result}, {"cross_check", cross_check},
          {"elapsed_ms", elapsed_ms}};
}

QmcOptions SamplingFlags::options() const {
  QmcOptions o;
  o.samples = samples;
  o.seed = seed;
  o.shifts = shifts;
  if (method == "mc") {
    o.method = SamplingMethod::kMonteCarlo;
  } else if (method != "qmc" && method != "auto") {
    throw InputError("unknown method '" + method + "' (expected auto, qmc or mc)");
  }
  return o;
}

CommandResult cmd_mm(std::string_view expr, const SamplingFlags& flags) {
  const Stopwatch clock;
  CommandResult r;
  r.command = "mm";
  r.inputs = sampling_json(flags);
  r.inputs["polynomial"] = std::string(expr);
  const QmcOptions options = flags.options();

  const ParsedPolynomial parsed = parse_polynomial(expr);
  if (parsed.poly.is_zero()) throw DomainError("Mahler measure of the zero polynomial is undefined");
  MahlerEstimate m;
  if (parsed.variables.size() <= 1 && flags.method == "auto") {
    m = parsed.variables.empty() ? mm_jensen(RationalPoly({parsed.poly.terms().begin()->second}))
                                 : mm_jensen(to_univariate(parsed.poly));
  } else {
    m = mm_qmc(parsed.poly, options);
  }
  r.result = estimate_json(m);
  r.result["variables"] = parsed.variables;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

CommandResult cmd_theorem(std::string_view name, const TheoremFlags& flags) {
  const Stopwatch clock;
  CommandResult r;
  r.command = "theorem";
  r.inputs = {{"theorem", std::string(name)}, {"verify", flags.verify}};
  if (flags.verify) r.inputs["sampling"] = sampling_json(flags.sampling);
  const QmcOptions options = flags.sampling.options();

  if (name == "dim1") {
    r.result = closed_form_json(mm_dim1());
    if (!flags.poly.empty()) {
      r.inputs["poly"] = flags.poly;
      const ParsedPolynomial parsed = parse_polynomial(flags.poly);
      if (parsed.variables.size() > 1) throw InputError("the Kronecker test takes a univariate polynomial");
      const RationalPoly f = parsed.variables.empty()
                                 ? RationalPoly(std::vector<Rational>{parsed.poly.coefficient({})})
                                 : to_univariate(parsed.poly);
      r.result["kronecker"] = kronecker_is_mm_zero(f);
    }
    if (flags.verify) finish_check(r, cross_check_dim1(options));
  } else if (name == "dim2") {
    r.inputs["eta"] = flags.eta;
    r.result = closed_form_json(mm_dim2(flags.eta));
    if (flags.verify) finish_check(r, cross_check_dim2(flags.eta, options));
  } else if (name == "general") {
    r.inputs["eta"] = flags.eta;
    r.inputs["ell"] = flags.ell;
    if (auto closed = general_row_closed_form(flags.ell); closed && flags.eta >= 1) {
      r.result = closed_form_json(closed->scaled(Rational(flags.eta)));
      if (flags.verify) finish_check(r, *cross_check_general_row(flags.eta, flags.ell, options));
    } else {
      if (!closed && !flags.verify) r.inputs["sampling"] = sampling_json(flags.sampling);
      r.result = estimate_json(mm_general_row(flags.eta, flags.ell, options));
    }
  } else if (name == "dim3") {
    if (flags.family.empty()) throw InputError("dim3 needs --family");
    r.inputs["family"] = flags.family;
    const Dim3Reduction red = mm_dim3_reduction(parse_support_family(flags.family));
    r.result = {{"eta", red.eta}, {"multiplier", red.multiplier}, {"support0", red.support0},
                {"support1", red.support1}};
    if (auto pq = red.trinomial_normal_form()) {
      const auto [p, q] = *pq;
      json closed = closed_form_json(mm_trinomial_closed(p, q).scaled(Rational(red.multiplier)));
      r.result.update(closed);
      r.result["p"] = p;
      r.result["q"] = q;
      if (flags.verify) finish_check(r, cross_check_trinomial(p, q, options), static_cast<double>(red.multiplier));
    } else {
      r.result["closed_form_terms"] = nullptr;
    }
  } else if (name == "trinomial") {
    r.inputs["p"] = flags.p;
    r.inputs["q"] = flags.q;
    r.result = closed_form_json(mm_trinomial_closed(flags.p, flags.q));
    const TrinomialRoots roots = solve_trinomial_roots(flags.p, flags.q);
    r.result["phi_small"] = roots.phi_small;
    r.result["phi_large"] = roots.phi_large;
    if (flags.verify) {
      r.inputs["full"] = flags.full;
      finish_check(r, cross_check_trinomial(flags.p, flags.q, options, flags.full));
    }
  } else if (name == "dim4") {
    r.result = closed_form_json(mm_dim4_det());
    if (flags.verify) {
      r.inputs["full"] = flags.full;
      finish_check(r, cross_check_dim4(options, flags.full));
    }
  } else {
    throw InputError("unknown theorem '" + std::string(name) + "'");
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

CommandResult cmd_identities(double tolerance, std::size_t samples, std::uint64_t seed) {
  const Stopwatch clock;
  if (!(tolerance > 0.0)) throw InputError("tolerance must be positive");
  if (samples == 0) throw InputError("samples must be positive");
  CommandResult r;
  r.command = "identities";
  r.inputs = {{"tolerance", tolerance}, {"samples", samples}, {"seed", seed}};
  json records = json::array();
  bool all_pass = true;
  for (const auto& rep : special::run_identity_suite(samples, seed)) {
    const bool pass = rep.max_deviation <= tolerance;
    all_pass = all_pass && pass;
    records.push_back(
        {{"identity", rep.name}, {"max_deviation", rep.max_deviation}, {"evaluations", rep.evaluations}, {"pass", pass}});
  }
  r.result = {{"identities", std::move(records)}, {"pass", all_pass}};
  if (!all_pass) r.exit_code = 4;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

CommandResult cmd_polytope(std::string_view family_text) {
  const Stopwatch clock;
  CommandResult r;
  r.command = "polytope";
  const SupportFamily family = parse_support_family(family_text);
  r.inputs = {{"supports", family_json(family)}};
  require_two_point_supports(family);
  const FamilyClass cls = classify_family(family);
  r.result = {{"n", family.n()},
              {"k", family.total_size()},
              {"dim", resultant_polytope_dim(family)},
              {"class", std::string(to_string(cls))}};

  const bool one_row = cls == FamilyClass::kDimTwo || cls == FamilyClass::kDimThreeA ||
                       cls == FamilyClass::kGeneralRowReduced;
  if (one_row || cls == FamilyClass::kDimThreeB) {
    // Only meaningful once the binomial rows are in diagonal form.
    try {
      const bool reserved = cls == FamilyClass::kDimThreeB;
      r.result["eta"] = eta_of_binomial_rows(family, reserved);
      r.result["binomial_root_count"] = binomial_root_count(family, reserved);
    } catch (const DomainError& e) {
      r.result["eta"] = nullptr;
      r.result["eta_note"] = e.what();
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace {

void flatten(std::ostringstream& os, const std::string& prefix, const json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(os, prefix.empty() ? k : prefix + "." + k, v);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(os, prefix + "[" + std::to_string(i) + "]", j[i]);
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << '\n';
  } else if (j.is_number_float()) {
    std::ostringstream num;
    num.precision(12);
    num << j.get<double>();
    os << prefix << ": " << num.str() << '\n';
  } else {
    os << prefix << ": " << j.dump() << '\n';
  }
}

}  // namespace

std::string render_text(const CommandResult& r) {
  std::ostringstream os;
  os << r.command << '\n';
  flatten(os, "inputs", r.inputs);
  flatten(os, "result", r.result);
  if (!r.cross_check.is_null()) flatten(os, "cross_check", r.cross_check);
  os << "elapsed_ms: " << r.elapsed_ms << '\n';
  return os.str();
}

}  // namespace resmahler
