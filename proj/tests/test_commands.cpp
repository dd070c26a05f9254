#include <doctest.h>

#include "resmahler/commands.hpp"
#include "resmahler/errors.hpp"

using namespace resmahler;
using nlohmann::json;

namespace {

json stable(const CommandResult& r) {
  json j = r.to_json();
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("mm dispatches univariate input to Jensen") {
    const CommandResult r = cmd_mm("t^5 - 1", SamplingFlags{});
    CHECK(r.result["method"] == "jensen");
    CHECK(r.result["value"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cmd_mm("7", SamplingFlags{}).result["value"].get<double>() == doctest::Approx(std::log(7.0)));
    SamplingFlags forced;
    forced.method = "qmc";
    forced.samples = 1 << 12;
    CHECK(cmd_mm("t + 2", forced).result["method"] == "qmc");
  }

  TEST_CASE("mm integrates multivariate input") {
    SamplingFlags f;
    f.seed = 7;
    const CommandResult r = cmd_mm("1+x+y", f);
    CHECK(r.command == "mm");
    CHECK(r.result["method"] == "qmc");
    CHECK(r.result["value"].get<double>() == doctest::Approx(0.3231).epsilon(1e-3));
    CHECK(r.result["std_error"].get<double>() > 0.0);
    CHECK(r.result["samples"] == 1 << 20);
    CHECK(r.cross_check.is_null());
    CHECK(stable(r) == stable(cmd_mm("1+x+y", f)));
  }

  TEST_CASE("mm errors") {
    CHECK_THROWS_AS(cmd_mm("", SamplingFlags{}), InputError);
    CHECK_THROWS_AS(cmd_mm("x - x", SamplingFlags{}), DomainError);
    SamplingFlags bad;
    bad.method = "grid";
    CHECK_THROWS_AS(cmd_mm("1 + x + y", bad), InputError);
    bad.method = "qmc";
    bad.samples = 10;
    CHECK_THROWS_AS(cmd_mm("1 + x + y", bad), InputError);
  }

  TEST_CASE("theorem payloads") {
    TheoremFlags f;
    const CommandResult d4 = cmd_theorem("dim4", f);
    CHECK(d4.result["numeric"].get<double>() == doctest::Approx(0.548072227051).epsilon(1e-11));
    CHECK(d4.result["closed_form_terms"].size() == 1);
    CHECK(d4.result["closed_form_terms"][0]["coefficient"] == "9/2");

    f.eta = 2;
    const CommandResult d2 = cmd_theorem("dim2", f);
    CHECK(d2.result["expression"] == "2 * L'(chi_-3,-1)");
    f.eta = 0;
    CHECK_THROWS_AS(cmd_theorem("dim2", f), InputError);

    TheoremFlags g;
    g.ell = 6;
    g.sampling.samples = 1 << 14;
    const CommandResult general = cmd_theorem("general", g);
    CHECK(general.result["method"] == "qmc");

    TheoremFlags k;
    k.poly = "t^4+t^3+t^2+t+1";
    CHECK(cmd_theorem("dim1", k).result["kronecker"] == true);
    k.poly = "t^2-t-1";
    CHECK(cmd_theorem("dim1", k).result["kronecker"] == false);

    CHECK_THROWS_AS(cmd_theorem("dim9", TheoremFlags{}), InputError);
    TheoremFlags bad_pq;
    bad_pq.p = 2;
    bad_pq.q = 4;
    CHECK_THROWS_AS(cmd_theorem("trinomial", bad_pq), InputError);
    CHECK_THROWS_AS(cmd_theorem("dim3", TheoremFlags{}), InputError);
  }

  TEST_CASE("theorem verification") {
    TheoremFlags f;
    f.verify = true;
    f.p = 1;
    f.q = 2;
    const CommandResult r = cmd_theorem("trinomial", f);
    CHECK(r.cross_check["pass"] == true);
    CHECK(r.exit_code == 0);
    CHECK(r.result["phi_small"].get<double>() == doctest::Approx(0.6180339887498949));

    TheoremFlags d3;
    d3.family = "0,0;1,0;2,0|0,0;1,0;2,0|0,0;0,1";
    d3.verify = true;
    const CommandResult rd3 = cmd_theorem("dim3", d3);
    CHECK(rd3.result["p"] == 1);
    CHECK(rd3.result["q"] == 2);
    CHECK(rd3.cross_check["pass"] == true);
  }

  TEST_CASE("identities") {
    const CommandResult ok = cmd_identities(1e-9, 500, 1);
    CHECK(ok.exit_code == 0);
    CHECK(ok.result["pass"] == true);
    CHECK(ok.result["identities"].size() == 11);
    const CommandResult strict = cmd_identities(1e-18, 500, 1);
    CHECK(strict.exit_code == 4);
    CHECK_THROWS_AS(cmd_identities(0.0, 10, 1), InputError);
  }

  TEST_CASE("polytope") {
    const CommandResult det = cmd_polytope("0,0;1,0;0,1\n0,0;1,0;0,1\n0,0;1,0;0,1\n");
    CHECK(det.result["dim"] == 4);
    CHECK(det.result["class"] == "DimFourDet");
    const CommandResult one = cmd_polytope("0;1|0;3");
    CHECK(one.result["dim"] == 1);
    CHECK(one.result["class"] == "DimOne");
    const CommandResult two = cmd_polytope("0,0;1,0;0,1|0,0;2,0|0,0;0,3");
    CHECK(two.result["class"] == "DimTwo");
    CHECK(two.result["eta"] == 5);
    CHECK(two.result["binomial_root_count"] == 6);
    const CommandResult skew = cmd_polytope("0,0;1,0;0,1|0,0;1,1|0,0;0,3");
    CHECK(skew.result["eta"].is_null());
    CHECK_THROWS_AS(cmd_polytope("0|0;1"), DomainError);
    CHECK_THROWS_AS(cmd_polytope("0;a|0;1"), InputError);
  }

  TEST_CASE("text rendering") {
    const std::string text = render_text(cmd_theorem("dim4", TheoremFlags{}));
    CHECK(text.find("result.numeric: 0.548072227051") != std::string::npos);
    CHECK(text.find("elapsed_ms: ") != std::string::npos);
  }
}
