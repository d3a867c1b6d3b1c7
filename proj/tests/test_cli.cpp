#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "qcover/cli.hpp"
#include "qcover/error.hpp"
#include "qcover/invariants.hpp"
#include "qcover/serialize.hpp"

using namespace qcover;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("text rendering") {
  CHECK(to_text(CycInt(20, {0, -2, 0, 4, 0, -1, 0, -2})) == "-2ζ20 + 4ζ20^3 - ζ20^5 - 2ζ20^7");
  CHECK(to_text(eta(5)) == "(1/5)(2ζ20 + ζ20^3 + ζ20^5 - 3ζ20^7)");
  CHECK(to_text(CycInt::zero(14)) == "0");
  CHECK(to_text(AbelianGroup{0, {5, 5}}) == "Z_5 ⊕ Z_5");
  CHECK(to_text(AbelianGroup{2, {3}}) == "Z^2 ⊕ Z_3");
  CHECK(to_text(AbelianGroup{}) == "0");
}

TEST_CASE("JSON round trips") {
  const CycNum e = eta(7);
  CHECK(cycnum_from_json(to_json(e)) == e);
  CHECK(cycint_from_json(to_json(e.num())) == e.num());
  const SkeinElem om = twist(omega(7), -1);
  CHECK(skein_from_json(to_json(om)) == om);
  const AbelianGroup g{1, {7, 49}};
  CHECK(group_from_json(to_json(g)) == g);
  // coefficients past int64 are strings
  const CycInt big = CycInt::integer(20, mpz_class("123456789012345678901234567890"));
  CHECK(to_json(big)["coeffs"][0].is_string());
  CHECK(cycint_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(cycint_from_json(json{{"modulus", 20}}), ParseError);
}

TEST_CASE("invariant subcommand") {
  const Run r5 = run({"invariant", "--p", "5", "--format", "text"});
  CHECK(r5.code == 0);
  CHECK(r5.out.find("NOT congruent to κ^m·n mod 5") != std::string::npos);
  CHECK(r5.out.find("-2ζ20 + 4ζ20^3 - ζ20^5 - 2ζ20^7") != std::string::npos);
  CHECK(r5.out.find("Z_5 ⊕ Z_5") != std::string::npos);

  const Run r7 = run({"invariant", "--p", "7", "--json"});
  CHECK(r7.code == 0);
  const json j = json::parse(r7.out);
  CHECK(j["congruence"]["congruent"] == true);
  CHECK(cycnum_from_json(j["value"]) == invariant_Mtilde(7));
  CHECK(verdict_from_json(j["congruence"]).witness->n == 0);
  CHECK(group_from_json(j["homology"]) == AbelianGroup{0, {7, 7}});
}

TEST_CASE("outputs are deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"invariant", "--p", "7", "--json"},
        {"orbit-check", "--p", "5", "--colors", "3", "--seed", "9", "--json"},
        {"cover", "analyze", "--form", "A25+A5+B5[2]", "--char", "tors:1/5,0,1/5", "--json"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("other subcommands") {
  CHECK(run({"homology", "--matrix", "0,5;5,5", "--format", "text"}).out == "Z_5 ⊕ Z_5\n");
  CHECK(run({"homology", "--matrix", "0,0;0,4", "--format", "text"}).out == "Z ⊕ Z_4\n");
  const Run hopf = run({"hopf", "--p", "7", "--n", "3", "--json"});
  CHECK(cycint_from_json(json::parse(hopf.out)["value"]) == hopf_bracket(7, 3));
  const Run val = run({"valuation", "--p", "11", "--json"});
  CHECK(json::parse(val.out)["meets_cm_bound"] == true);
  CHECK(json::parse(val.out)["in_p_O"] == true);
  const Run orbit = run({"orbit-check", "--p", "3", "--colors", "2", "--ones", "--format", "text"});
  CHECK(orbit.out.find("LHS = 8, RHS = 2") != std::string::npos);
  const Run cover = run({"cover", "analyze", "--form", "A9", "--char", "tors:1/3", "--curve", "tors:3",
                         "--format", "text"});
  CHECK(cover.code == 0);
  CHECK(cover.out.find("simple cover: no") != std::string::npos);
  CHECK(cover.out.find("complement of given curves simple: yes") != std::string::npos);
  const json cj = json::parse(run({"cover", "analyze", "--form", "A9+A3", "--char", "tors:1/9,1/3", "--json"}).out);
  CHECK(cj["scc2"].size() == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"invariant"}).code == kExitUsage);
  CHECK(run({"invariant", "--p", "9"}).code == kExitUsage);
  CHECK(run({"invariant", "--p", "3"}).code == kExitUsage);
  CHECK(run({"homology", "--matrix", "1,x"}).code == kExitUsage);
  CHECK(run({"cover", "analyze", "--form", "Q5", "--char", "tors:0"}).code == kExitUsage);
  CHECK(run({"invariant", "--p", "11"}).code == kExitDomainError);
  CHECK(run({"cover", "analyze", "--form", "A5", "--char", "tors:1/25"}).code == kExitDomainError);
  CHECK(run({"invariant", "--p", "5", "--format", "yaml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("format from the environment") {
  setenv("QCOVER_FORMAT", "json", 1);
  const Run r = run({"homology", "--matrix", "0,5;5,5"});
  CHECK(json::parse(r.out)["torsion"] == json::array({5, 5}));
  CHECK(run({"homology", "--matrix", "0,5;5,5", "--format", "text"}).out == "Z_5 ⊕ Z_5\n");
  unsetenv("QCOVER_FORMAT");
  CHECK(run({"homology", "--matrix", "0,5;5,5"}).out == "Z_5 ⊕ Z_5\n");
}
