#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"

using namespace skry;

TEST_CASE("check ids are stable and unique") {
  const std::vector<std::string> ids = {"jacobi-all-params", "iso-family",      "env-dim-19",      "der-dim-19",        "sandwich-3",
                                        "sandwich-der-4",    "torus-census",    "centralizer-census", "cartan-all",     "rank-4",
                                        "thin-all-4-tori",   "aut-relations",   "exp-order-16",    "aut-order-128",     "invariant-catalog",
                                        "universal-group",   "profile-skryabin", "semisimple-form"};
  std::vector<std::string> got;
  for (const auto& c : skryabin_checks()) {
    got.push_back(c.id);
    CHECK(c.target > 0);
  }
  CHECK(got == ids);
}

TEST_CASE("selected checks run in the fixed order") {
  const auto rs = run_skryabin_checks({"universal-group", "jacobi-all-params", "sandwich-3"});
  REQUIRE(rs.size() == 3);
  CHECK(rs[0].id == "jacobi-all-params");
  CHECK(rs[1].id == "sandwich-3");
  CHECK(rs[2].id == "universal-group");
  CHECK(all_pass(rs));
  CHECK_THROWS_AS(run_skryabin_checks({"no-such-check"}), Error);
}

TEST_CASE("output is deterministic without timings") {
  std::ostringstream a, b;
  write_results(a, run_skryabin_checks({"der-dim-19", "exp-order-16"}));
  write_results(b, run_skryabin_checks({"der-dim-19", "exp-order-16"}));
  CHECK(a.str() == b.str());
  CHECK_THAT(a.str(), Catch::Matchers::StartsWith("PASS  der-dim-19  dim Der = 19"));
  CHECK(a.str().find(" s)") == std::string::npos);
}

TEST_CASE("a failing or slow result is reported as such") {
  CheckResult wrong{"x", "1", "2", false, 0.1, 5, ""};
  CheckResult slow{"y", "1", "1", true, 9, 5, "note"};
  CHECK_FALSE(wrong.pass());
  CHECK_FALSE(slow.pass());
  CHECK_FALSE(all_pass({wrong}));
  std::ostringstream out;
  write_results(out, {wrong, slow});
  CHECK(out.str() == "FAIL  x  2  [expected 1]\nFAIL  y  1  [over time target 5 s]\n      note\n");
}

TEST_CASE("an exception inside a check becomes a failure") {
  ReportContext ctx;
  const CheckSpec boom{"boom", "throws", 1, [](ReportContext&) -> CheckOutcome { throw Error(ErrorKind::Validation, "nope"); }};
  const CheckResult r = run_check(boom, ctx);
  CHECK_FALSE(r.pass());
  CHECK_THAT(r.computed, Catch::Matchers::ContainsSubstring("nope"));
}

TEST_CASE("generic checks on a user table") {
  std::istringstream in(to_text(sl2_char2()));
  const ParsedAlgebra a = parse_algebra(in);
  const auto rs = run_generic_checks(a, {});
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].id == "validate");
  CHECK(rs[0].pass());
  CHECK(rs[1].id == "profile");
  CHECK(rs[1].computed == to_string(invariant_profile(sl2_char2())));
  CHECK_THROWS_AS(run_generic_checks(a, {"torus-census"}), Error);

  // the printed envelope is its own 2-envelope, so its profile is the Skryabin row
  std::istringstream env(to_text(skryabin_envelope()));
  const auto p = invariant_profile(parse_algebra(env));
  CHECK(p.tr == 4);
  CHECK(p.n1 == 384);
  CHECK(p.nm == 26880);
}
