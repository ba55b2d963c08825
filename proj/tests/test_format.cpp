#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"

using namespace skry;

namespace {

ParsedAlgebra parse(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("write then parse gives the same table") {
  const AlgebraTable t = skryabin_table();
  const ParsedAlgebra p = parse(to_text(t));
  CHECK(p.table == t);
  CHECK_FALSE(p.restricted());

  const AlgebraTable g = skryabin_table({Felt(5), Felt(7), Field(3)});
  CHECK(parse(to_text(g)).table == g);

  const RestrictedAlgebra r = skryabin_envelope();
  const ParsedAlgebra q = parse(to_text(r));
  REQUIRE(q.restricted());
  CHECK(q.as_restricted() == r);
}

TEST_CASE("a single product needs no labels") {
  const ParsedAlgebra p = parse("field gf2\ndim 3\np 1 2 3:1\n");
  CHECK(p.table.dim() == 3);
  CHECK(p.table.labels() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(p.table.product(p.table.basis(0), p.table.basis(1)) == p.table.basis(2));
}

TEST_CASE("comments and blank lines are skipped; coefficients are hex") {
  const ParsedAlgebra p = parse("# sl2 over GF(4), scaled\nfield gf2^2\n\ndim 3\nlabels e f h\np 1 2 3:1\np 1 3 1:1  # [e,h]\np 2 3 2:1\n");
  CHECK(p.table == sl2_char2(Field(2)));
}

TEST_CASE("parse errors name the line") {
  CHECK_THAT(error_of("field gf2\ndim 3\np 1 4 2:1\n"), Catch::Matchers::ContainsSubstring("line 3"));
  CHECK_THAT(error_of("field gf2\ndim 3\np 2 1 3:1\n"), Catch::Matchers::ContainsSubstring("line 3"));
  CHECK_THAT(error_of("field gf2\ndim 2\nlabels a\n"), Catch::Matchers::ContainsSubstring("line 3"));
  CHECK_THAT(error_of("field gf2\n\ndim 3\np 1 2 3:1\np 1 2 3:1\n"), Catch::Matchers::ContainsSubstring("line 5"));
  CHECK_THAT(error_of("field gf2\ndim 3\np 1 2 3:2\n"), Catch::Matchers::ContainsSubstring("line 3"));
  CHECK_THAT(error_of("field gf5\n"), Catch::Matchers::ContainsSubstring("line 1"));
  CHECK_THAT(error_of("dim 2\np 1 2\n"), Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THAT(error_of("field gf2\ndim 2\nfoo\n"), Catch::Matchers::ContainsSubstring("unknown directive"));
}

TEST_CASE("a non-Jacobi table is rejected with the triple") {
  const std::string msg = error_of("field gf2\ndim 3\nlabels x y z\np 1 2 3:1\np 1 3 1:1\n");
  CHECK_THAT(msg, Catch::Matchers::ContainsSubstring("(x, y, z)"));
}

TEST_CASE("a bad 2-map is rejected") {
  // ad(x^[2]) must be ad(x)^2; here x^[2] = y but ad(y) != 0 = ad(x)^2 on the Heisenberg algebra
  const std::string msg = error_of("field gf2\ndim 3\nlabels x y z\np 1 2 3:1\ns 1 2:1\n");
  CHECK_THAT(msg, Catch::Matchers::ContainsSubstring("2-map"));
}

TEST_CASE("vector files") {
  std::istringstream in("# two vectors\n1 0 3\n0 2 0\n\n");
  const auto vs = parse_vectors(in, Field(2), 3);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0][2] == Felt(3));
  std::istringstream bad("1 0\n");
  CHECK_THROWS_AS(parse_vectors(bad, Field(2), 3), Error);
  std::istringstream outside("1 0 4\n");
  CHECK_THROWS_AS(parse_vectors(outside, Field(2), 3), Error);
}
