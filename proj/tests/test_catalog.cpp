#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace skry;

TEST_CASE("invariant subspace recipes over GF(2)") {
  const NamedSubspaceCatalog c = invariant_subspace_recipes();
  REQUIRE(c.entries.size() == 21);
  CHECK(c.ok());
  for (const auto& e : c.entries) {
    INFO(e.name << " via " << e.recipe);
    CHECK(e.matches());
  }
  CHECK(c.at("<c5>").method == "scan");
  CHECK_FALSE(c.at("V12").note.empty());
  CHECK(c.at("V12").recipe == "[L,V8'']");
  CHECK_THROWS_AS(c.at("V13"), Error);
}

TEST_CASE("the recipes work over larger fields") {
  for (int k : {2, 3}) {
    const NamedSubspaceCatalog c = invariant_subspace_recipes(Field(k));
    CHECK(c.ok());
  }
}

TEST_CASE("catalog subspaces are fixed by every automorphism") {
  const NamedSubspaceCatalog c = invariant_subspace_recipes();
  const AutomorphismSearchResult s = automorphism_search(skryabin_table());
  REQUIRE(s.order == 128);
  for (const auto& e : c.entries)
    for (const auto& g : s.automorphisms) CHECK(map_subspace(g, e.computed) == e.computed);
}

TEST_CASE("flag inclusions") {
  const NamedSubspaceCatalog c = invariant_subspace_recipes();
  // each named subspace sits inside the ones printed as larger where the names say so
  CHECK(c.at("V4").computed.contains(c.at("<c2>").computed));
  CHECK(c.at("V5").computed.contains(c.at("<b8,c2>").computed));
  CHECK(c.at("V8").computed.contains(c.at("V6").computed));
  CHECK(c.at("V12").computed.contains(c.at("V11").computed));
  CHECK(c.at("V9'").computed.contains(c.at("V8'").computed));
  for (const auto& e : c.entries) {
    if (e.name[0] != 'V') continue;
    std::size_t d = 0;
    for (char ch : e.name)
      if (ch >= '0' && ch <= '9') d = d * 10 + static_cast<std::size_t>(ch - '0');
    CHECK(e.computed.dim() == d);
  }
}

TEST_CASE("an envelope that does not contain L is refused") {
  CHECK_THROWS_AS(invariant_subspace_recipes(skryabin_table(), two_envelope(sl2_char2()).algebra), Error);
}
