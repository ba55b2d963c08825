#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace skry;

namespace {

const std::vector<AutoKind> kAll = {AutoKind::ExpC2, AutoKind::ExpC4, AutoKind::ExpC5, AutoKind::ExpC3sq,
                                    AutoKind::Phi,   AutoKind::Psi,   AutoKind::Theta};

// every invertible 3x3 matrix over f that preserves the bracket
std::size_t count_automorphisms(const AlgebraTable& t) {
  const oracle::Table o = oracle::copy(t);
  const Field f = t.field();
  const std::uint32_t q = f.order();
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= q;
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m(f, 3, 3);
    std::uint64_t c = code;
    for (std::size_t e = 0; e < 9; ++e, c /= q) m(e / 3, e % 3) = Felt(static_cast<std::uint32_t>(c % q));
    if (oracle::preserves_bracket(o, o, m) && rank(m) == 3) ++count;
  }
  return count;
}

std::vector<std::uint32_t> key(const Matrix& m) {
  std::vector<std::uint32_t> k;
  for (Felt c : m.data()) k.push_back(c.bits);
  return k;
}

}  // namespace

TEST_CASE("family members are automorphisms over GF(2), GF(4), GF(8)") {
  for (int k : {1, 2, 3}) {
    const Field f(k);
    const oracle::Table o = oracle::copy(skryabin_table(f));
    for (Felt a : f.elements()) {
      for (AutoKind kind : kAll) {
        const LinearMap m = family_auto(kind, a, f);
        CHECK(oracle::preserves_bracket(o, o, m));
        CHECK(inverse(m));
      }
      if (!a.is_zero()) CHECK(oracle::preserves_bracket(o, o, family_auto(AutoKind::Delta, a, f)));
    }
  }
  CHECK_THROWS_AS(family_auto(AutoKind::Delta, Felt(0)), Error);
}

TEST_CASE("relations hold exhaustively") {
  for (int k : {1, 2, 3})
    for (const auto& r : verify_relations(Field(k))) {
      INFO(r.name);
      CHECK(r.instances > 0);
      CHECK(r.ok());
    }
}

TEST_CASE("a wrong relation is caught") {
  // Phi and Psi do not commute in general
  const Field f(2);
  int differ = 0;
  for (Felt a : f.elements())
    for (Felt b : f.elements())
      differ += !(family_auto(AutoKind::Phi, a, f) * family_auto(AutoKind::Psi, b, f) ==
                  family_auto(AutoKind::Psi, b, f) * family_auto(AutoKind::Phi, a, f));
  CHECK(differ > 0);
}

TEST_CASE("group closures over GF(2)") {
  std::vector<LinearMap> exps, all;
  for (AutoKind kind : kAll) {
    all.push_back(family_auto(kind, Field::one()));
    if (kind == AutoKind::Phi) exps = all;
  }
  exps.pop_back();
  const FiniteGroup e = group_closure(exps);
  CHECK(e.order() == 16);
  // exps commute and square to 1: an elementary abelian group of order 2^4
  for (const auto& g : e.elements) CHECK(g * g == LinearMap::identity(Field::gf2(), 15));
  const FiniteGroup g = group_closure(all);
  CHECK(g.order() == 128);
  const oracle::Table o = oracle::copy(skryabin_table());
  for (const auto& x : g.elements) CHECK(oracle::preserves_bracket(o, o, x));
  CHECK_THROWS_AS(group_closure(all, 100), Error);
}

TEST_CASE("automorphism search of L over GF(2) finds a group of order 128") {
  const AutomorphismSearchResult s = automorphism_search(skryabin_table());
  REQUIRE(s.order == 128);
  const oracle::Table o = oracle::copy(skryabin_table());
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& m : s.automorphisms) {
    CHECK(oracle::preserves_bracket(o, o, m));
    seen.insert(key(m));
  }
  CHECK(seen.size() == 128);
  // closed under products
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = s.automorphisms[rng() % 128];
    const auto& y = s.automorphisms[rng() % 128];
    CHECK(seen.count(key(x * y)));
  }
}

TEST_CASE("automorphisms of sl2 against enumeration of all matrices") {
  for (int k : {1, 2}) {
    const AlgebraTable t = sl2_char2(Field(k));
    CHECK(automorphism_search(t).order == count_automorphisms(t));
  }
  AlgebraTable h(Field::gf2(), {"x", "y", "z"});
  h.set_product("x", "y", h.basis("z"));
  CHECK(automorphism_search(h).order == count_automorphisms(h));
}

TEST_CASE("isomorphism test") {
  std::mt19937 rng(5);
  for (int k : {1, 2, 3}) {
    const Field f(k);
    // over GF(4) and GF(8) the search works on the realified algebra, capped at 22 dims
    const AlgebraTable t = k == 1 ? skryabin_table() : direct_product(sl2_char2(f), sl2_char2(f));
    const Matrix g = oracle::random_invertible(f, t.dim(), rng);
    const AlgebraTable moved = oracle::transport(t, g);
    const IsoResult r = is_isomorphic(t, moved);
    REQUIRE(r.witness);
    CHECK(oracle::preserves_bracket(oracle::copy(t), oracle::copy(moved), *r.witness));
  }
  const SemisimpleForm s = semisimple_form();
  const IsoResult no = is_isomorphic(skryabin_table(), s.table);
  CHECK_FALSE(no.witness);
  CHECK_FALSE(no.reason.empty());
  AlgebraTable h(Field::gf2(), {"x", "y", "z"});
  h.set_product("x", "y", h.basis("z"));
  CHECK_FALSE(is_isomorphic(sl2_char2(), h).witness);
  CHECK_THROWS_AS(is_isomorphic(skryabin_table(Field(2)), skryabin_table(Field(2))), Error);
}

TEST_CASE("conjugation convention") {
  const LinearMap g = family_auto(AutoKind::Delta, Felt(2), Field(2));
  const LinearMap x = family_auto(AutoKind::Phi, Felt(3), Field(2));
  CHECK(g * conjugate(x, g) == x * g);
}
