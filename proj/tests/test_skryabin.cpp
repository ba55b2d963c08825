#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace skry;

TEST_CASE("L(beta,delta) satisfies Jacobi for every parameter over GF(2), GF(4), GF(8)") {
  for (int k : {1, 2, 3}) {
    const Field f(k);
    for (Felt b : f.elements())
      for (Felt d : f.elements()) {
        // independent Jacobi check on basis triples
        const oracle::Table o = oracle::copy(skryabin_table({b, d, f}));
        bool ok = true;
        for (std::size_t i = 0; i < 15 && ok; ++i)
          for (std::size_t j = i + 1; j < 15 && ok; ++j)
            for (std::size_t l = j + 1; l < 15 && ok; ++l) {
              auto x = o.bracket(o.bracket(o.unit(i), o.unit(j)), o.unit(l));
              const auto y = o.bracket(o.bracket(o.unit(j), o.unit(l)), o.unit(i));
              const auto z = o.bracket(o.bracket(o.unit(l), o.unit(i)), o.unit(j));
              for (std::size_t c = 0; c < 15; ++c) x[c] ^= y[c] ^ z[c];
              ok = x == std::vector<std::uint32_t>(15, 0);
            }
        CHECK(ok);
        CHECK(validate(skryabin_table({b, d, f})).ok());
      }
  }
}

TEST_CASE("the parameters change the table") {
  const Field f(2);
  CHECK_FALSE(skryabin_table({Felt(1), Felt(0), f}) == skryabin_table(f));
  CHECK_FALSE(skryabin_table({Felt(0), Felt(1), f}) == skryabin_table(f));
  CHECK_THROWS_AS(skryabin_table({Felt(4), Felt(0), f}), Error);
}

TEST_CASE("family isomorphisms L(0,0) -> L(beta,delta)") {
  for (int k : {1, 2, 3}) {
    const Field f(k);
    const oracle::Table src = oracle::copy(skryabin_table(f));
    for (Felt b : f.elements())
      for (Felt d : f.elements()) {
        const auto m = family_isomorphism(b, d, f);
        REQUIRE(m);
        CHECK(inverse(*m));
        CHECK(oracle::preserves_bracket(src, oracle::copy(skryabin_table({b, d, f})), *m));
      }
  }
}

TEST_CASE("the printed second basis change is kept where it works") {
  // beta^2 = sqrt(beta) iff beta^4 = beta, so only beta in GF(2)
  const Field f(3);
  int printed = 0;
  for (Felt b : f.elements()) {
    const auto r = resolve_lemma_two(b, f);
    REQUIRE(r);
    printed += r->variant.coefficient == LemmaTwoCoefficient::BetaSquared;
  }
  CHECK(printed == 2);
}

TEST_CASE("the printed envelope") {
  const RestrictedAlgebra r = skryabin_envelope();
  CHECK(r.dim() == 19);
  CHECK(validate(r).ok());
  // L is an ideal
  for (std::size_t i = 0; i < 19; ++i)
    for (std::size_t j = 0; j < 15; ++j) {
      const Vector p = r.base.basis_product(i, j);
      for (std::size_t k = 15; k < 19; ++k) CHECK(p[k].is_zero());
    }
  // the four new directions are squares of elements of L
  const oracle::Bits b = oracle::bits(r);
  std::vector<std::uint64_t> sq;
  for (std::uint64_t x = 0; x < (1u << 15); ++x) sq.push_back(b.square(x));
  CHECK(oracle::rank(sq) == 19);
  // ad on L of x^[2] is ad(x)^2
  for (std::uint64_t x : {0x1ull, 0x8ull, 0x40ull, 0x1234ull, 0x7fffull}) {
    const Vector v = bits::to_vector(x, 19);
    const Matrix a = ad_on_base(r, 15, v);
    CHECK(ad_on_base(r, 15, square(r, v)) == a * a);
  }
}

TEST_CASE("computed envelope and derivations have dimension 19") {
  const AlgebraTable t = skryabin_table();
  const Envelope e = two_envelope(t);
  CHECK(e.algebra.dim() == 19);
  const Subspace der = derivation_algebra(t);
  CHECK(der.dim() == 19);
  CHECK(der == e.span);
  CHECK(centroid(t).dim() == 1);
  CHECK(center(t).dim() == 0);
}

TEST_CASE("semisimple form") {
  const SemisimpleForm s = semisimple_form();
  CHECK(validate(s.table).ok());
  CHECK(s.socle.dim() == 12);
  CHECK(ideal_closure(s.table, s.socle) == s.socle);
  CHECK_FALSE(is_simple(s.table));
  const oracle::Table o = oracle::copy(s.table);
  for (int k : {1, 2}) {
    const Field f(k);
    const oracle::Table of = oracle::copy(semisimple_form(f).table);
    for (Felt a : f.elements()) CHECK(oracle::preserves_bracket(of, of, semisimple_phi_auto(a, f)));
  }
  CHECK(oracle::preserves_bracket(o, o, semisimple_phi_auto(Felt(1))));
}

TEST_CASE("printed helper data is consistent") {
  const AlgebraTable t = skryabin_table();
  CHECK(thin_basis().size() == 15);
  CHECK(printed_thin_table().size() == 105);
  CHECK(printed_invariant_subspaces().size() == 21);
  const auto h = hamiltonian_centralizer();
  CHECK(Subspace::span(t.field(), 15, h).dim() == 7);
  CHECK(canonical_torus().size() == 4);
}
