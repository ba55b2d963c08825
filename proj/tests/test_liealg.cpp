#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace skry;

namespace {

AlgebraTable heisenberg() {
  AlgebraTable t(Field::gf2(), {"x", "y", "z"}, "heisenberg");
  t.set_product("x", "y", t.basis("z"));
  return t;
}

// all n x n GF(2) matrices D with D[a,b] = [Da,b] + [a,Db]
std::size_t count_derivations(const AlgebraTable& t) {
  const oracle::Table o = oracle::copy(t);
  const std::size_t n = t.dim();
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
    Matrix d(t.field(), n, n);
    for (std::size_t e = 0; e < n * n; ++e) d(e / n, e % n) = Felt(code >> e & 1u);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        auto lhs = oracle::apply(o, d, o.bracket(o.unit(i), o.unit(j)));
        auto a = o.bracket(oracle::apply(o, d, o.unit(i)), o.unit(j));
        auto b = o.bracket(o.unit(i), oracle::apply(o, d, o.unit(j)));
        for (std::size_t k = 0; k < n; ++k) a[k] ^= b[k];
        ok = lhs == a;
      }
    count += ok;
  }
  return count;
}

// simple: every nonzero x generates the whole algebra as an ideal
bool simple_by_enumeration(const AlgebraTable& t) {
  const oracle::Bits b = oracle::bits(t);
  const std::size_t n = t.dim();
  if (oracle::rank(std::vector<std::uint64_t>(b.br.begin(), b.br.end())) == 0) return false;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    std::vector<std::uint64_t> ideal{x};
    for (std::size_t i = 0; i < ideal.size() && ideal.size() < 4 * n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t y = b.bracket(ideal[i], std::uint64_t{1} << j);
        auto grown = ideal;
        grown.push_back(y);
        if (oracle::rank(grown) > oracle::rank(ideal)) ideal.push_back(y);
      }
    if (oracle::rank(ideal) < static_cast<int>(n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("products are alternating and bilinear") {
  std::mt19937 rng(1);
  const AlgebraTable t = skryabin_table({Felt(3), Felt(2), Field(2)});
  const oracle::Table o = oracle::copy(t);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector x = oracle::random_vector(t.field(), 15, rng), y = oracle::random_vector(t.field(), 15, rng);
    CHECK(t.product(x, x).is_zero());
    CHECK(t.product(x, y) == t.product(y, x));
    CHECK(oracle::raw(t.product(x, y)) == o.bracket(oracle::raw(x), oracle::raw(y)));
  }
}

TEST_CASE("validate finds the broken Jacobi triple") {
  AlgebraTable t(Field::gf2(), {"x", "y", "z"});
  t.set_product("x", "y", t.basis("z"));
  t.set_product("x", "z", t.basis("x"));
  const ValidationReport r = validate(t);
  REQUIRE_FALSE(r.ok());
  CHECK(r.jacobi_violations.front() == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(validate(heisenberg()).ok());
  CHECK(validate(sl2_char2()).ok());
}

TEST_CASE("derivation algebra dimension matches enumeration of all 3x3 matrices") {
  for (const AlgebraTable& t : {sl2_char2(), heisenberg(), abelian_algebra(Field::gf2(), 3)}) {
    const Subspace der = derivation_algebra(t);
    CHECK((std::size_t{1} << der.dim()) == count_derivations(t));
    for (const Matrix& d : as_matrices(der, t.dim())) CHECK(is_derivation(t, d));
  }
}

TEST_CASE("centralizer and center by enumeration") {
  for (const AlgebraTable& t : {sl2_char2(), heisenberg(), skryabin_table()}) {
    const oracle::Bits b = oracle::bits(t);
    const std::size_t n = t.dim();
    std::vector<std::uint64_t> central;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
      bool c = true;
      for (std::size_t j = 0; j < n && c; ++j) c = b.bracket(x, std::uint64_t{1} << j) == 0;
      if (c) central.push_back(x);
    }
    CHECK(center(t).dim() == static_cast<std::size_t>(oracle::rank(central)));
  }
  const AlgebraTable h = heisenberg();
  CHECK(center(h) == Subspace::span(h.field(), 3, std::vector<Vector>{h.basis("z")}));
  CHECK(centralizer(h, h.basis("x")).dim() == 2);
}

TEST_CASE("normalizer contains the subalgebra and normalizes it") {
  const AlgebraTable t = skryabin_table();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace s(t.field(), 15);
    for (int i = 0; i < 3; ++i) s.insert(oracle::random_vector(t.field(), 15, rng));
    const Subspace nrm = normalizer(t, s);
    for (const Vector& x : nrm.basis())
      for (const Vector& y : s.basis()) CHECK(s.contains(t.product(x, y)));
    // nothing outside: test every basis vector of L not in N
    for (std::size_t i = 0; i < 15; ++i) {
      if (nrm.contains(t.basis(i))) continue;
      bool inside = true;
      for (const Vector& y : s.basis()) inside = inside && s.contains(t.product(t.basis(i), y));
      CHECK_FALSE(inside);
    }
  }
}

TEST_CASE("is_simple agrees with ideal enumeration") {
  CHECK(is_simple(sl2_char2()) == simple_by_enumeration(sl2_char2()));
  CHECK_FALSE(is_simple(heisenberg()));
  CHECK_FALSE(simple_by_enumeration(heisenberg()));
  CHECK_FALSE(is_simple(direct_product(sl2_char2(), sl2_char2())));
  CHECK_FALSE(is_simple(abelian_algebra(Field::gf2(), 1)));
}

TEST_CASE("2-envelope of sl2 satisfies the 2-map axioms") {
  const Envelope e = two_envelope(sl2_char2());
  CHECK(validate(e.algebra).ok());
  CHECK(e.base_dim() == 3);
  for (std::size_t i = 0; i < e.algebra.dim(); ++i) CHECK(is_derivation(sl2_char2(), e.derivations[i]));
  // square of each derivation lies in the span
  for (const Matrix& d : e.derivations) CHECK(e.span.contains(flatten(d * d)));
}

TEST_CASE("square is additive up to the bracket") {
  const RestrictedAlgebra r = skryabin_envelope();
  const oracle::Bits b = oracle::bits(r);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector x = oracle::random_vector(r.field(), r.dim(), rng), y = oracle::random_vector(r.field(), r.dim(), rng);
    CHECK(square(r, x + y) == square(r, x) + square(r, y) + r.base.product(x, y));
    CHECK(oracle::mask(square(r, x)) == b.square(oracle::mask(x)));
    // ad(x^[2]) = ad(x)^2
    const Matrix ad = ad_matrix(r.base, x);
    CHECK(ad_matrix(r.base, square(r, x)) == ad * ad);
  }
}

TEST_CASE("subalgebra tables and restricted closure") {
  const RestrictedAlgebra r = skryabin_envelope();
  const AlgebraTable& t = r.base;
  Subspace s(t.field(), t.dim());
  s.insert(t.basis("b1"));
  const Subspace c = restricted_closure(r, s);
  CHECK(c.contains(t.basis("b1^[2]")));
  for (const Vector& x : c.basis()) CHECK(c.contains(square(r, x)));
  const Subspace sand = Subspace::span(t.field(), t.dim(), std::vector<Vector>{t.basis("c2"), t.basis("c4"), t.basis("c5")});
  CHECK(is_subalgebra(t, sand));
  CHECK(validate(subalgebra_table(t, sand)).ok());
  CHECK(ideal_closure(t, sand).dim() >= 3);
}
