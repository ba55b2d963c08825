#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace skry;

namespace {

// x with (ad x)^2 = 0 and [L,x] abelian, by brute force over all of L
std::vector<std::uint64_t> sandwiches(const AlgebraTable& t) {
  const oracle::Bits b = oracle::bits(t);
  const std::size_t n = t.dim();
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    std::vector<std::uint64_t> img;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      const std::uint64_t y = b.bracket(std::uint64_t{1} << j, x);
      ok = b.bracket(y, x) == 0;
      img.push_back(y);
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = b.bracket(img[i], img[j]) == 0;
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("sandwich subalgebra of the Skryabin algebra by enumeration") {
  const AlgebraTable t = skryabin_table();
  const auto all = sandwiches(t);
  CHECK(all.size() == 7);  // closed under sums: a 3-dim space
  CHECK(oracle::rank(all) == 3);
  const Subspace s = sandwich_subalgebra(t);
  CHECK(s.dim() == 3);
  for (std::uint64_t x : all) CHECK(s.contains(bits::to_vector(x, 15)));
  CHECK(s == Subspace::span(t.field(), 15, std::vector<Vector>{t.basis("c2"), t.basis("c4"), t.basis("c5")}));
  CHECK(bracket_span(t, s, s).dim() == 0);
  for (std::uint64_t x : all) CHECK(is_sandwich(t, bits::to_vector(x, 15)));
  CHECK_FALSE(is_sandwich(t, t.basis("b1")));
}

TEST_CASE("small algebras") {
  CHECK(sandwich_subalgebra(sl2_char2()).dim() == sandwiches(sl2_char2()).size());
  const SemisimpleForm s = semisimple_form();
  CHECK(static_cast<int>(sandwich_subalgebra(s.table).dim()) == oracle::rank(sandwiches(s.table)));
}

TEST_CASE("sandwich derivations") {
  const AlgebraTable t = skryabin_table();
  const Subspace d = sandwich_derivations(t);
  CHECK(d.dim() == 4);
  for (const Matrix& m : as_matrices(d, 15)) {
    CHECK(is_derivation(t, m));
    CHECK((m * m).is_zero());
    CHECK(is_automorphism(t, exp_auto(t, m)));
  }
  // ad c3^[2] on L is one of them but not inner
  const RestrictedAlgebra r = skryabin_envelope();
  const Matrix outer = ad_on_base(r, 15, r.base.basis("c3^[2]"));
  CHECK(d.contains(flatten(outer)));
  Subspace inner(t.field(), 225);
  for (std::size_t i = 0; i < 15; ++i) inner.insert(flatten(ad_matrix(t, t.basis(i))));
  CHECK_FALSE(inner.contains(flatten(outer)));
}

TEST_CASE("weak sandwich set in the envelope") {
  const RestrictedAlgebra r = skryabin_envelope();
  const WeakSandwichSet w = weak_sandwich_set(r.base, 15);
  CHECK(w.span.dim() == 4);
  CHECK(w.is_subspace);
  CHECK(w.implies_ad_cube);
  const AlgebraTable& t = r.base;
  CHECK(w.span == Subspace::span(t.field(), 19, std::vector<Vector>{t.basis("c2"), t.basis("c4"), t.basis("c5"), t.basis("c3^[2]")}));
  // brute force over the 2^19 envelope elements
  const oracle::Bits b = oracle::bits(r);
  std::vector<std::uint64_t> hits;
  for (std::uint64_t x = 1; x < (1u << 19); ++x) {
    std::uint64_t img[15];
    for (std::size_t j = 0; j < 15; ++j) img[j] = b.bracket(std::uint64_t{1} << j, x);
    bool ok = true;
    for (std::size_t i = 0; i < 15 && ok; ++i)
      for (std::size_t j = i + 1; j < 15 && ok; ++j) ok = b.bracket(img[i], img[j]) == 0;
    if (ok) hits.push_back(x);
  }
  CHECK(hits.size() == 15);
  CHECK(oracle::rank(hits) == 4);
}

TEST_CASE("non-derivations are refused by exp_auto") {
  const AlgebraTable t = skryabin_table();
  CHECK_THROWS_AS(exp_auto(t, Matrix::identity(t.field(), 15)), Error);
  CHECK_THROWS_AS(exp_auto(t, ad_matrix(t, t.basis("b1"))), Error);
}
