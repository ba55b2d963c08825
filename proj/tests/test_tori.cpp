#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"

using namespace skry;

namespace {

std::vector<std::uint64_t> torals_by_enumeration(const oracle::Bits& b) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << b.n); ++x)
    if (b.square(x) == x) out.push_back(x);
  return out;
}

struct Census {
  std::uint64_t bases[5] = {0, 0, 0, 0, 0};  // unordered independent commuting sets of size d
};

// plain nested loops over commuting toral elements, independence by rank
Census census(const oracle::Bits& b, const std::vector<std::uint64_t>& t) {
  const std::size_t m = t.size();
  std::vector<std::vector<char>> c(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c[i][j] = b.bracket(t[i], t[j]) == 0;
  Census out;
  out.bases[1] = m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!c[i][j]) continue;
      ++out.bases[2];
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!c[i][k] || !c[j][k] || t[k] == (t[i] ^ t[j])) continue;
        ++out.bases[3];
        for (std::size_t l = k + 1; l < m; ++l)
          if (c[i][l] && c[j][l] && c[k][l] && oracle::rank({t[i], t[j], t[k], t[l]}) == 4) ++out.bases[4];
      }
    }
  return out;
}

}  // namespace

TEST_CASE("toral elements and tori of the envelope by enumeration") {
  const RestrictedAlgebra r = skryabin_envelope();
  const oracle::Bits b = oracle::bits(r);
  const auto t = torals_by_enumeration(b);
  CHECK(t.size() == 384);
  const TorusEnumerator e(to_bits(r));
  CHECK(e.torals().size() == 384);
  std::vector<std::uint64_t> mine(e.torals().begin(), e.torals().end());
  std::sort(mine.begin(), mine.end());
  CHECK(mine == t);

  const Census c = census(b, t);
  CHECK(c.bases[2] == 6144);
  CHECK(c.bases[3] == 21504);
  CHECK(c.bases[4] == 26880);
  for (int d = 2; d <= 4; ++d) {
    CHECK(e.toral_bases(d) == c.bases[d]);
    // each d-dim torus has |GL(d,2)|/d! unordered bases
    std::uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= static_cast<std::uint64_t>(i);
    CHECK(e.count(d) * gl_order(d) / fact == c.bases[d]);
    CHECK(e.ordered_tuples(d) == c.bases[d] * fact);
  }
  CHECK(e.count(5) == 0);
  CHECK(e.toral_bases(5) == 0);
  CHECK(e.count(2) == 2048);
  CHECK(e.count(3) == 768);
  CHECK(e.count(4) == 32);
}

TEST_CASE("every 4-torus is a thin Cartan subalgebra") {
  const RestrictedAlgebra r = skryabin_envelope();
  const TorusEnumeration en = enumerate_tori(r, 4);
  REQUIRE(en.tori.size() == 32);
  CHECK(en.bases == 26880);
  for (const Subspace& s : en.tori) {
    CHECK(is_cartan(r.base, s));
    for (const Vector& x : s.basis()) CHECK(square(r, x) == x);
    const RootDecomposition d = root_decomposition(r, 15, s.basis());
    CHECK(is_thin(d).thin);
  }
}

TEST_CASE("the printed torus, its roots and thin table") {
  const RestrictedAlgebra r = skryabin_envelope();
  const auto torus = canonical_torus();
  const RootDecomposition d = root_decomposition(r, 15, torus);
  REQUIRE(is_thin(d).thin);
  // eigenvalue check by hand: [e, t_i] = alpha_i e for each root vector
  for (const auto& [alpha, w] : d.roots) {
    const Vector e = w.basis().front();
    Vector lifted(r.field(), 19);
    for (std::size_t k = 0; k < 15; ++k) lifted.set(k, e[k]);
    for (std::size_t i = 0; i < 4; ++i) {
      const Vector br = r.base.product(lifted, torus[i]);
      CHECK(br == ((alpha >> i & 1u) ? lifted : Vector(r.field(), 19)));
    }
  }
  const AlgebraTable l = skryabin_table();
  const AlgebraTable thin = thin_table(l, d);
  CHECK(validate(thin).ok());
  CHECK(check_grading(thin, thin_grading(thin)).ok);
  // relabelled table is isomorphic to L
  CHECK(is_isomorphic(l, thin).witness);
  const Subspace c = centralizer(l, Subspace(l.field(), 15));
  CHECK(c.dim() == 15);
}

TEST_CASE("toral rank") {
  const ToralRank tr = toral_rank(skryabin_envelope(), true);
  CHECK(tr.rank == 4);
  CHECK(tr.witness_cartan);
  CHECK(tr.toral_count == 384);
  CHECK(tr.maximal_tori == 32);
  CHECK(tr.maximal_bases == 26880);

  // sl2 in characteristic 2: enumerate its envelope
  const Envelope e = two_envelope(sl2_char2());
  const oracle::Bits b = oracle::bits(e.algebra);
  const auto t = torals_by_enumeration(b);
  int best = t.empty() ? 0 : 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (b.bracket(t[i], t[j]) == 0) best = std::max(best, 2);
  CHECK(toral_rank(sl2_char2()).rank == best);
}

TEST_CASE("the centralizer of the first printed toral generator") {
  const RestrictedAlgebra r = skryabin_envelope();
  const AlgebraTable l = skryabin_table();
  const Vector h = canonical_torus().front();
  Subspace c(l.field(), 15);
  const Subspace ker = kernel(ad_on_base(r, 15, h));
  for (const Vector& v : ker.basis()) c.insert(v);
  CHECK(c == Subspace::span(l.field(), 15, hamiltonian_centralizer()));
  // the printed list differs in one vector, which does not commute with h
  const auto printed = hamiltonian_centralizer(Field::gf2(), CentralizerBasis::Printed);
  int outside = 0;
  for (const Vector& v : printed) outside += !c.contains(v);
  CHECK(outside == 1);
  CHECK_FALSE(c.contains(l.sum({"b2", "c3", "c4"})));

  const AlgebraTable h7 = subalgebra_table(l, c, hamiltonian_centralizer());
  CHECK(h7.dim() == 7);
  CHECK(is_simple(h7));
  CHECK(centroid(h7).dim() == 1);
  CHECK(toral_rank(h7).rank == 3);
}

TEST_CASE("non-toral input is refused") {
  const RestrictedAlgebra r = skryabin_envelope();
  std::vector<Vector> bad = canonical_torus();
  bad[0] = r.base.basis("b2");
  CHECK_THROWS_AS(root_decomposition(r, 15, bad), Error);
  CHECK_THROWS_AS(enumerate_tori(skryabin_envelope(Field(2)), 2), Error);
}
