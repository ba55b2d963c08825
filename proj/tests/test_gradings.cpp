#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace skry;

namespace {

using Small = std::vector<std::vector<long long>>;

long long det(const Small& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Small minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return s;
}

// gcd of all k x k minors
long long determinantal_divisor(const Small& m, std::size_t k) {
  const std::size_t r = m.size(), c = m[0].size();
  long long g = 0;
  for (std::uint32_t rows = 0; rows < (1u << r); ++rows) {
    if (static_cast<std::size_t>(std::popcount(rows)) != k) continue;
    for (std::uint32_t cols = 0; cols < (1u << c); ++cols) {
      if (static_cast<std::size_t>(std::popcount(cols)) != k) continue;
      Small sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rows >> i & 1u)) continue;
        std::vector<long long> row;
        for (std::size_t j = 0; j < c; ++j)
          if (cols >> j & 1u) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      g = std::gcd(g, std::llabs(det(sub)));
    }
  }
  return g;
}

IntMatrix big(const Small& m) {
  IntMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

long long det_big(const IntMatrix& m) {
  Small s;
  for (const auto& row : m) {
    s.emplace_back();
    for (const auto& x : row) s.back().push_back(static_cast<long long>(x));
  }
  return det(s);
}

}  // namespace

TEST_CASE("Smith normal form against determinantal divisors") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Small m(r, std::vector<long long>(c));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    if (trial % 4 == 0)
      for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = 2 * m[0][j];
    const SmithForm s = smith_normal_form(big(m));
    CHECK(s.d == int_multiply(int_multiply(s.u, big(m)), s.v));
    CHECK(std::llabs(det_big(s.u)) == 1);
    CHECK(std::llabs(det_big(s.v)) == 1);
    long long prefix = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      const BigInt dk = s.d[k - 1][k - 1];
      CHECK(dk >= 0);
      if (k > 1 && s.d[k - 2][k - 2] != 0) CHECK(dk % s.d[k - 2][k - 2] == 0);
      prefix *= static_cast<long long>(dk);
      CHECK(prefix == determinantal_divisor(m, k));
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.d[i][j] == 0);
  }
}

TEST_CASE("universal group of the Skryabin basis grading") {
  const AlgebraTable t = skryabin_table();
  const UniversalGrading u = universal_grading_group(t);
  CHECK(u.group.free_rank == 1);
  CHECK(u.group.torsion == std::vector<long long>{2});
  CHECK(u.group.describe() == "Z + Z/2");
  CHECK(check_grading(t, u.grading).ok);
  // every nonzero product gives one relation row
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = i + 1; j < 15; ++j) nonzero += !t.basis_product(i, j).is_zero();
  CHECK(u.relations.size() == nonzero);
}

TEST_CASE("Z-grading from the diagonal automorphisms and its reductions") {
  const AlgebraTable t = skryabin_table();
  const Grading z = grading_from_diagonal();
  CHECK(check_grading(t, z).ok);
  for (long long n = 1; n <= 7; ++n) CHECK(check_grading(t, reduce_grading_mod(z, n)).ok);
  // shifting one degree breaks it
  Grading bad = z;
  bad.degrees[t.index("b1")][0] += 1;
  const GradingCheck c = check_grading(t, bad);
  CHECK_FALSE(c.ok);
  CHECK_THAT(c.violation, Catch::Matchers::ContainsSubstring("b1"));
}

TEST_CASE("universal groups of small algebras") {
  // [e,h] = e forces deg h = 0, then [e,f] = h forces deg e + deg f = 0
  CHECK(universal_grading_group(sl2_char2()).group.describe() == "Z");
  CHECK(universal_grading_group(abelian_algebra(Field::gf2(), 3)).group.describe() == "Z + Z + Z");
  AlgebraTable h(Field::gf2(), {"x", "y", "z"});
  h.set_product("x", "y", h.basis("z"));
  CHECK(universal_grading_group(h).group.describe() == "Z + Z");
  AlgebraTable mixed(Field::gf2(), {"x", "y", "z"});
  mixed.set_product("x", "y", h.basis("z") + h.basis("x"));
  CHECK_THROWS_AS(universal_grading_group(mixed), Error);
}

TEST_CASE("universal gradings are gradings") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    // random monomial Lie algebra: keep products only if Jacobi survives
    AlgebraTable t(Field::gf2(), {"a", "b", "c", "d", "e"});
    for (int tries = 0; tries < 6; ++tries) {
      const std::size_t i = rng() % 5, j = rng() % 5, k = rng() % 5;
      if (i == j) continue;
      AlgebraTable next = t;
      next.set_product(std::min(i, j), std::max(i, j), t.basis(k));
      if (validate(next).ok()) t = next;
    }
    const UniversalGrading u = universal_grading_group(t);
    CHECK(check_grading(t, u.grading).ok);
  }
}

TEST_CASE("abelian group arithmetic") {
  const AbelianGroup g{1, {2, 4}};
  CHECK(g.add({1, 1, 3}, {2, 1, 2}) == std::vector<long long>{3, 0, 1});
  CHECK(g.normalize({-1, -1, -5}) == std::vector<long long>{-1, 1, 3});
  CHECK_THROWS_AS(g.normalize({1}), Error);
}
