#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace skry;

namespace {

// every vector of GF(2)^n as a mask, filtered
std::set<std::uint64_t> members(const Subspace& s) {
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.ambient()); ++m)
    if (s.contains(bits::to_vector(m, s.ambient()))) out.insert(m);
  return out;
}

std::set<std::uint64_t> span_by_enumeration(const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> out{0};
  for (std::uint64_t g : gens) {
    std::set<std::uint64_t> next = out;
    for (std::uint64_t x : out) next.insert(x ^ g);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("GF(2) rank equals log2 of the image size") {
  std::mt19937 rng(1);
  const Field f = Field::gf2();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const Matrix m = oracle::random_matrix(f, r, c, rng);
    std::vector<std::uint64_t> cols;
    for (std::size_t j = 0; j < c; ++j) cols.push_back(oracle::mask(m.column(j)));
    const auto img = span_by_enumeration(cols);
    CHECK((std::uint64_t{1} << rank(m)) == img.size());
    CHECK(static_cast<int>(rank(m)) == oracle::rank(cols));
  }
}

TEST_CASE("rank-nullity and kernel vectors over several fields") {
  std::mt19937 rng(2);
  for (int k : {1, 2, 3, 4}) {
    const Field f(k);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
      Matrix m = oracle::random_matrix(f, r, c, rng);
      if (trial % 3 == 0 && r > 1)  // force a dependent row
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);
      const Subspace ker = kernel(m);
      CHECK(ker.dim() + rank(m) == c);
      for (const Vector& v : ker.basis()) CHECK((m * v).is_zero());
      CHECK(image(m).dim() == rank(m));
      CHECK(rank(m.transpose()) == rank(m));
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937 rng(3);
  for (int k : {1, 2, 5}) {
    const Field f(k);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 7;
      const Matrix m = oracle::random_matrix(f, n, n, rng);
      const auto inv = inverse(m);
      CHECK(inv.has_value() == (rank(m) == n));
      if (inv) {
        CHECK(m * *inv == Matrix::identity(f, n));
        CHECK(*inv * m == Matrix::identity(f, n));
      }
      const Vector x = oracle::random_vector(f, n, rng);
      const SolveResult s = solve(m, m * x);
      REQUIRE(s.particular);
      CHECK(m * *s.particular == m * x);
    }
  }
  const Field f = Field::gf2();
  Matrix z(f, 2, 2);
  z(0, 0) = Felt(1);
  Vector b(f, 2);
  b.set(1, Felt(1));
  CHECK_FALSE(solve(z, b).particular);
  CHECK_THROWS_AS(inverse(Matrix(f, 2, 3)), Error);
}

TEST_CASE("intersection and sum match enumeration in GF(2)^7") {
  std::mt19937 rng(4);
  const Field f = Field::gf2();
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::uint64_t> gu, gv;
    Subspace u(f, 7), v(f, 7);
    for (std::size_t i = 0, du = rng() % 6; i < du; ++i) gu.push_back(rng() & 127u);
    for (std::size_t i = 0, dv = rng() % 6; i < dv; ++i) gv.push_back(rng() & 127u);
    for (auto g : gu) u.insert(bits::to_vector(g, 7));
    for (auto g : gv) v.insert(bits::to_vector(g, 7));
    const auto su = span_by_enumeration(gu), sv = span_by_enumeration(gv);
    std::set<std::uint64_t> both;
    for (auto x : su)
      if (sv.count(x)) both.insert(x);
    const MeetJoin mj = meet_join(u, v);
    CHECK(members(mj.intersection) == both);
    std::vector<std::uint64_t> all = gu;
    all.insert(all.end(), gv.begin(), gv.end());
    CHECK(members(mj.sum) == span_by_enumeration(all));
  }
}

TEST_CASE("dim U + dim V = dim (U & V) + dim (U + V) over GF(8)") {
  std::mt19937 rng(5);
  const Field f(3);
  for (int trial = 0; trial < 50; ++trial) {
    Subspace u(f, 6), v(f, 6);
    for (std::size_t i = 0, du = rng() % 6; i < du; ++i) u.insert(oracle::random_vector(f, 6, rng));
    for (std::size_t i = 0, dv = rng() % 6; i < dv; ++i) v.insert(oracle::random_vector(f, 6, rng));
    if (trial % 2) v.insert(u.basis().empty() ? Vector(f, 6) : u.basis().front());
    const Subspace i = intersect(u, v);
    CHECK(u.dim() + v.dim() == i.dim() + (u + v).dim());
    CHECK(u.contains(i));
    CHECK(v.contains(i));
  }
}

TEST_CASE("subspace equality ignores the spanning set") {
  std::mt19937 rng(6);
  const Field f(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vector> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracle::random_vector(f, 5, rng));
    std::vector<Vector> mixed = {gens[0] + gens[1], gens[1].scaled(Felt(2)), gens[2] + gens[0].scaled(Felt(3)), gens[0]};
    CHECK(Subspace::span(f, 5, gens) == Subspace::span(f, 5, mixed));
  }
}

TEST_CASE("coordinates in a basis round-trip") {
  std::mt19937 rng(8);
  const Field f(4);
  std::vector<Vector> basis;
  Subspace s(f, 6);
  while (basis.size() < 4) {
    Vector v = oracle::random_vector(f, 6, rng);
    if (s.insert(v)) basis.push_back(v);
  }
  const CoordinateSystem cs(f, 6, basis);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector c = oracle::random_vector(f, 4, rng);
    const Vector x = cs.element(c);
    REQUIRE(cs.coords(x));
    CHECK(*cs.coords(x) == c);
  }
  CHECK_THROWS_AS(CoordinateSystem(f, 6, {basis[0], basis[0]}), Error);
}

TEST_CASE("for_each_element visits q^d distinct vectors") {
  const Field f(2);
  Subspace s(f, 4);
  s.insert(Vector::unit(f, 4, 0) + Vector::unit(f, 4, 2));
  s.insert(Vector::unit(f, 4, 1).scaled(Felt(3)));
  std::set<std::vector<std::uint32_t>> seen;
  for_each_element(s, [&](const Vector& x) {
    CHECK(s.contains(x));
    seen.insert(oracle::raw(x));
  });
  CHECK(seen.size() == 16);
}

TEST_CASE("mismatched shapes throw") {
  const Field f = Field::gf2();
  CHECK_THROWS_AS(Matrix(f, 2, 3) * Matrix(f, 2, 3), Error);
  CHECK_THROWS_AS(Matrix(f, 2, 3) * Vector(f, 2), Error);
  CHECK_THROWS_AS(Vector(f, 2) + Vector(f, 3), Error);
  CHECK_THROWS_AS(Vector(f, 2) + Vector(Field(2), 2), Error);
}
