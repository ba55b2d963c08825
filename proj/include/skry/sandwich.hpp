#pragma once

// Sandwich elements ((ad x)^2 = 0 and [[L,x],[L,x]] = 0), the sandwich
// subalgebra, sandwich derivations, and the weak-sandwich set of an envelope.

#include <bitset>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skry/bits.hpp"
#include "skry/liealg.hpp"

namespace skry {

/// Elements scanned by the exhaustive GF(2) routines (2^n).
inline constexpr std::size_t kSandwichScanMaxDim = 24;

inline bool is_sandwich(const AlgebraTable& t, const Vector& x) {
  const Matrix ad = ad_matrix(t, x);
  if (!(ad * ad).is_zero()) return false;
  const Subspace img = image(ad);
  return bracket_span(t, img, img).dim() == 0;
}

namespace detail {

/// [[L,x],[L,x]] = 0 where L is spanned by the first `l` basis vectors; `ad` has l columns.
inline bool weak_sandwich_bits(const bits::BitAlgebra& b, const bits::BitMatrix& ad) {
  bits::BitBasis img;
  for (bits::Mask c : ad.cols) img.insert(c);
  const auto rows = img.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (b.bracket(rows[i], rows[j]) != 0) return false;
  return true;
}

inline bool square_zero_bits(const bits::BitMatrix& m) {
  for (bits::Mask c : m.cols)
    if (m.apply(c) != 0) return false;
  return true;
}

/// Gray-code scan of all x in span(e_0..e_{n-1}) with ad(x) restricted to the first l inputs.
template <class Fn>
void scan_ad(const bits::BitAlgebra& b, std::size_t l, Fn&& fn) {
  const std::size_t n = b.dim();
  if (n > kSandwichScanMaxDim) throw Error(ErrorKind::SearchSpaceTooLarge, "exhaustive scan limited to dim 24");
  std::vector<bits::BitMatrix> ad_basis;
  for (std::size_t i = 0; i < n; ++i) ad_basis.push_back(b.ad(bits::bit(i), l));
  bits::BitMatrix ad;
  ad.cols.assign(l, 0);
  bits::Mask x = 0;
  fn(x, ad);
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << n); ++g) {
    const auto i = static_cast<std::size_t>(std::countr_zero(g));
    x ^= bits::bit(i);
    for (std::size_t j = 0; j < l; ++j) ad.cols[j] ^= ad_basis[i].cols[j];
    fn(x, ad);
  }
}

}  // namespace detail

/// Linear span of all sandwiches. Exhaustive over GF(2); over a larger field
/// the table must have GF(2) structure constants and the GF(2) span is
/// returned after checking it still consists of sandwiches and is abelian.
inline Subspace sandwich_subalgebra(const AlgebraTable& t) {
  const Field f = t.field();
  const std::size_t n = t.dim();
  if (f.is_prime()) {
    const bits::BitAlgebra b = to_bits(t);
    bits::BitBasis span;
    detail::scan_ad(b, n, [&](bits::Mask x, const bits::BitMatrix& ad) {
      if (x == 0 || span.contains(x)) return;
      if (detail::square_zero_bits(ad) && detail::weak_sandwich_bits(b, ad)) span.insert(x);
    });
    return span.to_subspace(n);
  }
  AlgebraTable prime(Field::gf2(), t.labels(), t.name());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(Field::gf2(), n);
      for (std::size_t k = 0; k < n; ++k) {
        const Felt c = t.basis_product(i, j)[k];
        if (c.bits > 1) throw Error(ErrorKind::SearchSpaceTooLarge, "sandwich_subalgebra: constants outside GF(2) over " + f.name());
        v.set(k, c);
      }
      prime.set_product(i, j, v);
    }
  const Subspace over_prime = sandwich_subalgebra(prime);
  Subspace out(f, n);
  for (const Vector& v : over_prime.basis()) {
    Vector lifted(f, n);
    for (std::size_t k = 0; k < n; ++k) lifted.set(k, v[k]);
    if (!is_sandwich(t, lifted)) throw Error(ErrorKind::Validation, "sandwich_subalgebra: lifted element not a sandwich");
    out.insert(lifted);
  }
  if (bracket_span(t, out, out).dim() != 0) throw Error(ErrorKind::Validation, "sandwich_subalgebra: lifted span not abelian");
  return out;
}

struct WeakSandwichSet {
  Subspace span;         ///< span of all x with [[L,x],[L,x]] = 0
  bool is_subspace;      ///< the set itself is closed under addition
  bool implies_ad_cube;  ///< every such x also satisfies [[L,x],x] = 0
  std::string method;    ///< "exhaustive" or "symbolic"
};

namespace detail {

/// Quadratic forms in variables xi_0..xi_{n-1} with GF(2) coefficients; monomial
/// xi_i xi_j (i <= j) sits at index j(j+1)/2 + i.
using QuadForm = std::bitset<kSandwichScanMaxDim*(kSandwichScanMaxDim + 1) / 2>;

inline std::size_t monomial(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j + 1) / 2 + i;
}

/// Mechanical version of the pencil-and-paper argument: every coordinate of
/// [[e_a, x], [e_b, x]] is a quadratic form in the coordinates of x. A form
/// that reduces to a single square xi_i^2 forces xi_i = 0 over any perfect
/// field of characteristic 2; iterate to a fixpoint, then check that the
/// remaining forms vanish identically. Returns the surviving coordinates.
inline std::optional<std::vector<std::size_t>> weak_sandwich_symbolic(const bits::BitAlgebra& b, std::size_t l) {
  const std::size_t n = b.dim();
  if (n > kSandwichScanMaxDim) throw Error(ErrorKind::SearchSpaceTooLarge, "symbolic certificate limited to dim 24");
  std::vector<QuadForm> forms;
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t c = a + 1; c < l; ++c) {
      std::vector<QuadForm> coord(n);
      for (std::size_t i = 0; i < n; ++i) {
        const bits::Mask u = b.basis_bracket(a, i);
        if (!u) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const bits::Mask w = b.basis_bracket(c, j);
          if (!w) continue;
          bits::Mask r = b.bracket(u, w);
          while (r) {
            const auto k = static_cast<std::size_t>(std::countr_zero(r));
            r &= r - 1;
            coord[k].flip(monomial(i, j));
          }
        }
      }
      for (auto& q : coord)
        if (q.any()) forms.push_back(q);
    }
  std::vector<bool> zero(n, false);
  QuadForm dead;  // monomials involving a variable known to vanish
  bool changed = true;
  while (changed) {
    changed = false;
    for (const QuadForm& q : forms) {
      const QuadForm live = q & ~dead;
      if (live.count() != 1) continue;
      std::size_t m = 0;
      while (!live.test(m)) ++m;
      std::size_t j = 0;
      while ((j + 1) * (j + 2) / 2 <= m) ++j;
      const std::size_t i = m - j * (j + 1) / 2;
      if (i != j || zero[i]) continue;
      zero[i] = true;
      changed = true;
      for (std::size_t k = 0; k < n; ++k) dead.set(monomial(i, k));
    }
  }
  for (const QuadForm& q : forms)
    if ((q & ~dead).any()) return std::nullopt;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!zero[i]) free.push_back(i);
  return free;
}

}  // namespace detail

/// {x in big : [[L,x],[L,x]] = 0}, L = span of the first l basis vectors
/// (an ideal of `big`). Exhaustive over GF(2); for larger fields the symbolic
/// certificate is required to succeed.
inline WeakSandwichSet weak_sandwich_set(const AlgebraTable& big, std::size_t l) {
  const Field f = big.field();
  const std::size_t n = big.dim();
  if (f.is_prime()) {
    const bits::BitAlgebra b = to_bits(big);
    bits::BitBasis span;
    std::uint64_t members = 0;
    bool implies = true;
    detail::scan_ad(b, l, [&](bits::Mask x, const bits::BitMatrix& ad) {
      if (!detail::weak_sandwich_bits(b, ad)) return;
      ++members;
      span.insert(x);
      for (bits::Mask c : ad.cols)
        if (b.bracket(c, x) != 0) implies = false;
    });
    return {span.to_subspace(n), members == (std::uint64_t{1} << span.dim()), implies, "exhaustive"};
  }
  AlgebraTable prime(Field::gf2(), big.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(Field::gf2(), n);
      for (std::size_t k = 0; k < n; ++k) {
        const Felt c = big.basis_product(i, j)[k];
        if (c.bits > 1) throw Error(ErrorKind::SearchSpaceTooLarge, "weak_sandwich_set: constants outside GF(2) over " + f.name());
        v.set(k, c);
      }
      prime.set_product(i, j, v);
    }
  const auto free = detail::weak_sandwich_symbolic(to_bits(prime), l);
  if (!free) throw Error(ErrorKind::SearchSpaceTooLarge, "weak_sandwich_set: symbolic certificate inconclusive over " + f.name());
  const Subspace span = Subspace::coordinates(f, n, *free);
  // [[e,x],x] on the span vanishes iff it vanishes on each basis vector and its
  // polarization [[e,x],y] + [[e,y],x] vanishes on each pair
  bool implies = true;
  const auto& u = span.basis();
  for (std::size_t a = 0; a < l && implies; ++a) {
    const Vector e = big.basis(a);
    for (std::size_t i = 0; i < u.size() && implies; ++i) {
      if (!big.product(big.product(e, u[i]), u[i]).is_zero()) implies = false;
      for (std::size_t j = i + 1; j < u.size() && implies; ++j)
        if (!(big.product(big.product(e, u[i]), u[j]) + big.product(big.product(e, u[j]), u[i])).is_zero()) implies = false;
    }
  }
  return {span, true, implies, "symbolic"};
}

/// Derivations D with D^2 = 0 and [D(L), D(L)] = 0, as a subspace of the
/// flattened n x n matrices. Exhaustive over the GF(2) derivation algebra.
inline Subspace sandwich_derivations(const AlgebraTable& t, const Subspace& der) {
  const Field f = t.field();
  const std::size_t n = t.dim();
  if (!f.is_prime()) throw Error(ErrorKind::SearchSpaceTooLarge, "sandwich_derivations: exhaustive scan needs GF(2)");
  if (der.dim() > kSandwichScanMaxDim) throw Error(ErrorKind::SearchSpaceTooLarge, "sandwich_derivations: Der too large");
  const bits::BitAlgebra b = to_bits(t);
  std::vector<bits::BitMatrix> basis;
  for (const Vector& v : der.basis()) {
    const Matrix m = unflatten(v, n, n);
    bits::BitMatrix bm;
    for (std::size_t j = 0; j < n; ++j) bm.cols.push_back(bits::to_mask(m.column(j)));
    basis.push_back(std::move(bm));
  }
  std::vector<bits::Mask> gens(basis.size());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = bits::bit(i);
  bits::BitBasis found;  // in coordinates w.r.t. der's basis
  bits::BitMatrix d;
  d.cols.assign(n, 0);
  bits::Mask coords = 0;
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << basis.size()); ++g) {
    const auto i = static_cast<std::size_t>(std::countr_zero(g));
    coords ^= bits::bit(i);
    for (std::size_t j = 0; j < n; ++j) d.cols[j] ^= basis[i].cols[j];
    if (found.contains(coords)) continue;
    if (detail::square_zero_bits(d) && detail::weak_sandwich_bits(b, d)) found.insert(coords);
  }
  Subspace out(f, n * n);
  for (bits::Mask c : found.rows()) {
    Vector v(f, n * n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c >> i & 1u) v += der.basis()[i];
    out.insert(v);
  }
  return out;
}

inline Subspace sandwich_derivations(const AlgebraTable& t) { return sandwich_derivations(t, derivation_algebra(t)); }

}  // namespace skry
