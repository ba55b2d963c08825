#pragma once

// Anticommutative algebras given by structure constants over GF(2^k):
// validation, substructures, derivations, centroid, simplicity and the
// restricted (2-map) structure including 2-envelopes.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skry/bits.hpp"
#include "skry/error.hpp"
#include "skry/field.hpp"
#include "skry/linalg.hpp"

namespace skry {

using LinearMap = Matrix;

/// Alternating bilinear product on a labeled basis. Only i != j products can
/// be set, and [x_j, x_i] is stored together with [x_i, x_j] (-1 = 1), so
/// [x, x] = 0 holds by construction.
class AlgebraTable {
 public:
  AlgebraTable() = default;

  AlgebraTable(Field f, std::vector<std::string> labels, std::string name = {})
      : field_(f), name_(std::move(name)), labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    sc_.assign(n * n, Vector(f, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j]) throw Error(ErrorKind::InvalidArgument, "duplicate label " + labels_[i]);
  }

  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw Error(ErrorKind::InvalidArgument, "unknown basis label '" + std::string(label) + "'");
  }

  Vector zero() const { return Vector(field_, dim()); }
  Vector basis(std::size_t i) const { return Vector::unit(field_, dim(), i); }
  Vector basis(std::string_view label) const { return basis(index(label)); }

  /// Sum of the named basis elements.
  Vector sum(std::initializer_list<std::string_view> names) const {
    Vector v = zero();
    for (auto nm : names) v += basis(nm);
    return v;
  }

  Vector combination(std::initializer_list<std::pair<std::string_view, Felt>> terms) const {
    Vector v = zero();
    for (const auto& [nm, c] : terms) v.axpy(c, basis(nm));
    return v;
  }

  void set_product(std::size_t i, std::size_t j, const Vector& v) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "[x,x] is fixed to zero");
    if (i >= dim() || j >= dim()) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
    zero().check_compatible(v);
    sc_[i * dim() + j] = v;
    sc_[j * dim() + i] = v;
  }

  void set_product(std::string_view a, std::string_view b, const Vector& v) { set_product(index(a), index(b), v); }

  const Vector& basis_product(std::size_t i, std::size_t j) const { return sc_[i * dim() + j]; }

  Vector product(const Vector& x, const Vector& y) const {
    const Vector z = zero();
    z.check_compatible(x);
    z.check_compatible(y);
    Vector out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero() || i == j) continue;
        out.axpy(field_.mul_unchecked(x[i], y[j]), sc_[i * dim() + j]);
      }
    }
    return out;
  }

  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.sc_ == b.sc_;
  }

 private:
  Field field_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Vector> sc_;  // n*n, symmetric storage
};

inline Vector product(const AlgebraTable& t, const Vector& x, const Vector& y) { return t.product(x, y); }

/// AlgebraTable plus the images x_i^[2] of the basis.
struct RestrictedAlgebra {
  AlgebraTable base;
  std::vector<Vector> squares;

  std::size_t dim() const { return base.dim(); }
  Field field() const { return base.field(); }

  friend bool operator==(const RestrictedAlgebra&, const RestrictedAlgebra&) = default;
};

/// (sum a_i x_i)^[2] = sum a_i^2 x_i^[2] + sum_{i<j} a_i a_j [x_i, x_j]
inline Vector square(const RestrictedAlgebra& r, const Vector& x) {
  const AlgebraTable& t = r.base;
  const Field f = t.field();
  t.zero().check_compatible(x);
  Vector out = t.zero();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (x[i].is_zero()) continue;
    out.axpy(f.mul_unchecked(x[i], x[i]), r.squares[i]);
    for (std::size_t j = i + 1; j < t.dim(); ++j)
      if (!x[j].is_zero()) out.axpy(f.mul_unchecked(x[i], x[j]), t.basis_product(i, j));
  }
  return out;
}

inline bits::BitAlgebra to_bits(const AlgebraTable& t) {
  if (!t.field().is_prime()) throw Error(ErrorKind::FieldMismatch, "bit kernels require GF(2)");
  const std::size_t n = t.dim();
  std::vector<bits::Mask> br(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) br[i * n + j] = i == j ? 0 : bits::to_mask(t.basis_product(i, j));
  return bits::BitAlgebra(n, std::move(br));
}

inline bits::BitAlgebra to_bits(const RestrictedAlgebra& r) {
  const bits::BitAlgebra b = to_bits(r.base);
  const std::size_t n = r.dim();
  std::vector<bits::Mask> br(n * n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sq[i] = bits::to_mask(r.squares[i]);
    for (std::size_t j = 0; j < n; ++j) br[i * n + j] = b.basis_bracket(i, j);
  }
  return bits::BitAlgebra(n, std::move(br), std::move(sq));
}

/// Matrix of y -> [y, x]; column j is [x_j, x].
inline Matrix ad_matrix(const AlgebraTable& t, const Vector& x) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  t.zero().check_compatible(x);
  Matrix m(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col(f, n);
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero() && i != j) col.axpy(x[i], t.basis_product(j, i));
    m.set_column(j, col);
  }
  return m;
}

struct ValidationReport {
  std::vector<std::array<std::size_t, 3>> jacobi_violations;  ///< basis triples i<j<k
  std::vector<std::size_t> restrictedness_violations;         ///< basis i with ad(x_i^[2]) != ad(x_i)^2
  std::vector<std::string> messages;

  bool ok() const { return jacobi_violations.empty() && restrictedness_violations.empty() && messages.empty(); }
};

/// Checks the Jacobi identity on all basis triples. Alternation holds structurally.
inline ValidationReport validate(const AlgebraTable& t) {
  ValidationReport rep;
  const std::size_t n = t.dim();
  const Field f = t.field();
  // [[x_i,x_j],x_k] = sum_m sc(i,j)_m sc(m,k)
  auto bracket_basis = [&](std::size_t i, std::size_t j, std::size_t k, Vector& acc) {
    const Vector& ij = t.basis_product(i, j);
    for (std::size_t m = 0; m < n; ++m)
      if (!ij[m].is_zero() && m != k) acc.axpy(ij[m], t.basis_product(m, k));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector acc(f, n);
        bracket_basis(i, j, k, acc);
        bracket_basis(j, k, i, acc);
        bracket_basis(k, i, j, acc);
        if (!acc.is_zero()) {
          rep.jacobi_violations.push_back({i, j, k});
          if (rep.messages.size() < 8)
            rep.messages.push_back("Jacobi fails on (" + t.labels()[i] + ", " + t.labels()[j] + ", " +
                                   t.labels()[k] + ")");
        }
      }
  return rep;
}

/// Jacobi plus ad(x_i^[2]) = ad(x_i)^2 on every basis element.
inline ValidationReport validate(const RestrictedAlgebra& r) {
  ValidationReport rep = validate(r.base);
  if (r.squares.size() != r.dim()) {
    rep.messages.push_back("square list has wrong length");
    return rep;
  }
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Matrix a = ad_matrix(r.base, r.base.basis(i));
    if (!(ad_matrix(r.base, r.squares[i]) == a * a)) {
      rep.restrictedness_violations.push_back(i);
      rep.messages.push_back("ad(" + r.base.labels()[i] + "^[2]) != ad(" + r.base.labels()[i] + ")^2");
    }
  }
  return rep;
}

/// {x : [x, s] = 0 for all s in s}
inline Subspace centralizer(const AlgebraTable& t, const Subspace& s) {
  const std::size_t n = t.dim();
  if (s.dim() == 0) return Subspace::whole(t.field(), n);
  Matrix stacked(t.field(), n * s.dim(), n);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Matrix a = ad_matrix(t, s.basis()[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = a(i, j);
  }
  return kernel(stacked);
}

inline Subspace centralizer(const AlgebraTable& t, const Vector& x) {
  return centralizer(t, Subspace::span(t.field(), t.dim(), std::span<const Vector>(&x, 1)));
}

inline Subspace center(const AlgebraTable& t) { return centralizer(t, Subspace::whole(t.field(), t.dim())); }

/// Linear functionals vanishing on s, as vectors q with q . v = 0.
inline Subspace annihilator(const Subspace& s) {
  const std::size_t n = s.ambient();
  if (s.dim() == 0) return Subspace::whole(s.field(), n);
  return kernel(Matrix::from_rows(s.field(), n, s.basis()));
}

/// {x : [x, s] subset of s}
inline Subspace normalizer(const AlgebraTable& t, const Subspace& s) {
  const std::size_t n = t.dim();
  const Subspace ann = annihilator(s);
  if (ann.dim() == 0 || s.dim() == 0) return Subspace::whole(t.field(), n);
  const Matrix q = Matrix::from_rows(t.field(), n, ann.basis());
  Matrix stacked(t.field(), ann.dim() * s.dim(), n);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Matrix qa = q * ad_matrix(t, s.basis()[k]);
    for (std::size_t i = 0; i < qa.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(k * ann.dim() + i, j) = qa(i, j);
  }
  return kernel(stacked);
}

/// [U, V] = span{[u, v]}
inline Subspace bracket_span(const AlgebraTable& t, const Subspace& u, const Subspace& v) {
  Subspace out(t.field(), t.dim());
  for (const Vector& a : u.basis())
    for (const Vector& b : v.basis()) out.insert(t.product(a, b));
  return out;
}

inline Subspace derived_algebra(const AlgebraTable& t) {
  Subspace out(t.field(), t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) out.insert(t.basis_product(i, j));
  return out;
}

inline bool is_subalgebra(const AlgebraTable& t, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(t.product(s.basis()[a], s.basis()[b]))) return false;
  return true;
}

/// Smallest ideal containing seed.
inline Subspace ideal_closure(const AlgebraTable& t, const Subspace& seed) {
  Subspace ideal(t.field(), t.dim());
  std::deque<Vector> queue;
  for (const Vector& v : seed.basis())
    if (ideal.insert(v)) queue.push_back(v);
  while (!queue.empty() && ideal.dim() < t.dim()) {
    const Vector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < t.dim(); ++i) {
      Vector w = t.product(v, t.basis(i));
      if (ideal.insert(w)) queue.push_back(std::move(w));
    }
  }
  return ideal;
}

namespace detail {

inline bits::BitBasis ideal_closure_bits(const bits::BitAlgebra& b, bits::Mask seed) {
  bits::BitBasis ideal;
  bits::Mask queue[bits::kMaxDim];
  std::size_t head = 0, tail = 0;
  if (ideal.insert(seed)) queue[tail++] = seed;
  const int n = static_cast<int>(b.dim());
  while (head < tail && ideal.dim() < n) {
    const bits::Mask v = queue[head++];
    for (std::size_t i = 0; i < b.dim(); ++i) {
      const bits::Mask w = b.bracket_with_basis(i, v);
      if (ideal.insert(w)) queue[tail++] = w;
    }
  }
  return ideal;
}

}  // namespace detail

inline constexpr std::uint64_t kSimplicityScanLimit = std::uint64_t{1} << 20;

/// [L,L] = L and every nonzero element generates L as an ideal. Exhaustive
/// over all nonzero vectors up to scalars; refuses when q^n > 2^20.
inline bool is_simple(const AlgebraTable& t) {
  const std::size_t n = t.dim();
  if (n == 0) return false;
  if (derived_algebra(t).dim() != n) return false;
  const Field f = t.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= f.order();
    if (total > kSimplicityScanLimit)
      throw Error(ErrorKind::SearchSpaceTooLarge, "is_simple: q^n exceeds 2^20 for " + t.name());
  }
  if (f.is_prime() && n <= bits::kMaxDim) {
    const bits::BitAlgebra b = to_bits(t);
    for (bits::Mask x = 1; x < (bits::Mask{1} << n); ++x)
      if (detail::ideal_closure_bits(b, x).dim() != static_cast<int>(n)) return false;
    return true;
  }
  bool simple = true;
  for_each_element(
      Subspace::whole(f, n),
      [&](const Vector& x) {
        if (!simple) return;
        const std::size_t lead = x.leading();
        if (lead == n || x[lead] != Field::one()) return;
        if (ideal_closure(t, Subspace::span(f, n, std::span<const Vector>(&x, 1))).dim() != n) simple = false;
      },
      kSimplicityScanLimit);
  return simple;
}

/// Maps n x n stored row-major as vectors of length n^2.
inline std::vector<Matrix> as_matrices(const Subspace& maps, std::size_t n) {
  std::vector<Matrix> out;
  for (const Vector& v : maps.basis()) out.push_back(unflatten(v, n, n));
  return out;
}

/// Maps chi with chi([x, y]) = [chi(x), y] for all basis x, y.
inline Subspace centroid(const AlgebraTable& t) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  Matrix sys(f, n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row0 = (i * n + j) * n;
      if (i != j) {
        const Vector& ij = t.basis_product(i, j);
        for (std::size_t m = 0; m < n; ++m)
          if (!ij[m].is_zero())
            for (std::size_t k = 0; k < n; ++k) sys(row0 + k, k * n + m).bits ^= ij[m].bits;
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (a == j) continue;
        const Vector& aj = t.basis_product(a, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!aj[k].is_zero()) sys(row0 + k, a * n + i).bits ^= aj[k].bits;
      }
    }
  return kernel(sys);
}

/// Derivations D[x,y] = [Dx,y] + [x,Dy], flattened row-major.
inline Subspace derivation_algebra(const AlgebraTable& t) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  const std::size_t pairs = n * (n - 1) / 2;
  Matrix sys(f, std::max<std::size_t>(pairs * n, 1), n * n);
  std::size_t row0 = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, row0 += n) {
      const Vector& ij = t.basis_product(i, j);
      for (std::size_t m = 0; m < n; ++m)
        if (!ij[m].is_zero())
          for (std::size_t k = 0; k < n; ++k) sys(row0 + k, k * n + m).bits ^= ij[m].bits;
      for (std::size_t a = 0; a < n; ++a) {
        if (a != j) {
          const Vector& aj = t.basis_product(a, j);
          for (std::size_t k = 0; k < n; ++k)
            if (!aj[k].is_zero()) sys(row0 + k, a * n + i).bits ^= aj[k].bits;
        }
        if (a != i) {
          const Vector& ia = t.basis_product(i, a);
          for (std::size_t k = 0; k < n; ++k)
            if (!ia[k].is_zero()) sys(row0 + k, a * n + j).bits ^= ia[k].bits;
        }
      }
    }
  return kernel(sys);
}

inline bool is_derivation(const AlgebraTable& t, const Matrix& d) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const Vector lhs = d * t.basis_product(i, j);
      const Vector rhs = t.product(d.column(i), t.basis(j)) + t.product(t.basis(i), d.column(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

/// A restricted algebra realised inside Der(L) as the closure of ad(L).
struct Envelope {
  RestrictedAlgebra algebra;        ///< basis: the n basis elements of L first, then new directions
  std::vector<Matrix> derivations;  ///< derivation of L represented by each envelope basis element
  Subspace span;                    ///< span of `derivations`, flattened

  std::size_t base_dim() const { return derivations.empty() ? 0 : derivations.front().rows(); }
};

/// Smallest subspace of Der(L) containing ad(L) and closed under squaring
/// and commutators. New directions are labelled by the element whose square
/// (`x^[2]`) or commutator (`[x,y]`) produced them.
inline Envelope two_envelope(const AlgebraTable& t) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  if (center(t).dim() != 0) throw Error(ErrorKind::NonzeroCenter, "two_envelope requires a centerless algebra");
  std::vector<Matrix> mats;
  std::vector<std::string> labels = t.labels();
  Subspace span(f, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    mats.push_back(ad_matrix(t, t.basis(i)));
    span.insert(flatten(mats.back()));
  }
  auto offer = [&](Matrix m, std::string label) {
    if (span.insert(flatten(m))) {
      mats.push_back(std::move(m));
      labels.push_back(std::move(label));
    }
  };
  for (std::size_t i = 0; i < n; ++i) offer(mats[i] * mats[i], t.labels()[i] + "^[2]");
  for (std::size_t p = 0; p < mats.size(); ++p) {
    if (p >= n) offer(mats[p] * mats[p], "(" + labels[p] + ")^[2]");
    for (std::size_t q = 0; q < p; ++q) offer(mats[p] * mats[q] + mats[q] * mats[p], "[" + labels[q] + "," + labels[p] + "]");
  }
  std::vector<Vector> flat;
  for (const Matrix& m : mats) flat.push_back(flatten(m));
  const CoordinateSystem cs(f, n * n, flat);
  const std::size_t d = mats.size();
  AlgebraTable env(f, labels, t.name().empty() ? std::string() : t.name() + "_2");
  std::vector<Vector> squares;
  for (std::size_t p = 0; p < d; ++p) {
    squares.push_back(*cs.coords(flatten(mats[p] * mats[p])));
    for (std::size_t q = p + 1; q < d; ++q) env.set_product(p, q, *cs.coords(flatten(mats[p] * mats[q] + mats[q] * mats[p])));
  }
  return Envelope{RestrictedAlgebra{std::move(env), std::move(squares)}, std::move(mats), std::move(span)};
}

/// Smallest subspace containing the subalgebra s and closed under bracket and 2-map.
inline Subspace restricted_closure(const RestrictedAlgebra& r, const Subspace& s) {
  if (!is_subalgebra(r.base, s)) throw Error(ErrorKind::NotClosed, "restricted_closure: not a subalgebra");
  Subspace out = s;
  std::vector<Vector> elems = s.basis();
  for (std::size_t p = 0; p < elems.size(); ++p) {
    Vector sq = square(r, elems[p]);
    if (out.insert(sq)) elems.push_back(std::move(sq));
    for (std::size_t q = 0; q < p; ++q) {
      Vector pr = r.base.product(elems[p], elems[q]);
      if (out.insert(pr)) elems.push_back(std::move(pr));
    }
  }
  return out;
}

/// Structure constants of the subalgebra s in the given basis (default: RREF basis).
inline AlgebraTable subalgebra_table(const AlgebraTable& t, const Subspace& s, std::vector<Vector> basis = {},
                                     std::vector<std::string> labels = {}) {
  if (basis.empty()) basis = s.basis();
  if (basis.size() != s.dim()) throw Error(ErrorKind::InvalidArgument, "subalgebra_table: basis size");
  if (labels.empty())
    for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("v" + std::to_string(i + 1));
  const CoordinateSystem cs(t.field(), t.dim(), basis);
  AlgebraTable sub(t.field(), labels);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto c = cs.coords(t.product(basis[i], basis[j]));
      if (!c) throw Error(ErrorKind::NotClosed, "subalgebra_table: product leaves the subspace");
      sub.set_product(i, j, *c);
    }
  return sub;
}

/// Restricted subalgebra table: s must be closed under bracket and 2-map.
inline RestrictedAlgebra restricted_subalgebra(const RestrictedAlgebra& r, const Subspace& s, std::vector<Vector> basis = {},
                                               std::vector<std::string> labels = {}) {
  if (basis.empty()) basis = s.basis();
  AlgebraTable sub = subalgebra_table(r.base, s, basis, std::move(labels));
  const CoordinateSystem cs(r.field(), r.dim(), basis);
  std::vector<Vector> squares;
  for (const Vector& b : basis) {
    auto c = cs.coords(square(r, b));
    if (!c) throw Error(ErrorKind::NotClosed, "restricted_subalgebra: square leaves the subspace");
    squares.push_back(*c);
  }
  return RestrictedAlgebra{std::move(sub), std::move(squares)};
}

/// Direct product A x A' (used for centroid sanity checks).
inline AlgebraTable direct_product(const AlgebraTable& a, const AlgebraTable& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "direct_product");
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "_1");
  for (const auto& l : b.labels()) labels.push_back(l + "_2");
  AlgebraTable out(a.field(), labels);
  const std::size_t n = a.dim(), m = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = out.zero();
      for (std::size_t k = 0; k < n; ++k) v.set(k, a.basis_product(i, j)[k]);
      out.set_product(i, j, v);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v = out.zero();
      for (std::size_t k = 0; k < m; ++k) v.set(n + k, b.basis_product(i, j)[k]);
      out.set_product(n + i, n + j, v);
    }
  return out;
}

/// Abelian algebra on n basis vectors.
inline AlgebraTable abelian_algebra(Field f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return AlgebraTable(f, labels, "abelian" + std::to_string(n));
}

/// True when m is bijective and m[x_i, x_j]_source = [m x_i, m x_j]_target.
inline bool is_isomorphism(const AlgebraTable& source, const AlgebraTable& target, const LinearMap& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim() || source.dim() != target.dim()) return false;
  if (rank(m) != source.dim()) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(m.column(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j)
      if (!(m * source.basis_product(i, j) == target.product(images[i], images[j]))) return false;
  return true;
}

}  // namespace skry
