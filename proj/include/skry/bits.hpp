#pragma once

// Bit-packed GF(2) kernels for dimensions up to 64: a vector is one machine
// word with bit i holding coordinate i.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "skry/linalg.hpp"

namespace skry::bits {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxDim = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

inline Mask to_mask(const Vector& v) {
  if (!v.field().is_prime()) throw Error(ErrorKind::FieldMismatch, "bit kernels require GF(2)");
  if (v.size() > kMaxDim) throw Error(ErrorKind::DimensionMismatch, "bit kernels support dim <= 64");
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) m |= bit(i);
  return m;
}

inline Vector to_vector(Mask m, std::size_t n) {
  Vector v(Field::gf2(), n);
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1u) v.set(i, Field::one());
  return v;
}

/// Echelon basis over GF(2), fully reduced, pivot = lowest set bit.
class BitBasis {
 public:
  Mask reduce(Mask v) const {
    Mask hits = v & pivots_;
    while (hits) {
      const int p = std::countr_zero(hits);
      hits &= hits - 1;
      v ^= rows_[static_cast<std::size_t>(p)];
    }
    return v;
  }

  bool contains(Mask v) const { return reduce(v) == 0; }

  bool insert(Mask v) {
    v = reduce(v);
    if (v == 0) return false;
    const int p = std::countr_zero(v);
    Mask others = pivots_;
    while (others) {
      const int q = std::countr_zero(others);
      others &= others - 1;
      if (rows_[static_cast<std::size_t>(q)] >> p & 1u) rows_[static_cast<std::size_t>(q)] ^= v;
    }
    rows_[static_cast<std::size_t>(p)] = v;
    pivots_ |= bit(static_cast<std::size_t>(p));
    ++dim_;
    return true;
  }

  int dim() const { return dim_; }
  Mask pivots() const { return pivots_; }

  /// Rows in increasing pivot order.
  std::vector<Mask> rows() const {
    std::vector<Mask> out;
    Mask ps = pivots_;
    while (ps) {
      const int p = std::countr_zero(ps);
      ps &= ps - 1;
      out.push_back(rows_[static_cast<std::size_t>(p)]);
    }
    return out;
  }

  Subspace to_subspace(std::size_t n) const {
    Subspace s(Field::gf2(), n);
    for (Mask r : rows()) s.insert(to_vector(r, n));
    return s;
  }

  static BitBasis from(const Subspace& s) {
    BitBasis b;
    for (const Vector& v : s.basis()) b.insert(to_mask(v));
    return b;
  }

  friend bool operator==(const BitBasis& a, const BitBasis& b) { return a.rows() == b.rows(); }

 private:
  std::array<Mask, kMaxDim> rows_{};
  Mask pivots_ = 0;
  int dim_ = 0;
};

inline int rank_of(std::span<const Mask> vs) {
  BitBasis b;
  for (Mask v : vs) b.insert(v);
  return b.dim();
}

/// Square matrix as columns; apply(x) = sum of columns selected by x.
struct BitMatrix {
  std::vector<Mask> cols;

  Mask apply(Mask x) const {
    Mask out = 0;
    while (x) {
      const int j = std::countr_zero(x);
      x &= x - 1;
      out ^= cols[static_cast<std::size_t>(j)];
    }
    return out;
  }

  /// (this * other) as columns.
  BitMatrix compose(const BitMatrix& other) const {
    BitMatrix out;
    out.cols.reserve(other.cols.size());
    for (Mask c : other.cols) out.cols.push_back(apply(c));
    return out;
  }

  int rank() const { return rank_of(cols); }
  bool is_zero() const {
    for (Mask c : cols)
      if (c) return false;
    return true;
  }
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

/// Structure constants (and optionally a 2-map) packed into words.
class BitAlgebra {
 public:
  BitAlgebra() = default;
  BitAlgebra(std::size_t n, std::vector<Mask> brackets, std::vector<Mask> squares = {})
      : n_(n), br_(std::move(brackets)), sq_(std::move(squares)) {}

  std::size_t dim() const { return n_; }
  bool restricted() const { return !sq_.empty(); }

  Mask basis_bracket(std::size_t i, std::size_t j) const { return br_[i * n_ + j]; }

  /// [e_i, y]
  Mask bracket_with_basis(std::size_t i, Mask y) const {
    Mask out = 0;
    const Mask* row = &br_[i * n_];
    while (y) {
      const int j = std::countr_zero(y);
      y &= y - 1;
      out ^= row[j];
    }
    return out;
  }

  Mask bracket(Mask x, Mask y) const {
    Mask out = 0;
    while (x) {
      const int i = std::countr_zero(x);
      x &= x - 1;
      out ^= bracket_with_basis(static_cast<std::size_t>(i), y);
    }
    return out;
  }

  /// (sum x_i e_i)^[2] = sum x_i e_i^[2] + sum_{i<j} x_i x_j [e_i, e_j]
  Mask square(Mask x) const {
    Mask out = 0;
    Mask rest = x;
    while (rest) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      out ^= sq_[static_cast<std::size_t>(i)];
      out ^= bracket_with_basis(static_cast<std::size_t>(i), rest);
    }
    return out;
  }

  /// ad(x): column j is [e_j, x]; only the first `rows` basis vectors are used as inputs.
  BitMatrix ad(Mask x, std::size_t domain) const {
    BitMatrix m;
    m.cols.resize(domain);
    for (std::size_t j = 0; j < domain; ++j) m.cols[j] = bracket_with_basis(j, x);
    return m;
  }
  BitMatrix ad(Mask x) const { return ad(x, n_); }

  std::span<const Mask> squares() const { return sq_; }

 private:
  std::size_t n_ = 0;
  std::vector<Mask> br_;
  std::vector<Mask> sq_;
};

/// Calls fn(x) for every x in the span of `basis` (2^dim elements, Gray-code order).
template <class Fn>
void for_each_in_span(std::span<const Mask> basis, Fn&& fn) {
  const std::size_t d = basis.size();
  Mask x = 0;
  fn(x);
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << d); ++g) {
    x ^= basis[static_cast<std::size_t>(std::countr_zero(g))];
    fn(x);
  }
}

}  // namespace skry::bits
