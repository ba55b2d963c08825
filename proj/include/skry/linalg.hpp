#pragma once

// Dense exact linear algebra over GF(2^k). Matrices act on column vectors.
// GF(2) elimination runs on bit-packed rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skry/error.hpp"
#include "skry/field.hpp"

namespace skry {

class Vector {
 public:
  Vector() = default;
  Vector(Field f, std::size_t n) : field_(f), coords_(n) {}
  Vector(Field f, std::vector<Felt> coords) : field_(f), coords_(std::move(coords)) {
    for (Felt c : coords_)
      if (!field_.contains(c)) throw Error(ErrorKind::FieldMismatch, "coordinate outside " + field_.name());
  }

  static Vector unit(Field f, std::size_t n, std::size_t i) {
    Vector v(f, n);
    v.coords_.at(i) = Field::one();
    return v;
  }

  Field field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  std::span<const Felt> coords() const { return coords_; }

  Felt operator[](std::size_t i) const { return coords_[i]; }
  void set(std::size_t i, Felt c) {
    if (!field_.contains(c)) throw Error(ErrorKind::FieldMismatch, "coordinate outside " + field_.name());
    coords_.at(i) = c;
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Felt c) { return c.is_zero(); });
  }

  /// Index of the first nonzero coordinate, or size() when zero.
  std::size_t leading() const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!coords_[i].is_zero()) return i;
    return coords_.size();
  }

  /// this += c * v
  Vector& axpy(Felt c, const Vector& v) {
    check_compatible(v);
    if (c.is_zero()) return *this;
    if (c == Field::one()) {
      for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i].bits ^= v.coords_[i].bits;
    } else {
      for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!v.coords_[i].is_zero()) coords_[i].bits ^= field_.mul_unchecked(c, v.coords_[i]).bits;
    }
    return *this;
  }

  Vector& operator+=(const Vector& v) { return axpy(Field::one(), v); }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }

  Vector scaled(Felt c) const {
    Vector out(field_, size());
    return out.axpy(c, *this);
  }

  Felt dot(const Vector& v) const {
    check_compatible(v);
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i)
      acc ^= field_.mul_unchecked(coords_[i], v.coords_[i]).bits;
    return Felt(acc);
  }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }

  void check_compatible(const Vector& v) const {
    if (!(v.field_ == field_)) throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + v.field_.name());
    if (v.size() != size())
      throw Error(ErrorKind::DimensionMismatch,
                  "vector lengths " + std::to_string(size()) + " and " + std::to_string(v.size()));
  }

 private:
  Field field_;
  std::vector<Felt> coords_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field::one();
    return m;
  }

  static Matrix from_columns(Field f, std::size_t rows, std::span<const Vector> cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  static Matrix from_rows(Field f, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Felt operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Felt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(field_, std::vector<Felt>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }

  Vector column(std::size_t j) const {
    Vector v(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.set(i, (*this)(i, j));
    return v;
  }

  void set_column(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "column length");
    if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "column field");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Felt c) { return c.is_zero(); });
  }

  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "matrix-vector product");
    std::vector<Felt> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint32_t acc = 0;
      const Felt* r = &data_[i * cols_];
      for (std::size_t j = 0; j < cols_; ++j)
        if (!r[j].is_zero() && !v[j].is_zero()) acc ^= field_.mul_unchecked(r[j], v[j]).bits;
      out[i] = Felt(acc);
    }
    return Vector(field_, std::move(out));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "matrix product");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Felt aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Felt bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j).bits ^= a.field_.mul_unchecked(aik, bkj).bits;
        }
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "matrix sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i].bits ^= b.data_[i].bits;
    return a;
  }

  Matrix scaled(Felt c) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.mul(c, data_[i]);
    return m;
  }

  std::span<const Felt> data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Felt> data_;
};

/// Row-major flattening of an r x c matrix into a vector of length r*c.
inline Vector flatten(const Matrix& m) {
  return Vector(m.field(), std::vector<Felt>(m.data().begin(), m.data().end()));
}

inline Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "unflatten");
  Matrix m(v.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

inline RrefResult rref_gf2(const Matrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> rows(m.rows() * words, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t sel = r;
    while (sel < m.rows() && !(rows[sel * words + w] & bit)) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      std::swap_ranges(rows.begin() + static_cast<std::ptrdiff_t>(sel * words),
                       rows.begin() + static_cast<std::ptrdiff_t>((sel + 1) * words),
                       rows.begin() + static_cast<std::ptrdiff_t>(r * words));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || !(rows[i * words + w] & bit)) continue;
      for (std::size_t k = w; k < words; ++k) rows[i * words + k] ^= rows[r * words + k];
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  out.reduced = Matrix(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (rows[i * words + j / 64] >> (j % 64) & 1u) out.reduced(i, j) = Field::one();
  return out;
}

inline RrefResult rref_generic(Matrix a) {
  const Field f = a.field();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    const Felt inv = f.inv(a(r, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(r, j) = f.mul_unchecked(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Felt c = a(i, col);
      if (c.is_zero()) continue;
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j).bits ^= f.mul_unchecked(c, a(r, j)).bits;
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(a);
  return out;
}

}  // namespace detail

/// Reduced row echelon form: leftmost pivot, topmost row elimination.
inline RrefResult rref(const Matrix& m) {
  return m.field().is_prime() ? detail::rref_gf2(m) : detail::rref_generic(m);
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Subspace of K^n held in canonical RREF. Equal spans have identical
/// representations, so operator== is span equality.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t n) : field_(f), n_(n) {}

  static Subspace zero(Field f, std::size_t n) { return Subspace(f, n); }

  static Subspace whole(Field f, std::size_t n) {
    Subspace s(f, n);
    for (std::size_t i = 0; i < n; ++i) s.insert(Vector::unit(f, n, i));
    return s;
  }

  static Subspace span(Field f, std::size_t n, std::span<const Vector> vs) {
    Subspace s(f, n);
    for (const Vector& v : vs) s.insert(v);
    return s;
  }

  /// Span of coordinate axes.
  static Subspace coordinates(Field f, std::size_t n, std::span<const std::size_t> axes) {
    Subspace s(f, n);
    for (std::size_t i : axes) s.insert(Vector::unit(f, n, i));
    return s;
  }

  Field field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after eliminating every pivot coordinate; zero iff v is in the span.
  Vector reduce(Vector v) const {
    check(v);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Felt c = v[pivots_[k]];
      if (!c.is_zero()) v.axpy(c, basis_[k]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
  }

  /// Coordinates of v relative to basis(), when v lies in the span.
  std::optional<Vector> coordinates_of(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c(field_, dim());
    for (std::size_t k = 0; k < dim(); ++k) c.set(k, v[pivots_[k]]);
    return c;
  }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    const std::size_t p = r.leading();
    if (p == r.size()) return false;
    r = r.scaled(field_.inv(r[p]));
    for (Vector& b : basis_)
      if (!b[p].is_zero()) b.axpy(b[p], r);
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    return true;
  }

  void insert(const Subspace& other) {
    for (const Vector& v : other.basis_) insert(v);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

  void check(const Vector& v) const {
    if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "vector vs subspace field");
    if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector vs subspace ambient");
  }

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace subspace_canonical(Field f, std::size_t n, std::span<const Vector> vs) {
  return Subspace::span(f, n, vs);
}

/// Null space {x : m x = 0}.
inline Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const Field f = m.field();
  Subspace ker(f, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(f, m.cols());
    x.set(free, Field::one());
    for (std::size_t k = 0; k < r.rank; ++k) x.set(r.pivots[k], r.reduced(k, free));  // -c == c
    ker.insert(x);
  }
  return ker;
}

/// Column span.
inline Subspace image(const Matrix& m) {
  Subspace s(m.field(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) s.insert(m.column(j));
  return s;
}

struct SolveResult {
  std::optional<Vector> particular;  ///< empty when a x = b is inconsistent
  Subspace kernel;
};

inline SolveResult solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  if (!(b.field() == a.field())) throw Error(ErrorKind::FieldMismatch, "solve");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  SolveResult out{std::nullopt, kernel(a)};
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return out;
  Vector x(a.field(), a.cols());
  for (std::size_t k = 0; k < r.rank; ++k) x.set(r.pivots[k], r.reduced(k, a.cols()));
  out.particular = std::move(x);
  return out;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Field::one();
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

struct MeetJoin {
  Subspace intersection;
  Subspace sum;
};

inline MeetJoin meet_join(const Subspace& u, const Subspace& v) {
  if (!(u.field() == v.field())) throw Error(ErrorKind::FieldMismatch, "meet_join");
  if (u.ambient() != v.ambient()) throw Error(ErrorKind::DimensionMismatch, "meet_join ambient");
  const Field f = u.field();
  const std::size_t n = u.ambient();
  Subspace sum = u;
  sum.insert(v);
  if (u.dim() == 0 || v.dim() == 0) return {Subspace(f, n), std::move(sum)};
  // Kernel of [U^T | V^T]: a.u = b.v gives the intersection element a.u.
  Matrix stacked(f, n, u.dim() + v.dim());
  for (std::size_t k = 0; k < u.dim(); ++k)
    for (std::size_t i = 0; i < n; ++i) stacked(i, k) = u.basis()[k][i];
  for (std::size_t k = 0; k < v.dim(); ++k)
    for (std::size_t i = 0; i < n; ++i) stacked(i, u.dim() + k) = v.basis()[k][i];
  Subspace meet(f, n);
  const Subspace ker = kernel(stacked);
  for (const Vector& coeffs : ker.basis()) {
    Vector x(f, n);
    for (std::size_t k = 0; k < u.dim(); ++k) x.axpy(coeffs[k], u.basis()[k]);
    meet.insert(x);
  }
  return {std::move(meet), std::move(sum)};
}

inline Subspace intersect(const Subspace& u, const Subspace& v) { return meet_join(u, v).intersection; }

inline Subspace operator+(Subspace u, const Subspace& v) {
  u.insert(v);
  return u;
}

/// Image of a subspace under a linear map.
inline Subspace map_subspace(const Matrix& m, const Subspace& s) {
  Subspace out(m.field(), m.rows());
  for (const Vector& b : s.basis()) out.insert(m * b);
  return out;
}

/// Coordinates with respect to an arbitrary ordered basis (not necessarily RREF).
class CoordinateSystem {
 public:
  CoordinateSystem(Field f, std::size_t n, std::vector<Vector> basis) : field_(f), n_(n), basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      auto [residual, combo] = reduce_tracked(basis_[i]);
      const std::size_t p = residual.leading();
      if (p == n_) throw Error(ErrorKind::InvalidArgument, "CoordinateSystem: basis vectors are dependent");
      combo.set(i, field_.add(combo[i], Field::one()));  // residual = b_i - sum(...)
      const Felt inv = field_.inv(residual[p]);
      rows_.push_back(residual.scaled(inv));
      combos_.push_back(combo.scaled(inv));
      pivots_.push_back(p);
    }
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  std::optional<Vector> coords(const Vector& v) const {
    auto [residual, combo] = reduce_tracked(v);
    if (!residual.is_zero()) return std::nullopt;
    return combo;
  }

  Vector element(const Vector& coords) const {
    Vector out(field_, n_);
    for (std::size_t i = 0; i < basis_.size(); ++i) out.axpy(coords[i], basis_[i]);
    return out;
  }

 private:
  // v = residual + sum combo_i * basis_i
  std::pair<Vector, Vector> reduce_tracked(Vector v) const {
    Vector combo(field_, basis_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Felt c = v[pivots_[k]];
      if (c.is_zero()) continue;
      v.axpy(c, rows_[k]);
      combo.axpy(c, combos_[k]);
    }
    return {std::move(v), std::move(combo)};
  }

  Field field_;
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<Vector> rows_;    // echelon rows
  std::vector<Vector> combos_;  // rows_[k] = sum combos_[k][i] basis_[i]
  std::vector<std::size_t> pivots_;
};

/// Calls fn on every element of s (q^dim of them); throws when q^dim > limit.
inline void for_each_element(const Subspace& s, const std::function<void(const Vector&)>& fn,
                             std::uint64_t limit = std::uint64_t{1} << 22) {
  const Field f = s.field();
  const std::size_t d = s.dim();
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= q;
    if (total > limit) throw Error(ErrorKind::SearchSpaceTooLarge, "subspace has more than " + std::to_string(limit) + " elements");
  }
  std::vector<std::uint32_t> digits(d, 0);
  Vector x(f, s.ambient());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(x);
    // odometer increment, updating x incrementally
    for (std::size_t i = 0; i < d; ++i) {
      const Felt old(digits[i]);
      digits[i] = (digits[i] + 1) % static_cast<std::uint32_t>(q);
      x.axpy(Felt(old.bits ^ digits[i]), s.basis()[i]);
      if (digits[i] != 0) break;
    }
  }
}

inline std::string to_hex(Felt c) {
  static constexpr char digits[] = "0123456789abcdef";
  std::uint32_t v = c.bits;
  std::string s;
  do {
    s.insert(s.begin(), digits[v & 0xF]);
    v >>= 4;
  } while (v != 0);
  return s;
}

/// Dense hex coordinates separated by spaces.
inline std::string to_hex(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_hex(v[i]);
  }
  return s;
}

}  // namespace skry
