#pragma once

// Group gradings by basis elements: validity, Z/nZ reductions, the Z-grading
// read off the diagonal automorphisms, and the universal abelian grading group
// via integer Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skry/autos.hpp"
#include "skry/liealg.hpp"

namespace skry {

using BigInt = boost::multiprecision::cpp_int;

/// Z^free x Z/t_1 x ... x Z/t_r; an element is (free coords, torsion coords).
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<long long> torsion;

  std::size_t size() const { return free_rank + torsion.size(); }

  std::vector<long long> normalize(std::vector<long long> g) const {
    if (g.size() != size()) throw Error(ErrorKind::DimensionMismatch, "group element has wrong length");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      long long& c = g[free_rank + i];
      c %= torsion[i];
      if (c < 0) c += torsion[i];
    }
    return g;
  }

  std::vector<long long> add(const std::vector<long long>& a, const std::vector<long long>& b) const {
    std::vector<long long> s(size());
    for (std::size_t i = 0; i < size(); ++i) s[i] = a[i] + b[i];
    return normalize(s);
  }

  std::string describe() const {
    std::string s;
    for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
    for (long long t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Each basis vector of the algebra is homogeneous of the given degree.
struct Grading {
  AbelianGroup group;
  std::vector<std::vector<long long>> degrees;  ///< indexed like the basis

  /// Homogeneous components: degree -> basis indices.
  std::map<std::vector<long long>, std::vector<std::size_t>> components() const {
    std::map<std::vector<long long>, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < degrees.size(); ++i) out[group.normalize(degrees[i])].push_back(i);
    return out;
  }
};

struct GradingCheck {
  bool ok = true;
  std::string violation;
};

/// [L_g, L_h] in L_{g+h} for all basis pairs.
inline GradingCheck check_grading(const AlgebraTable& t, const Grading& g) {
  if (g.degrees.size() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "check_grading: one degree per basis vector");
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const Vector& p = t.basis_product(i, j);
      const auto target = g.group.add(g.degrees[i], g.degrees[j]);
      for (std::size_t k = 0; k < t.dim(); ++k)
        if (!p[k].is_zero() && g.group.normalize(g.degrees[k]) != target)
          return {false, "[" + t.labels()[i] + "," + t.labels()[j] + "] has a component along " + t.labels()[k]};
    }
  return {};
}

/// Z-grading of L(0,0) with deg(b_i) = exponent of lambda in the diagonal family.
inline Grading grading_from_diagonal() {
  const AlgebraTable t = skryabin_table();
  Grading g{AbelianGroup{1, {}}, std::vector<std::vector<long long>>(t.dim())};
  for (const auto& [label, e] : diagonal_exponents()) g.degrees[t.index(label)] = {e};
  return g;
}

/// Z-grading reduced modulo n.
inline Grading reduce_grading_mod(const Grading& g, long long n) {
  if (g.group.free_rank != 1 || !g.group.torsion.empty()) throw Error(ErrorKind::InvalidArgument, "reduce_grading_mod: needs a Z-grading");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "reduce_grading_mod: n >= 1");
  Grading out{AbelianGroup{0, {n}}, {}};
  for (const auto& d : g.degrees) out.degrees.push_back(out.group.normalize({d[0]}));
  return out;
}

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
  IntMatrix d, u, v;  ///< d = u * m * v
};

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Unimodular u, v with u m v diagonal, nonnegative, d_i | d_{i+1}.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SmithForm s{m, int_identity(rows), int_identity(cols)};
  IntMatrix& a = s.d;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : s.v) std::swap(r[i], r[j]);
  };
  // row_i -= q row_j
  auto row_op = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) s.u[i][c] -= q * s.u[j][c];
  };
  auto col_op = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) s.v[r][i] -= q * s.v[r][j];
  };
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry in the lower-right block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[best->first][best->second]))) best = {i, j};
      if (!best) break;
      swap_rows(t, best->first);
      swap_cols(t, best->second);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const BigInt q = a[i][t] / a[t][t];
        if (q != 0) row_op(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const BigInt q = a[t][j] / a[t][t];
        if (q != 0) col_op(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any entry not divisible by the pivot into row t
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      row_op(t, *bad, BigInt(-1));
    }
    if (a[t][t] < 0) {
      for (std::size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
      for (std::size_t c = 0; c < rows; ++c) s.u[t][c] = -s.u[t][c];
    }
  }
  return s;
}

struct UniversalGrading {
  AbelianGroup group;
  Grading grading;             ///< universal degree of each basis vector
  IntMatrix relations;         ///< one row g_i + g_j - g_k per nonzero product
  std::vector<BigInt> factors; ///< diagonal of the Smith form
};

/// Universal group of the grading by the given basis: generators g_i, one
/// relation g_i + g_j = g_k per nonzero product [x_i, x_j] = c x_k.
inline UniversalGrading universal_grading_group(const AlgebraTable& t) {
  const std::size_t n = t.dim();
  IntMatrix rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& p = t.basis_product(i, j);
      std::optional<std::size_t> k;
      for (std::size_t c = 0; c < n; ++c)
        if (!p[c].is_zero()) {
          if (k) throw Error(ErrorKind::NotMonomial, "[" + t.labels()[i] + "," + t.labels()[j] + "] is not a multiple of a basis vector");
          k = c;
        }
      if (!k) continue;
      std::vector<BigInt> row(n, 0);
      row[i] += 1;
      row[j] += 1;
      row[*k] -= 1;
      rel.push_back(std::move(row));
    }
  UniversalGrading out;
  out.relations = rel;
  if (rel.empty()) {
    out.group = AbelianGroup{n, {}};
    out.grading.group = out.group;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long long> d(n, 0);
      d[i] = 1;
      out.grading.degrees.push_back(d);
    }
    return out;
  }
  const SmithForm s = smith_normal_form(rel);
  // Z^n / rowspace(M): x -> x v sends the relation lattice onto rowspace(D)
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c) {
    const BigInt dc = c < s.d.size() ? s.d[c][c] : BigInt(0);
    out.factors.push_back(dc);
    if (dc == 0) {
      ++out.group.free_rank;
      keep.insert(keep.begin() + static_cast<std::ptrdiff_t>(out.group.free_rank - 1), c);
    } else if (dc != 1) {
      out.group.torsion.push_back(static_cast<long long>(dc));
      keep.push_back(c);
    }
  }
  out.grading.group = out.group;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> d;
    for (std::size_t c : keep) d.push_back(static_cast<long long>(s.v[i][c]));
    out.grading.degrees.push_back(out.group.normalize(d));
  }
  return out;
}

/// The (Z/2)^m grading of a thin table: e<alpha> has degree alpha.
inline Grading thin_grading(const AlgebraTable& thin) {
  Grading g;
  const std::size_t m = thin.labels().front().size() - 1;
  g.group = AbelianGroup{0, std::vector<long long>(m, 2)};
  for (const auto& label : thin.labels()) {
    std::vector<long long> d;
    for (std::size_t i = 0; i < m; ++i) d.push_back(label[i + 1] == '1' ? 1 : 0);
    g.degrees.push_back(d);
  }
  return g;
}

}  // namespace skry
