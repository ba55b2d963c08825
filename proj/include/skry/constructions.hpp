#pragma once

// Building blocks for the semisimple algebra S (x) O_1(m) + derivations:
// the truncated divided power algebra, its special derivation, the
// 3-dimensional simple algebra in characteristic 2, and tensor products.

#include <optional>
#include <string>
#include <vector>

#include "skry/liealg.hpp"

namespace skry {

/// Commutative algebra with basis x^(0..top), x^(i) x^(j) = C(i+j, i) x^(i+j).
class DividedPowers {
 public:
  explicit DividedPowers(int top = 3) : top_(top) {}

  int top() const { return top_; }
  int dim() const { return top_ + 1; }

  /// Index of x^(i) x^(j) when the coefficient C(i+j, i) is odd and i+j <= top.
  std::optional<int> product(int i, int j) const {
    const int s = i + j;
    if (s > top_) return std::nullopt;
    if (!binomial_is_odd(s, i)) return std::nullopt;
    return s;
  }

  /// The special derivation: x^(i) -> x^(i-1), 1 -> 0.
  std::optional<int> derivative(int i) const {
    if (i == 0) return std::nullopt;
    return i - 1;
  }

  /// Lucas: C(n, k) is odd iff k's bits are a subset of n's.
  static bool binomial_is_odd(int n, int k) { return (k & ~n) == 0; }

 private:
  int top_;
};

/// [e,h] = e, [f,h] = f, [e,f] = h.
inline AlgebraTable sl2_char2(Field f = Field::gf2()) {
  AlgebraTable t(f, {"e", "f", "h"}, "sl2-char2");
  t.set_product("e", "h", t.basis("e"));
  t.set_product("f", "h", t.basis("f"));
  t.set_product("e", "f", t.basis("h"));
  return t;
}

/// S (x) O with [s (x) a, t (x) b] = [s, t] (x) ab; labels "s*x^i" (i = 0 written as "s*1").
inline AlgebraTable tensor_with_divided_powers(const AlgebraTable& s, const DividedPowers& o) {
  std::vector<std::string> labels;
  const auto power_name = [](int i) { return i == 0 ? std::string("1") : i == 1 ? std::string("x") : "x" + std::to_string(i); };
  for (int a = 0; a < o.dim(); ++a)
    for (const auto& l : s.labels()) labels.push_back(l + "*" + power_name(a));
  AlgebraTable out(s.field(), labels, s.name() + "(x)O");
  const std::size_t n = s.dim();
  auto idx = [n](std::size_t si, int a) { return static_cast<std::size_t>(a) * n + si; };
  for (int a = 0; a < o.dim(); ++a)
    for (int b = 0; b < o.dim(); ++b) {
      const auto ab = o.product(a, b);
      if (!ab) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (idx(i, a) >= idx(j, b) || i == j) continue;
          Vector v = out.zero();
          const Vector& ij = s.basis_product(i, j);
          for (std::size_t k = 0; k < n; ++k) v.set(idx(k, *ab), ij[k]);
          out.set_product(idx(i, a), idx(j, b), v);
        }
    }
  return out;
}

}  // namespace skry
