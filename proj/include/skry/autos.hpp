#pragma once

// Automorphisms: the predicate, exp of sandwich derivations, the explicit
// families of the 15-dimensional algebra, relation checks, finite group
// closure, and a backtracking search for automorphisms and isomorphisms.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "skry/bits.hpp"
#include "skry/liealg.hpp"
#include "skry/sandwich.hpp"
#include "skry/skryabin.hpp"

namespace skry {

inline bool is_automorphism(const AlgebraTable& t, const LinearMap& m) { return is_isomorphism(t, t, m); }

/// 1 + D for a sandwich derivation D.
inline LinearMap exp_auto(const AlgebraTable& t, const LinearMap& d) {
  if (!is_derivation(t, d)) throw Error(ErrorKind::NotSandwich, "exp_auto: not a derivation");
  if (!(d * d).is_zero()) throw Error(ErrorKind::NotSandwich, "exp_auto: D^2 != 0");
  const Subspace img = image(d);
  if (bracket_span(t, img, img).dim() != 0) throw Error(ErrorKind::NotSandwich, "exp_auto: [D(L), D(L)] != 0");
  return LinearMap::identity(t.field(), t.dim()) + d;
}

/// ad of an envelope element restricted to L (the first l coordinates).
inline LinearMap ad_on_base(const RestrictedAlgebra& env, std::size_t l, const Vector& x) {
  const Field f = env.field();
  LinearMap m(f, l, l);
  for (std::size_t j = 0; j < l; ++j) {
    const Vector c = env.base.product(env.base.basis(j), x);
    for (std::size_t k = 0; k < env.dim(); ++k) {
      if (k >= l && !c[k].is_zero()) throw Error(ErrorKind::InvalidArgument, "ad_on_base: L is not an ideal");
      if (k < l) m(k, j) = c[k];
    }
  }
  return m;
}

enum class AutoKind { ExpC2, ExpC4, ExpC5, ExpC3sq, Phi, Psi, Theta, Delta };

inline std::string to_string(AutoKind k) {
  switch (k) {
    case AutoKind::ExpC2: return "exp(c2)";
    case AutoKind::ExpC4: return "exp(c4)";
    case AutoKind::ExpC5: return "exp(c5)";
    case AutoKind::ExpC3sq: return "exp(c3^[2])";
    case AutoKind::Phi: return "Phi";
    case AutoKind::Psi: return "Psi";
    case AutoKind::Theta: return "Theta";
    case AutoKind::Delta: return "Delta";
  }
  return "?";
}

struct AutoFamily {
  AutoKind kind;
  Felt param;
};

namespace detail {

struct FamilyTerm {
  const char* target;
  int power;
};

struct FamilyLine {
  const char* source;
  std::vector<FamilyTerm> terms;
};

inline const std::vector<FamilyLine>& family_lines(AutoKind k) {
  static const std::vector<FamilyLine> phi = {
      {"b1", {{"b4", 1}}},
      {"b2", {{"b5", 1}}},
      {"b7", {{"b2", 2}, {"b5", 3}, {"c1", 1}}},
      {"b8", {{"c2", 1}}},
      {"b9", {{"c4", 2}}},
      {"c1", {{"b5", 2}}},
      {"c3", {{"c4", 1}}},
      {"d", {{"b3", 1}, {"b6", 2}}},
  };
  static const std::vector<FamilyLine> psi = {
      {"b1", {{"b6", 1}, {"c1", 1}, {"c4", 2}}},
      {"b2", {{"c2", 1}}},
      {"b3", {{"b5", 1}}},
      {"b4", {{"b2", 1}, {"c2", 2}}},
      {"b6", {{"c4", 1}}},
      {"b7", {{"b5", 1}, {"c3", 1}}},
      {"b9", {{"c2", 1}, {"c5", 1}}},
      {"c1", {{"b8", 1}, {"c4", 1}}},
      {"d", {{"b2", 1}, {"b9", 1}, {"c2", 2}, {"c5", 2}}},
  };
  static const std::vector<FamilyLine> theta = {
      {"b1", {{"b7", 1}, {"b8", 3}, {"b9", 2}}},
      {"b2", {{"b8", 1}}},
      {"b3", {{"b8", 2}}},
      {"b4", {{"b5", 2}, {"c1", 1}, {"c3", 2}, {"c5", 3}}},
      {"b5", {{"c2", 1}}},
      {"b6", {{"c2", 2}, {"c5", 2}}},
      {"c1", {{"c2", 2}, {"c5", 2}}},
      {"c3", {{"c5", 1}}},
      {"d", {{"b5", 2}, {"b6", 1}, {"c2", 3}, {"c3", 2}}},
  };
  static const std::vector<FamilyLine> none;
  switch (k) {
    case AutoKind::Phi: return phi;
    case AutoKind::Psi: return psi;
    case AutoKind::Theta: return theta;
    default: return none;
  }
}

}  // namespace detail

/// Degrees of the diagonal family: b_i -> lambda^{deg} b_i.
inline const std::map<std::string, int>& diagonal_exponents() {
  static const std::map<std::string, int> e = {{"b1", -2}, {"b2", 2},  {"b3", 0}, {"b4", -1}, {"b5", 3},
                                               {"b6", 1},  {"b7", 0},  {"b8", 4}, {"b9", 2},  {"c1", 1},
                                               {"c2", 5},  {"c3", 3},  {"c4", 4}, {"c5", 5},  {"d", -1}};
  return e;
}

/// The matrix of a family member on L(0,0) over `f` (columns = images).
inline LinearMap family_auto(const AutoFamily& a, Field f = Field::gf2()) {
  const AlgebraTable t = skryabin_table(f);
  const Felt p = f.element(a.param.bits);
  switch (a.kind) {
    case AutoKind::ExpC2:
    case AutoKind::ExpC4:
    case AutoKind::ExpC5:
    case AutoKind::ExpC3sq: {
      static const std::map<AutoKind, const char*> which = {
          {AutoKind::ExpC2, "c2"}, {AutoKind::ExpC4, "c4"}, {AutoKind::ExpC5, "c5"}, {AutoKind::ExpC3sq, "c3^[2]"}};
      const RestrictedAlgebra env = skryabin_envelope(f);
      return LinearMap::identity(f, t.dim()) + ad_on_base(env, t.dim(), env.base.basis(which.at(a.kind))).scaled(p);
    }
    case AutoKind::Phi:
    case AutoKind::Psi:
    case AutoKind::Theta: {
      LinearMap m = LinearMap::identity(f, t.dim());
      for (const auto& line : detail::family_lines(a.kind)) {
        Vector col = t.basis(line.source);
        for (const auto& term : line.terms) col.axpy(f.pow(p, term.power), t.basis(term.target));
        m.set_column(t.index(line.source), col);
      }
      return m;
    }
    case AutoKind::Delta: {
      if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "Delta needs a nonzero parameter");
      LinearMap m(f, t.dim(), t.dim());
      for (const auto& [label, e] : diagonal_exponents()) m(t.index(label), t.index(label)) = f.pow(p, e);
      return m;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "family_auto: unknown kind");
}

inline LinearMap family_auto(AutoKind k, Felt param, Field f = Field::gf2()) { return family_auto(AutoFamily{k, param}, f); }

struct RelationResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  bool ok() const { return failures == 0; }
};

/// x^g = g^{-1} x g.
inline LinearMap conjugate(const LinearMap& x, const LinearMap& g) {
  const auto gi = inverse(g);
  if (!gi) throw Error(ErrorKind::ZeroInverse, "conjugate: singular map");
  return *gi * x * g;
}

/// Every printed identity among the families, over all parameters of f.
/// A product XY of automorphisms is the matrix product X * Y.
inline std::vector<RelationResult> verify_relations(Field f) {
  const std::vector<Felt> elems = f.elements();
  const std::size_t n = 15;
  const LinearMap id = LinearMap::identity(f, n);
  std::map<std::pair<AutoKind, std::uint32_t>, LinearMap> cache;
  auto F = [&](AutoKind k, Felt p) -> const LinearMap& {
    const auto key = std::make_pair(k, p.bits);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, family_auto(k, p, f)).first;
    return it->second;
  };
  std::vector<RelationResult> out;
  auto check = [&](const std::string& name, const std::function<bool(Felt, Felt)>& holds, bool nonzero_second = false) {
    RelationResult r{name};
    for (Felt a : elems)
      for (Felt b : elems) {
        if (nonzero_second && b.is_zero()) continue;
        ++r.instances;
        if (!holds(a, b)) ++r.failures;
      }
    out.push_back(r);
  };
  auto mul = [&](Felt a, Felt b) { return f.mul(a, b); };
  auto sq = [&](Felt a) { return f.square(a); };
  using K = AutoKind;
  check("Phi(a)Phi(a') = Phi(a+a')", [&](Felt a, Felt b) { return F(K::Phi, a) * F(K::Phi, b) == F(K::Phi, f.add(a, b)); });
  check("Psi(a)Psi(a') = Psi(a+a')exp(aa'c3^[2])", [&](Felt a, Felt b) {
    return F(K::Psi, a) * F(K::Psi, b) == F(K::Psi, f.add(a, b)) * F(K::ExpC3sq, mul(a, b));
  });
  check("Theta(a)Theta(a') = Theta(a+a')exp((a^2a'+aa'^2)c3^[2])", [&](Felt a, Felt b) {
    return F(K::Theta, a) * F(K::Theta, b) == F(K::Theta, f.add(a, b)) * F(K::ExpC3sq, f.add(mul(sq(a), b), mul(a, sq(b))));
  });
  check("Psi(g)Phi(a) = Phi(a)Psi(g)exp(agc4)", [&](Felt a, Felt g) {
    return F(K::Psi, g) * F(K::Phi, a) == F(K::Phi, a) * F(K::Psi, g) * F(K::ExpC4, mul(a, g));
  });
  check("Theta(g)Phi(a) = Phi(a)Theta(g)exp(ag^2c2)exp(a^2gc4)exp(ag^2c5)exp(a^2g^2c3^[2])", [&](Felt a, Felt g) {
    return F(K::Theta, g) * F(K::Phi, a) == F(K::Phi, a) * F(K::Theta, g) * F(K::ExpC2, mul(a, sq(g))) *
                                                  F(K::ExpC4, mul(sq(a), g)) * F(K::ExpC5, mul(a, sq(g))) *
                                                  F(K::ExpC3sq, mul(sq(a), sq(g)));
  });
  check("Theta(g)Psi(a) = Psi(a)Theta(g)exp(agc2)exp(agc5)", [&](Felt a, Felt g) {
    return F(K::Theta, g) * F(K::Psi, a) == F(K::Psi, a) * F(K::Theta, g) * F(K::ExpC2, mul(a, g)) * F(K::ExpC5, mul(a, g));
  });
  const std::vector<std::pair<K, int>> act = {{K::ExpC2, -5}, {K::ExpC4, -4}, {K::ExpC5, -5}, {K::ExpC3sq, -6},
                                              {K::Phi, -1},   {K::Psi, -3},   {K::Theta, -2}};
  for (const auto& [k, e] : act)
    check(to_string(k) + "(a)^Delta(l) = " + to_string(k) + "(l^" + std::to_string(e) + " a)",
          [&, k = k, e = e](Felt a, Felt l) { return conjugate(F(k, a), F(K::Delta, l)) == F(k, mul(f.pow(l, e), a)); }, true);
  for (K fam : {K::Phi, K::Psi, K::Theta})
    for (K ex : {K::ExpC2, K::ExpC4, K::ExpC5, K::ExpC3sq})
      check(to_string(fam) + " commutes with " + to_string(ex),
            [&, fam = fam, ex = ex](Felt a, Felt b) { return F(fam, a) * F(ex, b) == F(ex, b) * F(fam, a); });
  check("Psi(a)^4 = 1", [&](Felt a, Felt) {
    const LinearMap p2 = F(K::Psi, a) * F(K::Psi, a);
    return p2 * p2 == id;
  });
  for (K ex : {K::ExpC2, K::ExpC4, K::ExpC5, K::ExpC3sq})
    check(to_string(ex) + "(a)^2 = 1", [&, ex = ex](Felt a, Felt) { return F(ex, a) * F(ex, a) == id; });
  return out;
}

/// Subgroup of GL(n) generated by the given maps, with its element list.
struct FiniteGroup {
  std::vector<LinearMap> generators;
  std::vector<LinearMap> elements;
  std::size_t order() const { return elements.size(); }
  bool contains(const LinearMap& m) const {
    for (const auto& e : elements)
      if (e == m) return true;
    return false;
  }
};

namespace detail {

struct MatrixHash {
  std::size_t operator()(const LinearMap& m) const {
    std::size_t h = 1469598103934665603ull;
    for (Felt c : m.data()) h = (h ^ c.bits) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

inline FiniteGroup group_closure(const std::vector<LinearMap>& gens, std::size_t bound = std::size_t{1} << 20) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "group_closure: no generators");
  const Field f = gens.front().field();
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens)
    if (!inverse(g)) throw Error(ErrorKind::ZeroInverse, "group_closure: generator not invertible");
  FiniteGroup out{gens, {LinearMap::identity(f, n)}};
  std::unordered_set<LinearMap, detail::MatrixHash> seen(out.elements.begin(), out.elements.end());
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (const auto& g : gens) {
      LinearMap p = out.elements[i] * g;
      if (seen.insert(p).second) {
        out.elements.push_back(std::move(p));
        if (out.elements.size() > bound) throw Error(ErrorKind::BudgetExceeded, "group_closure: more than " + std::to_string(bound) + " elements");
      }
    }
  return out;
}

/// The algebra over GF(2) obtained by restricting scalars from GF(2^k),
/// with multiplication by the field generator kept as a linear operator.
struct RealifiedAlgebra {
  Field field;
  std::size_t n = 0;  ///< dimension over the original field
  bits::BitAlgebra algebra;
  std::vector<bits::BitMatrix> scalar_ops;

  std::size_t dim() const { return algebra.dim(); }

  bits::Mask encode(const Vector& v) const {
    const int k = field.degree();
    bits::Mask m = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (int a = 0; a < k; ++a)
        if (v[i].bits >> a & 1u) m |= bits::bit(i * static_cast<std::size_t>(k) + static_cast<std::size_t>(a));
    return m;
  }

  Vector decode(bits::Mask m) const {
    const int k = field.degree();
    Vector v(field, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t c = 0;
      for (int a = 0; a < k; ++a)
        if (m >> (i * static_cast<std::size_t>(k) + static_cast<std::size_t>(a)) & 1u) c |= 1u << a;
      v.set(i, Felt(c));
    }
    return v;
  }
};

inline RealifiedAlgebra realify(const AlgebraTable& t) {
  const Field f = t.field();
  const auto k = static_cast<std::size_t>(f.degree());
  const std::size_t n = t.dim();
  if (n * k > bits::kMaxDim) throw Error(ErrorKind::SearchSpaceTooLarge, "realify: dimension over GF(2) exceeds 64");
  RealifiedAlgebra r{f, n, {}, {}};
  const std::size_t big = n * k;
  std::vector<bits::Mask> br(big * big, 0);
  auto scaled_basis = [&](std::size_t i, std::size_t a) { return t.basis(i).scaled(Felt(1u << a)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < k; ++b)
          if (i != j) br[(i * k + a) * big + (j * k + b)] = r.encode(t.product(scaled_basis(i, a), scaled_basis(j, b)));
  r.algebra = bits::BitAlgebra(big, std::move(br));
  if (k > 1) {
    bits::BitMatrix omega;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < k; ++a) omega.cols.push_back(r.encode(scaled_basis(i, a).scaled(f.generator())));
    r.scalar_ops.push_back(std::move(omega));
  }
  return r;
}

/// Backtracking search for isomorphisms A -> B (both realified over GF(2)).
/// Elements are screened by a signature (ranks of ad powers, whether ad is
/// idempotent, membership in supplied invariant subspaces); a partial map on
/// generators is closed under brackets and scalar operators, and every new
/// (source, image) pair must agree on signatures and linear consistency.
class IsomorphismSearch {
 public:
  static constexpr std::size_t kMaxScanDim = 22;

  IsomorphismSearch(const RealifiedAlgebra& a, const RealifiedAlgebra& b, std::vector<bits::BitBasis> inv_a = {},
                    std::vector<bits::BitBasis> inv_b = {})
      : a_(a), b_(b), inv_a_(std::move(inv_a)), inv_b_(std::move(inv_b)) {
    if (a_.dim() != b_.dim()) throw Error(ErrorKind::DimensionMismatch, "isomorphism search: dimensions differ");
    if (inv_a_.size() != inv_b_.size()) throw Error(ErrorKind::InvalidArgument, "isomorphism search: invariant lists differ");
    if (a_.dim() > kMaxScanDim) throw Error(ErrorKind::SearchSpaceTooLarge, "isomorphism search: more than 2^22 elements");
    sig_a_ = signatures(a_, inv_a_);
    sig_b_ = same(a_, b_) && inv_a_ == inv_b_ ? sig_a_ : signatures(b_, inv_b_);
    choose_generators();
  }

  /// Calls fn(columns) for every isomorphism; fn returns false to stop.
  /// Throws BudgetExceeded past `budget` search nodes.
  std::uint64_t run(const std::function<bool(const std::vector<bits::Mask>&)>& fn, std::uint64_t budget = 100'000'000) {
    budget_ = budget;
    nodes_ = 0;
    found_ = 0;
    stop_ = false;
    Partial p;
    p.reset(a_.dim());
    descend(0, p, fn);
    return found_;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<bits::Mask>& generators() const { return gens_; }
  std::size_t candidates(std::size_t g) const { return cand_[g].size(); }

 private:
  static bool same(const RealifiedAlgebra& x, const RealifiedAlgebra& y) { return &x == &y; }

  static std::vector<std::uint64_t> signatures(const RealifiedAlgebra& r, const std::vector<bits::BitBasis>& inv) {
    const std::size_t n = r.dim();
    const bits::BitAlgebra& b = r.algebra;
    std::vector<bits::BitMatrix> ad_basis;
    for (std::size_t i = 0; i < n; ++i) ad_basis.push_back(b.ad(bits::bit(i)));
    std::vector<std::uint64_t> sig(std::size_t{1} << n);
    bits::BitMatrix ad;
    ad.cols.assign(n, 0);
    bits::Mask x = 0;
    auto compute = [&] {
      std::uint64_t h = 0;
      bits::BitMatrix p = ad;
      for (int power = 1; power <= 4; ++power) {
        h = h * 67 + static_cast<std::uint64_t>(p.rank());
        if (power < 4) p = p.compose(ad);
      }
      const bits::BitMatrix sq = ad.compose(ad);
      h = h * 2 + (sq == ad ? 1u : 0u);
      for (const auto& s : inv) h = h * 2 + (s.contains(x) ? 1u : 0u);
      sig[x] = h;
    };
    compute();
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << n); ++g) {
      const auto i = static_cast<std::size_t>(std::countr_zero(g));
      x ^= bits::bit(i);
      for (std::size_t j = 0; j < n; ++j) ad.cols[j] ^= ad_basis[i].cols[j];
      compute();
    }
    return sig;
  }

  struct Partial {
    std::vector<std::pair<bits::Mask, bits::Mask>> ech;   // echelon on source, images carried along
    std::vector<std::pair<bits::Mask, bits::Mask>> pairs;  // basis pairs as inserted
    bits::BitBasis images;
    void reset(std::size_t) {
      ech.clear();
      pairs.clear();
      images = bits::BitBasis();
    }
  };

  /// Adds (x, y) and closes; false on inconsistency.
  bool add(Partial& p, bits::Mask x, bits::Mask y) const {
    std::vector<std::pair<bits::Mask, bits::Mask>> queue = {{x, y}};
    while (!queue.empty()) {
      auto [s, im] = queue.back();
      queue.pop_back();
      bits::Mask rs = s, ri = im;
      for (const auto& [es, ei] : p.ech)
        if (rs >> std::countr_zero(es) & 1u) {
          rs ^= es;
          ri ^= ei;
        }
      if (rs == 0) {
        if (ri != 0) return false;
        continue;
      }
      if (sig_a_[s] != sig_b_[im]) return false;
      if (!p.images.insert(im)) return false;
      const int piv = std::countr_zero(rs);
      for (auto& [es, ei] : p.ech)
        if (es >> piv & 1u) {
          es ^= rs;
          ei ^= ri;
        }
      p.ech.emplace_back(rs, ri);
      for (const auto& [qs, qi] : p.pairs) queue.emplace_back(a_.algebra.bracket(s, qs), b_.algebra.bracket(im, qi));
      for (std::size_t o = 0; o < a_.scalar_ops.size(); ++o)
        queue.emplace_back(a_.scalar_ops[o].apply(s), b_.scalar_ops[o].apply(im));
      p.pairs.emplace_back(s, im);
    }
    return true;
  }

  void choose_generators() {
    const std::size_t n = a_.dim();
    std::map<std::uint64_t, std::size_t> freq;
    for (std::uint64_t s : sig_b_) ++freq[s];
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return freq[sig_a_[bits::bit(i)]] < freq[sig_a_[bits::bit(j)]];
    });
    // greedy: add basis vectors (rarest signature first) until they generate
    Partial p;
    p.reset(n);
    for (std::size_t i : order) {
      if (p.ech.size() == n) break;
      bits::Mask v = bits::bit(i);
      for (const auto& [es, ei] : p.ech)
        if (v >> std::countr_zero(es) & 1u) v ^= es;
      if (v == 0) continue;
      gens_.push_back(bits::bit(i));
      add_self(p, bits::bit(i));
    }
    for (bits::Mask g : gens_) {
      std::vector<bits::Mask> c;
      for (std::size_t y = 1; y < sig_b_.size(); ++y)
        if (sig_b_[y] == sig_a_[g]) c.push_back(static_cast<bits::Mask>(y));
      cand_.push_back(std::move(c));
    }
  }

  /// Closure of the subalgebra generated so far in A alone (identity images).
  void add_self(Partial& p, bits::Mask x) const {
    std::vector<bits::Mask> queue = {x};
    while (!queue.empty()) {
      const bits::Mask s = queue.back();
      queue.pop_back();
      bits::Mask rs = s;
      for (const auto& [es, ei] : p.ech)
        if (rs >> std::countr_zero(es) & 1u) rs ^= es;
      if (rs == 0) continue;
      const int piv = std::countr_zero(rs);
      for (auto& [es, ei] : p.ech)
        if (es >> piv & 1u) es ^= rs;
      p.ech.emplace_back(rs, 0);
      for (const auto& [qs, qi] : p.pairs) queue.push_back(a_.algebra.bracket(s, qs));
      for (const auto& op : a_.scalar_ops) queue.push_back(op.apply(s));
      p.pairs.emplace_back(s, 0);
    }
  }

  void descend(std::size_t depth, const Partial& p, const std::function<bool(const std::vector<bits::Mask>&)>& fn) {
    if (stop_) return;
    if (depth == gens_.size()) {
      if (p.ech.size() != a_.dim()) return;
      // images of basis vectors from the echelon form
      std::vector<bits::Mask> cols(a_.dim());
      for (std::size_t i = 0; i < a_.dim(); ++i) {
        bits::Mask rs = bits::bit(i), ri = 0;
        for (const auto& [es, ei] : p.ech)
          if (rs >> std::countr_zero(es) & 1u) {
            rs ^= es;
            ri ^= ei;
          }
        cols[i] = ri;
      }
      ++found_;
      if (!fn(cols)) stop_ = true;
      return;
    }
    for (bits::Mask y : cand_[depth]) {
      if (++nodes_ > budget_) throw Error(ErrorKind::BudgetExceeded, "isomorphism search: node budget exhausted");
      Partial q = p;
      if (add(q, gens_[depth], y)) descend(depth + 1, q, fn);
      if (stop_) return;
    }
  }

  const RealifiedAlgebra& a_;
  const RealifiedAlgebra& b_;
  std::vector<bits::BitBasis> inv_a_, inv_b_;
  std::vector<std::uint64_t> sig_a_, sig_b_;
  std::vector<bits::Mask> gens_;
  std::vector<std::vector<bits::Mask>> cand_;
  std::uint64_t budget_ = 0, nodes_ = 0, found_ = 0;
  bool stop_ = false;
};

struct AutomorphismSearchResult {
  std::uint64_t order = 0;
  std::uint64_t nodes = 0;
  std::vector<LinearMap> automorphisms;
  std::vector<Vector> generators;  ///< the algebra generators whose images were searched
};

/// All automorphisms by backtracking. `invariant` lists subspaces every
/// automorphism is known to fix (used only to prune).
inline AutomorphismSearchResult automorphism_search(const AlgebraTable& t, const std::vector<Subspace>& invariant = {},
                                                    std::uint64_t budget = 100'000'000) {
  const RealifiedAlgebra r = realify(t);
  std::vector<bits::BitBasis> inv;
  for (const Subspace& s : invariant) {
    bits::BitBasis b;
    for (const Vector& v : s.basis())
      for (int a = 0; a < t.field().degree(); ++a) b.insert(r.encode(v.scaled(Felt(1u << a))));
    inv.push_back(std::move(b));
  }
  IsomorphismSearch search(r, r, inv, inv);
  AutomorphismSearchResult out;
  const auto k = static_cast<std::size_t>(t.field().degree());
  search.run(
      [&](const std::vector<bits::Mask>& cols) {
        LinearMap m(t.field(), t.dim(), t.dim());
        for (std::size_t i = 0; i < t.dim(); ++i) m.set_column(i, r.decode(cols[i * k]));
        out.automorphisms.push_back(std::move(m));
        return true;
      },
      budget);
  out.order = out.automorphisms.size();
  out.nodes = search.nodes();
  for (bits::Mask g : search.generators()) out.generators.push_back(r.decode(g));
  return out;
}

/// Cheap invariants compared before searching.
struct IsoScreen {
  bool equal = true;
  std::string differing;
};

inline IsoScreen iso_screen(const AlgebraTable& a, const AlgebraTable& b) {
  auto cmp = [](IsoScreen& s, const std::string& what, std::size_t x, std::size_t y) {
    if (s.equal && x != y) {
      s.equal = false;
      s.differing = what + " " + std::to_string(x) + " vs " + std::to_string(y);
    }
  };
  IsoScreen s;
  if (!(a.field() == b.field())) return {false, "fields differ"};
  cmp(s, "dim", a.dim(), b.dim());
  if (!s.equal) return s;
  cmp(s, "dim [L,L]", derived_algebra(a).dim(), derived_algebra(b).dim());
  cmp(s, "dim center", center(a).dim(), center(b).dim());
  cmp(s, "dim Der", derivation_algebra(a).dim(), derivation_algebra(b).dim());
  if (a.field().is_prime()) cmp(s, "dim sandwich", sandwich_subalgebra(a).dim(), sandwich_subalgebra(b).dim());
  return s;
}

struct IsoResult {
  std::optional<LinearMap> witness;
  std::string reason;  ///< which invariant differs, or "search exhausted"
};

inline IsoResult is_isomorphic(const AlgebraTable& a, const AlgebraTable& b, std::uint64_t budget = 100'000'000) {
  const IsoScreen s = iso_screen(a, b);
  if (!s.equal) return {std::nullopt, s.differing};
  const RealifiedAlgebra ra = realify(a), rb = realify(b);
  // generic invariant subspaces, computed on each side in the same way
  auto invariants = [](const AlgebraTable& t, const RealifiedAlgebra& r) {
    std::vector<bits::BitBasis> out;
    const Subspace d1 = derived_algebra(t);
    for (const Subspace& sub : {d1, bracket_span(t, Subspace::whole(t.field(), t.dim()), d1), bracket_span(t, d1, d1), center(t)}) {
      bits::BitBasis bb;
      for (const Vector& v : sub.basis())
        for (int k = 0; k < t.field().degree(); ++k) bb.insert(r.encode(v.scaled(Felt(1u << k))));
      out.push_back(std::move(bb));
    }
    return out;
  };
  IsomorphismSearch search(ra, rb, invariants(a, ra), invariants(b, rb));
  IsoResult out{std::nullopt, "search exhausted"};
  const auto k = static_cast<std::size_t>(a.field().degree());
  search.run(
      [&](const std::vector<bits::Mask>& cols) {
        LinearMap m(a.field(), a.dim(), a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) m.set_column(i, rb.decode(cols[i * k]));
        out.witness = std::move(m);
        out.reason = "witness found";
        return false;
      },
      budget);
  return out;
}

}  // namespace skry
