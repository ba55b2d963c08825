#pragma once

// Toral elements and tori of restricted algebras over GF(2), normalizers and
// Cartan checks, simultaneous eigenspace (root) decompositions, thin tables,
// toral rank and the centralizer census.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "skry/bits.hpp"
#include "skry/liealg.hpp"
#include "skry/parallel.hpp"
#include "skry/sandwich.hpp"

namespace skry {

inline constexpr std::size_t kToralScanMaxDim = 24;

/// All nonzero x with x^[2] = x (Gray-code scan, incremental squares).
inline std::vector<bits::Mask> toral_masks(const bits::BitAlgebra& b) {
  const std::size_t n = b.dim();
  if (!b.restricted()) throw Error(ErrorKind::InvalidArgument, "toral_masks: algebra has no 2-map");
  if (n > kToralScanMaxDim) throw Error(ErrorKind::SearchSpaceTooLarge, "toral scan limited to dim 24");
  std::vector<bits::Mask> out;
  bits::Mask x = 0, sq = 0;
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << n); ++g) {
    const auto i = static_cast<std::size_t>(std::countr_zero(g));
    // (x + e_i)^[2] = x^[2] + e_i^[2] + [x, e_i]
    sq ^= b.squares()[i] ^ b.bracket_with_basis(i, x);
    x ^= bits::bit(i);
    if (sq == x) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vector> toral_elements(const RestrictedAlgebra& r) {
  if (!r.field().is_prime()) throw Error(ErrorKind::FieldMismatch, "toral_elements: exhaustive scan needs GF(2)");
  std::vector<Vector> out;
  for (bits::Mask m : toral_masks(to_bits(r))) out.push_back(bits::to_vector(m, r.dim()));
  return out;
}

/// Tori over GF(2) are subspaces of pairwise commuting toral elements. Each
/// d-dimensional torus is produced once, through its reduced echelon basis
/// (pivot = lowest set bit, every basis vector zero at the other pivots).
class TorusEnumerator {
 public:
  TorusEnumerator(bits::BitAlgebra b, std::vector<bits::Mask> torals) : b_(std::move(b)), torals_(std::move(torals)) {
    std::sort(torals_.begin(), torals_.end(), [](bits::Mask x, bits::Mask y) {
      const int px = std::countr_zero(x), py = std::countr_zero(y);
      return px != py ? px < py : x < y;
    });
    const std::size_t m = torals_.size();
    words_ = (m + 63) / 64;
    adj_.assign(m * words_, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (b_.bracket(torals_[i], torals_[j]) == 0) {
          adj_[i * words_ + j / 64] |= bits::bit(j % 64);
          adj_[j * words_ + i / 64] |= bits::bit(i % 64);
        }
  }

  explicit TorusEnumerator(bits::BitAlgebra b) : TorusEnumerator(b, toral_masks(b)) {}

  const bits::BitAlgebra& algebra() const { return b_; }
  const std::vector<bits::Mask>& torals() const { return torals_; }

  bool commute(std::size_t i, std::size_t j) const { return adj_[i * words_ + j / 64] >> (j % 64) & 1u; }

  /// fn(basis) for every d-dim torus; fn returns false to stop early.
  template <class Fn>
  void for_each(int d, Fn&& fn) const {
    if (d <= 0) {
      fn(std::vector<bits::Mask>{});
      return;
    }
    std::vector<std::size_t> all(torals_.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<bits::Mask> chosen;
    bool go = true;
    recurse(all, chosen, d, fn, go);
  }

  std::uint64_t count(int d) const {
    std::uint64_t c = 0;
    for_each(d, [&](const std::vector<bits::Mask>&) {
      ++c;
      return true;
    });
    return c;
  }

  std::vector<std::vector<bits::Mask>> list(int d) const {
    std::vector<std::vector<bits::Mask>> out;
    for_each(d, [&](const std::vector<bits::Mask>& t) {
      out.push_back(t);
      return true;
    });
    return out;
  }

  std::optional<std::vector<bits::Mask>> find(int d) const {
    std::optional<std::vector<bits::Mask>> out;
    for_each(d, [&](const std::vector<bits::Mask>& t) {
      out = t;
      return false;
    });
    return out;
  }

  /// Ordered d-tuples of linearly independent, pairwise commuting toral
  /// elements, counted from common-neighbour sets of the commuting graph
  /// (independent of the echelon enumeration). Equals |GL(d,2)| * count(d).
  std::uint64_t ordered_tuples(int d) const {
    if (d <= 0) return 1;
    std::vector<std::size_t> tuple;
    std::vector<bits::Mask> common(words_, ~bits::Mask{0});
    const std::size_t m = torals_.size();
    if (m % 64) common.back() = (bits::Mask{1} << (m % 64)) - 1;
    return ordered_recurse(tuple, common, d);
  }

  /// Unordered sets of d linearly independent, pairwise commuting toral
  /// elements, by direct clique search. Each d-torus carries
  /// |GL(d,2)| / d! of them.
  std::uint64_t toral_bases(int d) const {
    if (d <= 0) return 1;
    std::vector<bits::Mask> common(words_, ~bits::Mask{0});
    const std::size_t m = torals_.size();
    if (m % 64) common.back() = (bits::Mask{1} << (m % 64)) - 1;
    bits::BitBasis span;
    return bases_recurse(span, common, 0, d);
  }

 private:
  template <class Fn>
  void recurse(const std::vector<std::size_t>& cand, std::vector<bits::Mask>& chosen, int d, Fn& fn, bool& go) const {
    for (std::size_t c = 0; c < cand.size() && go; ++c) {
      const std::size_t vi = cand[c];
      const bits::Mask v = torals_[vi];
      chosen.push_back(v);
      if (static_cast<int>(chosen.size()) == d) {
        go = fn(static_cast<const std::vector<bits::Mask>&>(chosen));
      } else {
        const int pv = std::countr_zero(v);
        std::vector<std::size_t> next;
        for (std::size_t k = c + 1; k < cand.size(); ++k) {
          const std::size_t wi = cand[k];
          const bits::Mask w = torals_[wi];
          const int pw = std::countr_zero(w);
          if (pw <= pv || (w >> pv & 1u) || !commute(vi, wi)) continue;
          bool reduced = true;
          for (bits::Mask u : chosen)
            if (u >> pw & 1u) reduced = false;
          if (reduced) next.push_back(wi);
        }
        if (next.size() + chosen.size() >= static_cast<std::size_t>(d)) recurse(next, chosen, d, fn, go);
      }
      chosen.pop_back();
    }
  }

  std::uint64_t ordered_recurse(std::vector<std::size_t>& tuple, const std::vector<bits::Mask>& common, int d) const {
    // elements of the span of `tuple` that are toral and commute with every member
    // are exactly the nonzero span elements, all of which lie in `common`
    const std::size_t k = tuple.size();
    std::uint64_t in_common = 0;
    for (bits::Mask w : common) in_common += static_cast<std::uint64_t>(std::popcount(w));
    const std::uint64_t span_nonzero = (std::uint64_t{1} << k) - 1;
    const std::uint64_t excluded = k == 0 ? 0 : span_nonzero - k;  // members themselves are not self-adjacent
    if (static_cast<int>(k) + 1 == d) return in_common - excluded;
    std::uint64_t total = 0;
    std::vector<bits::Mask> span;
    for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
      bits::Mask s = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (i >> j & 1u) s ^= torals_[tuple[j]];
      span.push_back(s);
    }
    for (std::size_t w = 0; w < words_; ++w) {
      bits::Mask word = common[w];
      while (word) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        if (std::find(span.begin(), span.end(), torals_[i]) != span.end()) continue;
        std::vector<bits::Mask> next(words_);
        for (std::size_t u = 0; u < words_; ++u) next[u] = common[u] & adj_[i * words_ + u];
        tuple.push_back(i);
        total += ordered_recurse(tuple, next, d);
        tuple.pop_back();
      }
    }
    return total;
  }

  std::uint64_t bases_recurse(const bits::BitBasis& span, const std::vector<bits::Mask>& common, std::size_t from, int d) const {
    std::uint64_t total = 0;
    for (std::size_t w = from / 64; w < words_; ++w) {
      bits::Mask word = common[w];
      if (w == from / 64) word &= ~bits::Mask{0} << (from % 64);
      while (word) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        bits::BitBasis next_span = span;
        if (!next_span.insert(torals_[i])) continue;
        if (next_span.dim() == d) {
          ++total;
          continue;
        }
        std::vector<bits::Mask> next(words_);
        for (std::size_t u = 0; u < words_; ++u) next[u] = common[u] & adj_[i * words_ + u];
        total += bases_recurse(next_span, next, i + 1, d);
      }
    }
    return total;
  }

  bits::BitAlgebra b_;
  std::vector<bits::Mask> torals_;
  std::size_t words_ = 0;
  std::vector<bits::Mask> adj_;
};

inline std::uint64_t gl_order(int d) {
  std::uint64_t out = 1;
  for (int i = 0; i < d; ++i) out *= (std::uint64_t{1} << d) - (std::uint64_t{1} << i);
  return out;
}

struct TorusEnumeration {
  int dim = 0;
  std::uint64_t count = 0;   ///< distinct subspaces
  std::uint64_t bases = 0;   ///< unordered toral bases, the census convention
  std::vector<Subspace> tori;  ///< canonical (RREF) subspaces
};

inline TorusEnumeration enumerate_tori(const RestrictedAlgebra& r, int d) {
  if (!r.field().is_prime()) throw Error(ErrorKind::FieldMismatch, "enumerate_tori: needs GF(2)");
  const TorusEnumerator e(to_bits(r));
  TorusEnumeration out{d, 0, 0, {}};
  e.for_each(d, [&](const std::vector<bits::Mask>& basis) {
    ++out.count;
    bits::BitBasis bb;
    for (bits::Mask m : basis) bb.insert(m);
    out.tori.push_back(bb.to_subspace(r.dim()));
    return true;
  });
  out.bases = e.toral_bases(d);
  return out;
}

namespace detail {

/// Kernel of a linear map given on the basis of `domain` (images as masks).
inline std::vector<bits::Mask> kernel_bits(const std::vector<bits::Mask>& domain, const std::vector<bits::Mask>& images) {
  // eliminate on images while tracking combinations (indices into domain, <= 64)
  std::vector<std::pair<bits::Mask, bits::Mask>> rows;  // (image, combination)
  std::vector<bits::Mask> kernel;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    bits::Mask img = images[i], combo = bits::bit(i);
    for (const auto& [ri, rc] : rows)
      if (img >> std::countr_zero(ri) & 1u) {
        img ^= ri;
        combo ^= rc;
      }
    if (img == 0) {
      bits::Mask v = 0;
      while (combo) {
        v ^= domain[static_cast<std::size_t>(std::countr_zero(combo))];
        combo &= combo - 1;
      }
      kernel.push_back(v);
    } else {
      for (auto& [ri, rc] : rows)
        if (ri >> std::countr_zero(img) & 1u) {
          ri ^= img;
          rc ^= combo;
        }
      rows.emplace_back(img, combo);
    }
  }
  return kernel;
}

}  // namespace detail

/// {x : [x, t] in T for all t in T}, T spanned by `torus` (any subspace really).
inline std::vector<bits::Mask> normalizer_bits(const bits::BitAlgebra& b, const std::vector<bits::Mask>& span_basis) {
  bits::BitBasis t;
  for (bits::Mask m : span_basis) t.insert(m);
  std::vector<bits::Mask> dom;
  for (std::size_t i = 0; i < b.dim(); ++i) dom.push_back(bits::bit(i));
  for (bits::Mask s : t.rows()) {
    std::vector<bits::Mask> img;
    for (bits::Mask x : dom) img.push_back(t.reduce(b.bracket(x, s)));
    dom = detail::kernel_bits(dom, img);
  }
  return dom;
}

inline bool is_self_normalizing_bits(const bits::BitAlgebra& b, const std::vector<bits::Mask>& span_basis) {
  return normalizer_bits(b, span_basis).size() == static_cast<std::size_t>(bits::rank_of(span_basis));
}

/// N(T) = T: the torus is a Cartan subalgebra of r.
inline bool is_cartan(const AlgebraTable& t, const Subspace& torus) { return normalizer(t, torus) == torus; }

/// Simultaneous eigenspaces of ad(t_1..t_m) on L = span of the first l basis
/// vectors of the ambient restricted algebra. Root alpha is stored as a
/// bitmask with bit i the eigenvalue of t_{i+1}.
struct RootDecomposition {
  std::vector<Vector> torus;
  std::size_t l = 0;
  std::map<std::uint32_t, Subspace> roots;  ///< nonzero roots only, in K^l
  Subspace zero_weight;
};

inline std::string root_label(std::uint32_t alpha, std::size_t m) {
  std::string s = "e";
  for (std::size_t i = 0; i < m; ++i) s.push_back((alpha >> i & 1u) ? '1' : '0');
  return s;
}

inline RootDecomposition root_decomposition(const RestrictedAlgebra& r, std::size_t l, const std::vector<Vector>& torus) {
  const Field f = r.field();
  const std::size_t m = torus.size();
  if (m > 20) throw Error(ErrorKind::InvalidArgument, "root_decomposition: torus too large");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(square(r, torus[i]) == torus[i])) throw Error(ErrorKind::NotToral, "root_decomposition: t" + std::to_string(i + 1) + " is not toral");
    for (std::size_t j = i + 1; j < m; ++j)
      if (!r.base.product(torus[i], torus[j]).is_zero())
        throw Error(ErrorKind::NotToral, "root_decomposition: torus elements do not commute");
  }
  std::vector<Matrix> ads;
  for (const Vector& t : torus) {
    Matrix a(f, l, l);
    for (std::size_t j = 0; j < l; ++j) {
      const Vector c = r.base.product(r.base.basis(j), t);
      for (std::size_t k = l; k < r.dim(); ++k)
        if (!c[k].is_zero()) throw Error(ErrorKind::InvalidArgument, "root_decomposition: L is not stable under the torus");
      for (std::size_t k = 0; k < l; ++k) a(k, j) = c[k];
    }
    ads.push_back(std::move(a));
  }
  // split successively by each ad(t_i) into its 0- and 1-eigenspaces
  std::vector<std::pair<std::uint32_t, Subspace>> parts = {{0u, Subspace::whole(f, l)}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::pair<std::uint32_t, Subspace>> next;
    for (const auto& [alpha, w] : parts) {
      if (w.dim() == 0) continue;
      for (std::uint32_t ev = 0; ev < 2; ++ev) {
        Matrix shifted = ads[i];
        if (ev)
          for (std::size_t k = 0; k < l; ++k) shifted(k, k) = f.add(shifted(k, k), Field::one());
        const Matrix basis = Matrix::from_columns(f, l, w.basis());
        const Subspace coeffs = kernel(shifted * basis);
        std::vector<Vector> vs;
        for (const Vector& c : coeffs.basis()) vs.push_back(basis * c);
        Subspace piece = Subspace::span(f, l, vs);
        if (piece.dim()) next.emplace_back(alpha | (ev << i), std::move(piece));
      }
    }
    parts = std::move(next);
  }
  RootDecomposition out{torus, l, {}, Subspace(f, l)};
  std::size_t total = 0;
  for (auto& [alpha, w] : parts) {
    total += w.dim();
    if (alpha == 0) out.zero_weight = w;
    else out.roots.emplace(alpha, std::move(w));
  }
  if (total != l) throw Error(ErrorKind::Validation, "root_decomposition: torus does not act diagonally on L");
  return out;
}

struct ThinCertificate {
  bool thin = false;
  std::string reason;
};

inline ThinCertificate is_thin(const RootDecomposition& d) {
  const std::size_t m = d.torus.size();
  if (m >= 32 || d.l != (std::size_t{1} << m) - 1)
    return {false, "dim L = " + std::to_string(d.l) + " is not 2^" + std::to_string(m) + " - 1"};
  if (d.zero_weight.dim() != 0) return {false, "zero-weight space has dim " + std::to_string(d.zero_weight.dim())};
  for (std::uint32_t a = 1; a < (1u << m); ++a) {
    const auto it = d.roots.find(a);
    if (it == d.roots.end()) return {false, "root " + root_label(a, m) + " missing"};
    if (it->second.dim() != 1) return {false, "root space " + root_label(a, m) + " has dim " + std::to_string(it->second.dim())};
  }
  return {true, "all " + std::to_string(d.roots.size()) + " nonzero roots occur with 1-dim root spaces"};
}

/// Thin check on bits: ad(t_i) restricted to L (first l coordinates) is an
/// idempotent; root spaces are images of products of P_i or 1 + P_i.
inline bool is_thin_bits(const bits::BitAlgebra& b, std::size_t l, const std::vector<bits::Mask>& torus) {
  const std::size_t m = torus.size();
  if (l != (std::size_t{1} << m) - 1) return false;
  std::vector<bits::BitMatrix> p, q;
  for (bits::Mask t : torus) {
    p.push_back(b.ad(t, l));
    bits::BitMatrix c = p.back();
    for (std::size_t j = 0; j < l; ++j) c.cols[j] ^= bits::bit(j);
    q.push_back(std::move(c));
  }
  for (std::uint32_t a = 0; a < (1u << m); ++a) {
    bits::BitMatrix prod = (a & 1u) ? p[0] : q[0];
    for (std::size_t i = 1; i < m; ++i) prod = prod.compose((a >> i & 1u) ? p[i] : q[i]);
    if (prod.rank() != (a == 0 ? 0 : 1)) return false;
  }
  return true;
}

/// Multiplication table in a basis of root vectors labelled e<alpha> (bit i
/// of alpha written in position i). `chosen` maps each nonzero root to its
/// vector; by default the RREF basis vector of each root space.
inline AlgebraTable thin_table(const AlgebraTable& l_table, const RootDecomposition& d,
                               std::map<std::uint32_t, Vector> chosen = {}) {
  const ThinCertificate cert = is_thin(d);
  if (!cert.thin) throw Error(ErrorKind::InvalidArgument, "thin_table: " + cert.reason);
  const std::size_t m = d.torus.size();
  const Field f = l_table.field();
  for (const auto& [alpha, w] : d.roots)
    if (!chosen.count(alpha)) chosen.emplace(alpha, w.basis().front());
  std::vector<std::string> labels;
  std::vector<Vector> basis;
  for (std::uint32_t a = 1; a < (1u << m); ++a) {
    labels.push_back(root_label(a, m));
    basis.push_back(chosen.at(a));
  }
  AlgebraTable out(f, labels, l_table.name() + "-thin");
  for (std::uint32_t a = 1; a < (1u << m); ++a)
    for (std::uint32_t c = a + 1; c < (1u << m); ++c) {
      const Vector p = l_table.product(chosen.at(a), chosen.at(c));
      if (p.is_zero()) continue;
      const Vector& target = chosen.at(a ^ c);
      const std::size_t lead = target.leading();
      const Felt coeff = f.mul(p[lead], f.inv(target[lead]));
      if (!(target.scaled(coeff) == p))
        throw Error(ErrorKind::Validation, "thin_table: [" + root_label(a, m) + "," + root_label(c, m) + "] not proportional to " +
                                               root_label(a ^ c, m));
      out.set_product(a - 1, c - 1, out.basis((a ^ c) - 1).scaled(coeff));
    }
  return out;
}

/// Permutation pi with printed label position j <-> torus generator pi[j],
/// fixed by the eigenvalues of the given vectors; nullopt if none fits.
inline std::optional<std::vector<std::size_t>> thin_label_permutation(const RootDecomposition& d,
                                                                    const std::vector<std::pair<std::string, Vector>>& printed) {
  const std::size_t m = d.torus.size();
  std::vector<std::pair<std::string, std::uint32_t>> observed;
  for (const auto& [label, v] : printed) {
    std::optional<std::uint32_t> root;
    for (const auto& [alpha, w] : d.roots)
      if (w.contains(v)) root = alpha;
    if (!root || label.size() != m + 1) return std::nullopt;
    observed.emplace_back(label, *root);
  }
  std::vector<std::size_t> pi(m);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (const auto& [label, alpha] : observed)
      for (std::size_t j = 0; j < m && ok; ++j)
        if ((label[j + 1] == '1') != static_cast<bool>(alpha >> pi[j] & 1u)) ok = false;
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

struct ToralRank {
  int rank = 0;
  std::vector<Vector> witness;  ///< basis of a maximal torus (ambient coordinates)
  bool witness_cartan = false;  ///< witness is self-normalizing in the restricted algebra
  std::uint64_t toral_count = 0;
  std::uint64_t maximal_tori = 0;   ///< distinct tori of dimension `rank`
  std::uint64_t maximal_bases = 0;  ///< unordered toral bases of those tori
};

inline ToralRank toral_rank(const RestrictedAlgebra& r, bool count_maximal = false) {
  if (!r.field().is_prime()) throw Error(ErrorKind::FieldMismatch, "toral_rank: needs GF(2)");
  const bits::BitAlgebra b = to_bits(r);
  const TorusEnumerator e(b);
  ToralRank out;
  out.toral_count = e.torals().size();
  std::vector<bits::Mask> best;
  for (int d = 1;; ++d) {
    auto t = e.find(d);
    if (!t) break;
    best = *t;
    out.rank = d;
  }
  for (bits::Mask m : best) out.witness.push_back(bits::to_vector(m, r.dim()));
  out.witness_cartan = out.rank > 0 && is_self_normalizing_bits(b, best);
  if (count_maximal) {
    out.maximal_tori = out.rank > 0 ? e.count(out.rank) : 1;
    out.maximal_bases = e.toral_bases(out.rank);
  }
  return out;
}

inline ToralRank toral_rank(const AlgebraTable& t, bool count_maximal = false) {
  return toral_rank(two_envelope(t).algebra, count_maximal);
}

struct CentralizerRecord {
  bits::Mask toral = 0;
  std::size_t dim = 0;
  bool simple = false;
  std::size_t centroid_dim = 0;
  int toral_rank = -1;  ///< computed when the centralizer is centerless
};

struct CentralizerCensus {
  std::vector<CentralizerRecord> records;
  std::map<std::size_t, std::size_t> by_dim;
  std::size_t central_simple = 0;
  std::size_t simple = 0;
  std::map<int, std::size_t> simple_by_rank;  ///< toral rank -> count among central simple
};

/// For every toral h of the envelope r (which contains L as its first l
/// coordinates): C_L(h), simplicity, centroid dimension, GF(2)-toral rank.
inline CentralizerCensus centralizer_census(const AlgebraTable& l_table, const RestrictedAlgebra& r) {
  const std::size_t l = l_table.dim();
  const bits::BitAlgebra b = to_bits(r);
  const std::vector<bits::Mask> torals = toral_masks(b);
  CentralizerCensus out;
  out.records.resize(torals.size());
  parallel_for(torals.size(), [&](std::size_t i) {
    CentralizerRecord rec;
    rec.toral = torals[i];
    std::vector<bits::Mask> dom;
    for (std::size_t j = 0; j < l; ++j) dom.push_back(bits::bit(j));
    const bits::BitMatrix ad = b.ad(torals[i], l);
    const auto ker = detail::kernel_bits(dom, ad.cols);
    Subspace c(Field::gf2(), l);
    for (bits::Mask v : ker) c.insert(bits::to_vector(v, l));
    rec.dim = c.dim();
    const AlgebraTable sub = subalgebra_table(l_table, c);
    rec.simple = is_simple(sub);
    rec.centroid_dim = centroid(sub).dim();
    if (center(sub).dim() == 0) rec.toral_rank = toral_rank(sub).rank;
    out.records[i] = rec;
  });
  for (const auto& rec : out.records) {
    ++out.by_dim[rec.dim];
    if (rec.simple) ++out.simple;
    if (rec.simple && rec.centroid_dim == 1) {
      ++out.central_simple;
      ++out.simple_by_rank[rec.toral_rank];
    }
  }
  return out;
}

struct InvariantProfile {
  int tr = 0;
  std::uint64_t n1 = 0;
  std::uint64_t nm = 0;
  std::size_t s = 0;
  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

inline std::string to_string(const InvariantProfile& p) {
  return "(" + std::to_string(p.tr) + ", " + std::to_string(p.n1) + ", " + std::to_string(p.nm) + ", " + std::to_string(p.s) + ")";
}

/// (toral rank, toral count, maximal tori, sandwich dim) over GF(2). Maximal
/// tori are counted as unordered toral bases, like the census.
inline InvariantProfile invariant_profile(const AlgebraTable& t) {
  const ToralRank tr = toral_rank(t, true);
  return {tr.rank, tr.toral_count, tr.maximal_bases, sandwich_subalgebra(t).dim()};
}

}  // namespace skry
