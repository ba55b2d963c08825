#pragma once

// The 15-dimensional family L(beta, delta) in the standard basis
// {b1..b9, c1..c5, d}, its printed 19-dimensional 2-envelope, the basis
// changes collapsing the family to L(0,0), the semisimple form it deforms,
// and the named vectors and subspaces used throughout the workbench.

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skry/constructions.hpp"
#include "skry/error.hpp"
#include "skry/liealg.hpp"

namespace skry {

inline const std::vector<std::string>& skryabin_labels() {
  static const std::vector<std::string> labels = {"b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8",
                                                  "b9", "c1", "c2", "c3", "c4", "c5", "d"};
  return labels;
}

/// Labels of the 2-envelope: the 15 above, then the four new directions.
inline const std::vector<std::string>& skryabin_envelope_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> l = skryabin_labels();
    for (const char* extra : {"b1^[2]", "b4^[2]", "b7^[2]", "c3^[2]"}) l.emplace_back(extra);
    return l;
  }();
  return labels;
}

struct SkryabinParams {
  Felt beta;
  Felt delta;
  Field field;
};

/// Sum of whitespace- or '+'-separated labels, e.g. "b1 + b3 + b1^[2]".
inline Vector parse_sum(const AlgebraTable& t, std::string_view expr) {
  Vector v = t.zero();
  std::string token;
  auto flush = [&] {
    if (!token.empty()) v += t.basis(token);
    token.clear();
  };
  for (char c : expr) {
    if (c == '+' || c == ' ' || c == ',') flush();
    else token.push_back(c);
  }
  flush();
  return v;
}

namespace detail {

/// Fills the beta = delta = 0 part of the multiplication table; rows list
/// "[row, col] = sum" entries with nonzero result.
inline void fill_skryabin_core(AlgebraTable& t) {
  static constexpr std::array<std::array<const char*, 3>, 56> entries = {{
      {"b1", "b2", "b3"}, {"b1", "b3", "b1"}, {"b1", "b5", "b6"}, {"b1", "b6", "b4"}, {"b1", "b8", "b9"},
      {"b1", "b9", "b7"}, {"b1", "c1", "d"},  {"b1", "c2", "c3"}, {"b1", "c3", "c1"}, {"b1", "c4", "b2"},
      {"b1", "c5", "b5"},
      {"b2", "b3", "b2"}, {"b2", "b4", "b6"}, {"b2", "b6", "b5"}, {"b2", "b7", "b9"}, {"b2", "b9", "b8"},
      {"b2", "c1", "c3"}, {"b2", "c3", "c2"},
      {"b3", "b4", "b4"}, {"b3", "b5", "b5"}, {"b3", "b7", "b7"}, {"b3", "b8", "b8"}, {"b3", "c1", "c1"},
      {"b3", "c2", "c2"},
      {"b4", "b7", "d"},  {"b4", "b8", "c3"}, {"b4", "b9", "c1"}, {"b4", "c1", "b3"}, {"b4", "c2", "c4"},
      {"b4", "c3", "b2"}, {"b4", "c4", "b5"}, {"b4", "d", "b1"},
      {"b5", "b7", "c3"}, {"b5", "b9", "c2"}, {"b5", "c1", "c4"}, {"b5", "d", "b2"},
      {"b6", "b7", "c1"}, {"b6", "b8", "c2"}, {"b6", "c3", "c4"}, {"b6", "d", "b3"},
      {"b7", "c1", "b6"}, {"b7", "c2", "c5"}, {"b7", "c3", "b5"}, {"b7", "c4", "b8"}, {"b7", "c5", "c2"},
      {"b7", "d", "b4"},
      {"b8", "c1", "c5"}, {"b8", "d", "b5"},
      {"b9", "c3", "c5"}, {"b9", "d", "b6"},
      {"c1", "c3", "b8"}, {"c1", "c4", "c2"}, {"c1", "d", "b7"},
      {"c2", "d", "b8"},
      {"c3", "d", "b9"},
      {"c5", "d", "c4"},
  }};
  for (const auto& [a, b, c] : entries) t.set_product(a, b, t.basis(c));
}

}  // namespace detail

/// L(beta, delta): beta enters at [b1,b4] and [b1,d]; delta at [b1,c1], [b1,b7], [b4,b7].
inline AlgebraTable skryabin_table(const SkryabinParams& p) {
  const Field f = p.field;
  f.element(p.beta.bits);
  f.element(p.delta.bits);
  AlgebraTable t(f, skryabin_labels(), "skryabin");
  detail::fill_skryabin_core(t);
  t.set_product("b1", "b4", t.basis("c5").scaled(p.beta));
  t.set_product("b1", "d", t.basis("c2").scaled(p.beta));
  t.set_product("b1", "c1", t.basis("c5").scaled(p.delta) + t.basis("d"));
  t.set_product("b1", "b7", t.basis("c4").scaled(p.delta));
  t.set_product("b4", "b7", t.basis("c5").scaled(p.delta) + t.basis("d"));
  if (!p.beta.is_zero() || !p.delta.is_zero())
    t.set_name("skryabin(" + to_hex(p.beta) + "," + to_hex(p.delta) + ")");
  return t;
}

inline AlgebraTable skryabin_table(Field f = Field::gf2()) { return skryabin_table({Felt(0), Felt(0), f}); }

/// The printed 19-dimensional 2-envelope of L(0,0).
inline RestrictedAlgebra skryabin_envelope(Field f = Field::gf2()) {
  AlgebraTable t(f, skryabin_envelope_labels(), "skryabin-env");
  detail::fill_skryabin_core(t);
  static constexpr std::array<std::array<const char*, 3>, 26> extra = {{
      {"b1", "c3^[2]", "b8"},     {"b2", "b1^[2]", "b1"},     {"b4", "b7^[2]", "b4"},   {"b4", "c3^[2]", "c2"},
      {"b5", "b1^[2]", "b4"},     {"b5", "b7^[2]", "b5"},     {"b6", "b7^[2]", "b6"},   {"b7", "b4^[2]", "b1"},
      {"b8", "b1^[2]", "b7"},     {"b8", "b4^[2]", "b2"},     {"b9", "b4^[2]", "b3"},   {"c1", "b4^[2]", "b4"},
      {"c1", "b7^[2]", "c1"},     {"c2", "b1^[2]", "c1"},     {"c2", "b4^[2]", "b5"},   {"c2", "b7^[2]", "c2"},
      {"c3", "b1^[2]", "d"},      {"c3", "b4^[2]", "b6"},     {"c3", "b7^[2]", "c3"},   {"c4", "b1^[2]", "b3"},
      {"c5", "b1^[2]", "b6"},     {"c5", "b7^[2]", "c5"},     {"d", "b7^[2]", "d"},     {"d", "c3^[2]", "c5"},
      {"b1^[2]", "c3^[2]", "b9"}, {"b4^[2]", "c3^[2]", "c4"},
  }};
  for (const auto& [a, b, c] : extra) t.set_product(a, b, t.basis(c));
  std::vector<Vector> squares(t.dim(), t.zero());
  auto sq = [&](std::string_view x, std::string_view y) { squares[t.index(x)] = t.basis(y); };
  sq("b1", "b1^[2]");
  sq("b2", "c4");
  sq("b3", "b3");
  sq("b4", "b4^[2]");
  sq("b7", "b7^[2]");
  sq("c1", "b9");
  sq("c3", "c3^[2]");
  sq("d", "b4^[2]");
  sq("b7^[2]", "b7^[2]");  // b7^[4] = b7^[2]; b1^[4] = b4^[4] = c3^[4] = 0
  return RestrictedAlgebra{std::move(t), std::move(squares)};
}

/// Which reading of the c1' line of the second basis change to use.
enum class LemmaTwoC1 { Printed, Corrected };  // "b1 + beta^2 c5" vs "c1 + beta^2 c5"

/// Whether the second basis change scales by beta^2 (as printed) or sqrt(beta).
enum class LemmaTwoCoefficient { BetaSquared, SqrtBeta };

struct LemmaTwoVariant {
  LemmaTwoC1 c1 = LemmaTwoC1::Printed;
  LemmaTwoCoefficient coefficient = LemmaTwoCoefficient::BetaSquared;
};

/// Columns are the primed basis vectors. which = 1: the map L(beta,0) -> L(beta,delta)
/// built from sqrt(delta) and delta (param = delta). which = 2: L(0,0) -> L(beta,0)
/// (param = beta). In both cases product(Px, Py) in the target equals P product(x, y)
/// in the source.
inline LinearMap lemma_basis_change(int which, Felt param, Field f, LemmaTwoVariant variant = {}) {
  const AlgebraTable t = skryabin_table(f);
  LinearMap m = LinearMap::identity(f, t.dim());
  auto set = [&](std::string_view target, std::initializer_list<std::pair<std::string_view, Felt>> terms) {
    m.set_column(t.index(target), t.combination(terms));
  };
  const Felt one = Field::one();
  if (which == 1) {
    const Felt s = f.sqrt(param);
    set("b1", {{"b1", one}, {"b6", s}, {"b8", param}});
    set("b3", {{"b3", one}, {"b5", s}});
    set("b4", {{"b4", one}, {"c2", param}});
    set("b7", {{"b7", one}, {"c3", s}});
    set("b9", {{"b9", one}, {"c2", s}});
    set("c1", {{"c1", one}, {"c4", s}});
    set("d", {{"d", one}, {"b2", s}});
  } else if (which == 2) {
    const Felt g = variant.coefficient == LemmaTwoCoefficient::BetaSquared ? f.square(param) : f.sqrt(param);
    set("b1", {{"b1", one}, {"b9", g}});
    set("b3", {{"b3", one}, {"b8", g}});
    set("b4", {{"b4", one}, {"c3", g}});
    set("b6", {{"b6", one}, {"c2", g}});
    if (variant.c1 == LemmaTwoC1::Printed) set("c1", {{"b1", one}, {"c5", g}});
    else set("c1", {{"c1", one}, {"c5", g}});
    set("d", {{"d", one}, {"b5", g}});
  } else {
    throw Error(ErrorKind::InvalidArgument, "lemma_basis_change: which must be 1 or 2");
  }
  return m;
}

struct LemmaTwoResolution {
  LemmaTwoVariant variant;
  LinearMap map;
};

/// Tries the printed reading of the second basis change first, then the
/// alternatives; keeps the first that is an isomorphism L(0,0) -> L(beta,0).
inline std::optional<LemmaTwoResolution> resolve_lemma_two(Felt beta, Field f) {
  const AlgebraTable source = skryabin_table(f);
  const AlgebraTable target = skryabin_table({beta, Felt(0), f});
  for (auto coefficient : {LemmaTwoCoefficient::BetaSquared, LemmaTwoCoefficient::SqrtBeta})
    for (auto c1 : {LemmaTwoC1::Printed, LemmaTwoC1::Corrected}) {
      const LemmaTwoVariant v{c1, coefficient};
      LinearMap m = lemma_basis_change(2, beta, f, v);
      if (is_isomorphism(source, target, m)) return LemmaTwoResolution{v, std::move(m)};
    }
  return std::nullopt;
}

inline std::string to_string(const LemmaTwoVariant& v) {
  return std::string(v.c1 == LemmaTwoC1::Printed ? "c1'=b1+" : "c1'=c1+") +
         (v.coefficient == LemmaTwoCoefficient::BetaSquared ? "beta^2*c5" : "sqrt(beta)*c5");
}

/// Composite of both basis changes: an isomorphism L(0,0) -> L(beta,delta).
inline std::optional<LinearMap> family_isomorphism(Felt beta, Felt delta, Field f) {
  const auto two = resolve_lemma_two(beta, f);
  if (!two) return std::nullopt;
  return lemma_basis_change(1, delta, f) * two->map;
}

struct SemisimpleForm {
  AlgebraTable table;
  Subspace socle;  ///< sl2 (x) O_1(2), the 12-dimensional ideal
};

/// sl2 (x) O_1(2) + g (x) <1, x> + d, with g = (ad f)^2 and d the special
/// derivation, labelled so that b1 = e(x)1, ..., c3 = h(x)x^(3), c4 = g(x)1,
/// c5 = g(x)x, d = d.
inline SemisimpleForm semisimple_form(Field f = Field::gf2()) {
  const AlgebraTable s = sl2_char2(f);
  const DividedPowers o(3);
  const AlgebraTable socle = tensor_with_divided_powers(s, o);  // indices a*3 + {e,f,h}
  AlgebraTable t(f, skryabin_labels(), "semisimple");
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i + 1; j < 12; ++j) {
      Vector v = t.zero();
      for (std::size_t k = 0; k < 12; ++k) v.set(k, socle.basis_product(i, j)[k]);
      t.set_product(i, j, v);
    }
  const Matrix adf = ad_matrix(s, s.basis("f"));
  const Matrix g = adf * adf;
  const std::size_t g_index[2] = {12, 13};  // g(x)1, g(x)x
  const std::size_t d_index = 14;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < o.dim(); ++b) {
      const auto ab = o.product(a, b);
      if (!ab) continue;
      for (std::size_t si = 0; si < 3; ++si) {
        Vector v = t.zero();
        const Vector gs = g.column(si);
        for (std::size_t k = 0; k < 3; ++k) v.set(static_cast<std::size_t>(*ab) * 3 + k, gs[k]);
        t.set_product(g_index[a], static_cast<std::size_t>(b) * 3 + si, v);
      }
    }
  for (int b = 0; b < o.dim(); ++b) {
    const auto db = o.derivative(b);
    if (!db) continue;
    for (std::size_t si = 0; si < 3; ++si)
      t.set_product(d_index, static_cast<std::size_t>(b) * 3 + si, t.basis(static_cast<std::size_t>(*db) * 3 + si));
  }
  t.set_product(d_index, g_index[1], t.basis(g_index[0]));
  std::vector<std::size_t> axes(12);
  for (std::size_t i = 0; i < 12; ++i) axes[i] = i;
  return SemisimpleForm{std::move(t), Subspace::coordinates(f, 15, axes)};
}

/// phi(alpha) (x) id on the socle (e -> e + alpha f), identity on g (x) <1,x> and d.
inline LinearMap semisimple_phi_auto(Felt alpha, Field f = Field::gf2()) {
  LinearMap m = LinearMap::identity(f, 15);
  for (std::size_t a = 0; a < 4; ++a) m(a * 3 + 1, a * 3) = f.element(alpha.bits);
  return m;
}

/// The four printed toral generators of a 4-dimensional torus in the envelope.
inline std::vector<Vector> canonical_torus(Field f = Field::gf2()) {
  const AlgebraTable t(f, skryabin_envelope_labels());
  return {parse_sum(t, "b1 + b3 + b1^[2]"), parse_sum(t, "b2 + b3 + c4 + b7^[2]"),
          parse_sum(t, "b4 + b6 + b4^[2] + b7^[2]"), parse_sum(t, "b8 + b9 + c1 + c3 + b7^[2] + c3^[2]")};
}

struct LabeledVector {
  std::string label;
  Vector vector;
};

/// The printed root vectors e_alpha of the thin decomposition, in label order 0001..1111.
inline std::vector<LabeledVector> thin_basis(Field f = Field::gf2()) {
  static constexpr std::array<std::array<const char*, 2>, 15> rows = {{
      {"e0001", "b2 + b3 + b4 + b6 + c4"},
      {"e0010", "b2 + b3 + c1 + c3 + c4"},
      {"e0011", "b2 + b3 + b4 + b6 + c1 + c3 + c4"},
      {"e0100", "b1 + b3 + b7 + b9 + d"},
      {"e0101", "b7 + b9 + d"},
      {"e0110", "b1 + b3 + b5 + b6 + c5 + d"},
      {"e0111", "b5 + b6 + c5"},
      {"e1000", "b2 + b3 + b8 + b9 + c1 + c2 + c3"},
      {"e1001", "b2 + b3 + b4 + b5 + b6"},
      {"e1010", "b2 + b3 + c1 + c2 + c3"},
      {"e1011", "b2 + b3 + b4 + b5 + b6 + c1 + c2 + c3"},
      {"e1100", "b1 + b2 + b3 + b7 + b8 + b9 + c2 + c3 + d"},
      {"e1101", "b5 + b6 + b7 + b8 + b9 + c2 + c3 + d"},
      {"e1110", "b1 + b2 + b3 + b5 + b6 + c2 + c3 + d"},
      {"e1111", "b5 + b6"},
  }};
  const AlgebraTable t(f, skryabin_labels());
  std::vector<LabeledVector> out;
  for (const auto& [label, expr] : rows) out.push_back({label, parse_sum(t, expr)});
  return out;
}

/// The printed multiplication table in the e_alpha basis: ([a, b], c) with c = "0" for zero.
inline std::vector<std::array<std::string, 3>> printed_thin_table() {
  static constexpr std::array<const char*, 14> rows = {
      "e0011 e0010 e0101 e0100 0 0 e1001 0 e1011 e1010 e1101 e1100 e1111 0",
      "e0001 e0110 e0111 e0100 0 0 e1011 0 e1001 e1110 e1111 e1100 0",
      "e0111 e0110 e0101 0 e1011 e1010 e1001 0 0 e1110 e1101 0",
      "0 e0010 e0011 e1100 e1101 e1110 0 e1000 e1001 0 e1011",
      "e0011 e0010 0 e1100 e1111 e1110 0 e1000 e1011 e1010",
      "e0001 e1110 e1111 e1100 e1101 0 0 e1000 e1001",
      "0 0 0 0 e1011 e1010 e1001 0",
      "e0001 0 e0011 e0100 0 e0110 0",
      "e0011 e0010 e0101 e0100 0 0",
      "e0001 e0110 e0111 e0100 0",
      "e0111 e0110 e0101 0",
      "e0001 e0010 e0011",
      "0 e0010",
      "e0001",
  };
  const auto label = [](std::size_t i) {
    std::string s = "e";
    for (int b = 3; b >= 0; --b) s.push_back(((i + 1) >> b & 1u) ? '1' : '0');
    return s;
  };
  std::vector<std::array<std::string, 3>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::istringstream in(rows[r]);
    std::string entry;
    std::size_t c = r + 1;
    while (in >> entry) out.push_back({label(r), label(c++), entry});
    if (c != 15) throw Error(ErrorKind::Validation, "printed thin table row " + label(r) + " has wrong length");
  }
  return out;
}

enum class CentralizerBasis { Printed, Corrected };

/// Basis of the centralizer in L of b1 + b3 + b1^[2]. The printed list has
/// b2 + c3 + c4, which does not commute with h; b2 + b3 + c4 does.
inline std::vector<Vector> hamiltonian_centralizer(Field f = Field::gf2(), CentralizerBasis which = CentralizerBasis::Corrected) {
  const AlgebraTable t(f, skryabin_labels());
  const char* second = which == CentralizerBasis::Printed ? "b2 + c3 + c4" : "b2 + b3 + c4";
  std::vector<Vector> out;
  for (const char* e : {"b1 + b3", second, "b4 + b6", "b5 + b6 + c5", "b7 + b9", "c1 + c3", "d"})
    out.push_back(parse_sum(t, e));
  return out;
}

/// The printed invariant subspaces, in listing order.
inline std::vector<std::pair<std::string, Subspace>> printed_invariant_subspaces(Field f = Field::gf2()) {
  static constexpr std::array<std::array<const char*, 2>, 21> rows = {{
      {"<c2>", "c2"},
      {"<c4>", "c4"},
      {"<c5>", "c5"},
      {"<b5,c2>", "b5 c2"},
      {"<b8,c2>", "b8 c2"},
      {"V4", "b2 b5 b8 c2"},
      {"V5", "b8 c2 c3 c4 c5"},
      {"V6", "b2 b3 b5 b8 c2 c4"},
      {"V6'", "b5 b6 b8 c2 c4 c5"},
      {"V6''", "b5 b8 b9 c2 c4 c5"},
      {"V7", "b5 b6 b8 b9 c2 c4 c5"},
      {"V7'", "b5 b8 b9 c2 c3 c4 c5"},
      {"V8", "b2 b3 b5 b6 b8 c2 c4 c5"},
      {"V8'", "b2 b5 b6 b8 b9 c2 c4 c5"},
      {"V8''", "b2 b5 b6 b8 c2 c3 c4 c5"},
      {"V9", "b2 b3 b5 b6 b8 b9 c2 c4 c5"},
      {"V9'", "b2 b5 b6 b8 b9 c2 c3 c4 c5"},
      {"V11", "b2 b3 b4 b5 b6 b8 c1 c2 c3 c4 c5"},
      {"V11'", "b2 b3 b5 b6 b8 b9 c1 c2 c3 c4 c5"},
      {"V11''", "b2 b3 b5 b6 b8 b9 c2 c3 c4 c5 d"},
      {"V12", "b2 b3 b4 b5 b6 b8 b9 c1 c2 c3 c4 c5"},
  }};
  const AlgebraTable t(f, skryabin_labels());
  std::vector<std::pair<std::string, Subspace>> out;
  for (const auto& [name, span] : rows) {
    Subspace s(f, t.dim());
    std::istringstream in(span);
    std::string l;
    while (in >> l) s.insert(t.basis(l));
    out.emplace_back(name, std::move(s));
  }
  return out;
}

}  // namespace skry
