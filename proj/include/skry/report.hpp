#pragma once

// Named checks with pinned expectations, run against a lazily built shared
// context. Check ids are stable; the acceptance binary and the CLI use them.

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "skry/autos.hpp"
#include "skry/catalog.hpp"
#include "skry/format.hpp"
#include "skry/gradings.hpp"
#include "skry/sandwich.hpp"
#include "skry/skryabin.hpp"
#include "skry/tori.hpp"

namespace skry {

struct CheckResult {
  std::string id;
  std::string expected;
  std::string computed;
  bool correct = false;
  double elapsed = 0;        ///< seconds
  double target = 0;         ///< seconds; 0 = none
  std::string note;
  bool within_target() const { return target <= 0 || elapsed <= target; }
  bool pass() const { return correct && within_target(); }
};

struct CheckOutcome {
  std::string expected;
  std::string computed;
  bool correct = false;
  std::string note;
};

class ReportContext;

struct CheckSpec {
  std::string id;
  std::string title;
  double target = 0;
  std::function<CheckOutcome(ReportContext&)> run;
};

/// Shared, lazily computed data for the Skryabin checks (all over GF(2)).
class ReportContext {
 public:
  explicit ReportContext(std::ostream* progress = nullptr) : progress_(progress) {}

  void say(const std::string& s) const {
    if (progress_) *progress_ << s << std::endl;
  }

  const AlgebraTable& algebra() { return get(l_, [] { return skryabin_table(); }); }
  const RestrictedAlgebra& envelope() { return get(env_, [] { return skryabin_envelope(); }); }
  const Envelope& computed_envelope() {
    return get(computed_env_, [&] { return two_envelope(algebra()); });
  }
  const Subspace& derivations() {
    return get(der_, [&] { return derivation_algebra(algebra()); });
  }
  const TorusEnumerator& tori() {
    return get(tori_, [&] {
      say("enumerating toral elements of the envelope");
      return TorusEnumerator(to_bits(envelope()));
    });
  }
  const std::vector<std::vector<bits::Mask>>& four_tori() {
    return get(four_, [&] { return tori().list(4); });
  }
  const FiniteGroup& aut_closure() {
    return get(closure_, [&] {
      say("closing the automorphism generators");
      std::vector<LinearMap> gens;
      for (AutoKind k : {AutoKind::ExpC2, AutoKind::ExpC4, AutoKind::ExpC5, AutoKind::ExpC3sq, AutoKind::Phi, AutoKind::Psi,
                         AutoKind::Theta})
        gens.push_back(family_auto(k, Field::one()));
      return group_closure(gens);
    });
  }
  const AutomorphismSearchResult& aut_search() {
    return get(search_, [&] {
      say("searching all automorphisms (no catalog pruning)");
      return automorphism_search(algebra());
    });
  }
  const NamedSubspaceCatalog& catalog() {
    return get(catalog_, [&] { return invariant_subspace_recipes(algebra(), envelope()); });
  }

 private:
  template <class T, class Make>
  const T& get(std::optional<T>& slot, Make make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  std::ostream* progress_;
  std::optional<AlgebraTable> l_;
  std::optional<RestrictedAlgebra> env_;
  std::optional<Envelope> computed_env_;
  std::optional<Subspace> der_;
  std::optional<TorusEnumerator> tori_;
  std::optional<std::vector<std::vector<bits::Mask>>> four_;
  std::optional<FiniteGroup> closure_;
  std::optional<AutomorphismSearchResult> search_;
  std::optional<NamedSubspaceCatalog> catalog_;
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string str(std::uint64_t v) { return std::to_string(v); }

inline Subspace label_span(const AlgebraTable& t, std::initializer_list<const char*> labels) {
  Subspace s(t.field(), t.dim());
  for (const char* l : labels) s.insert(t.basis(l));
  return s;
}

inline std::string span_labels(const AlgebraTable& t, const Subspace& s) {
  std::vector<std::string> parts;
  for (const Vector& v : s.basis()) {
    std::vector<std::string> terms;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) terms.push_back(v[k].bits == 1 ? t.labels()[k] : to_hex(v[k]) + "*" + t.labels()[k]);
    parts.push_back(join(terms, "+"));
  }
  return "<" + join(parts, ",") + ">";
}

/// The printed envelope acts faithfully on L by derivations: restriction to L
/// is injective, agrees with ad on L, preserves brackets and the 2-map, and its
/// image is `der_span`.
inline std::string envelope_realization_error(const RestrictedAlgebra& env, const AlgebraTable& t, const Subspace& der_span) {
  const std::size_t l = t.dim();
  const Field f = t.field();
  std::vector<LinearMap> d;
  for (std::size_t k = 0; k < env.dim(); ++k) d.push_back(ad_on_base(env, l, env.base.basis(k)));
  for (std::size_t k = 0; k < l; ++k)
    if (!(d[k] == ad_matrix(t, t.basis(k)))) return "restriction of " + t.labels()[k] + " is not its ad";
  auto rep = [&](const Vector& v) {
    LinearMap m(f, l, l);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) m = m + d[k].scaled(v[k]);
    return m;
  };
  Subspace image(f, l * l);
  for (const LinearMap& m : d) image.insert(flatten(m));
  if (image.dim() != env.dim()) return "restriction to L is not injective";
  if (!(image == der_span)) return "image differs from the computed span";
  for (std::size_t p = 0; p < env.dim(); ++p) {
    if (!(rep(env.squares[p]) == d[p] * d[p])) return "2-map differs at " + env.base.labels()[p];
    for (std::size_t q = p + 1; q < env.dim(); ++q)
      if (!(rep(env.base.basis_product(p, q)) == d[p] * d[q] + d[q] * d[p]))
        return "bracket differs at [" + env.base.labels()[p] + "," + env.base.labels()[q] + "]";
  }
  return {};
}

inline CheckOutcome jacobi_all_params(ReportContext&) {
  std::size_t tables = 0, valid = 0;
  for (int k : {1, 2}) {
    const Field f(k);
    for (Felt b : f.elements())
      for (Felt d : f.elements()) {
        ++tables;
        if (validate(skryabin_table({b, d, f})).ok()) ++valid;
      }
  }
  return {"20/20 tables valid", str(valid) + "/" + str(tables) + " tables valid", valid == 20 && tables == 20, ""};
}

inline CheckOutcome iso_family(ReportContext&) {
  const Field f(2);
  std::size_t one = 0, two = 0, composed = 0, pairs = 0;
  std::set<std::string> variants;
  for (Felt b : f.elements()) {
    const AlgebraTable lb0 = skryabin_table({b, Felt(0), f});
    const auto res = resolve_lemma_two(b, f);
    if (res) {
      ++two;
      variants.insert(to_string(res->variant));
    }
    for (Felt d : f.elements()) {
      ++pairs;
      const AlgebraTable lbd = skryabin_table({b, d, f});
      if (is_isomorphism(lb0, lbd, lemma_basis_change(1, d, f))) ++one;
      const auto iso = family_isomorphism(b, d, f);
      if (iso && is_isomorphism(skryabin_table(f), lbd, *iso)) ++composed;
    }
  }
  std::string note = "second basis change used " + detail::join({variants.begin(), variants.end()}, ", ");
  const Field f8(3);
  std::size_t sq8 = 0;
  for (Felt b : f8.elements()) {
    const auto r = resolve_lemma_two(b, f8);
    if (r && r->variant.coefficient == LemmaTwoCoefficient::SqrtBeta) ++sq8;
  }
  note += "; over gf2^3 " + str(sq8) + "/8 parameters need sqrt(beta)";
  return {"GF(4): lemma 1 16/16, lemma 2 4/4, composite 16/16",
          "GF(4): lemma 1 " + str(one) + "/16, lemma 2 " + str(two) + "/4, composite " + str(composed) + "/" + str(pairs),
          one == 16 && two == 4 && composed == 16 && pairs == 16, note};
}

inline CheckOutcome env_dim_19(ReportContext& c) {
  const Envelope& e = c.computed_envelope();
  const std::string err = envelope_realization_error(c.envelope(), c.algebra(), e.span);
  return {"dim 19; printed envelope realized as derivations",
          "dim " + str(e.algebra.dim()) + "; " + (err.empty() ? "printed envelope realized as derivations" : err),
          e.algebra.dim() == 19 && err.empty() && validate(e.algebra).ok() && validate(c.envelope()).ok(), ""};
}

inline CheckOutcome der_dim_19(ReportContext& c) {
  const Subspace& der = c.derivations();
  const bool same = der == c.computed_envelope().span;
  return {"dim Der = 19, Der = envelope", "dim Der = " + str(der.dim()) + (same ? ", Der = envelope" : ", Der != envelope"),
          der.dim() == 19 && same, ""};
}

inline CheckOutcome sandwich_3(ReportContext& c) {
  const AlgebraTable& t = c.algebra();
  const Subspace s = sandwich_subalgebra(t);
  const bool abelian = bracket_span(t, s, s).dim() == 0;
  const Subspace want = label_span(t, {"c2", "c4", "c5"});
  const WeakSandwichSet w = weak_sandwich_set(c.envelope().base, t.dim());
  const Subspace wwant = label_span(c.envelope().base, {"c2", "c4", "c5", "c3^[2]"});
  return {"S = <c2,c4,c5> abelian; weak set = <c2,c4,c5,c3^[2]>",
          "S = " + span_labels(t, s) + (abelian ? " abelian" : " not abelian") + "; weak set = " + span_labels(c.envelope().base, w.span) +
              (w.is_subspace ? "" : " (not a subspace)"),
          s == want && abelian && w.span == wwant && w.is_subspace, "weak set by " + w.method + " scan"};
}

inline CheckOutcome sandwich_der_4(ReportContext& c) {
  const AlgebraTable& t = c.algebra();
  const Subspace sd = sandwich_derivations(t, c.derivations());
  const RestrictedAlgebra& env = c.envelope();
  const Vector c3sq = flatten(ad_on_base(env, t.dim(), env.base.basis("c3^[2]")));
  Subspace inner(t.field(), t.dim() * t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) inner.insert(flatten(ad_matrix(t, t.basis(i))));
  const bool has = sd.contains(c3sq), outer = !inner.contains(c3sq);
  return {"dim 4, contains outer ad c3^[2]",
          "dim " + str(sd.dim()) + (has ? ", contains " : ", lacks ") + (outer ? "outer" : "inner") + " ad c3^[2]",
          sd.dim() == 4 && has && outer, ""};
}

inline CheckOutcome torus_census(ReportContext& c) {
  const TorusEnumerator& e = c.tori();
  std::vector<std::string> bases, spaces;
  std::vector<std::uint64_t> b;
  for (int d = 2; d <= 5; ++d) {
    c.say("counting tori of dimension " + std::to_string(d));
    b.push_back(e.toral_bases(d));
    bases.push_back(str(b.back()));
    spaces.push_back(str(e.count(d)));
  }
  const bool ok = e.torals().size() == 384 && b == std::vector<std::uint64_t>{6144, 21504, 26880, 0};
  return {"384 toral; tori dim 2/3/4/5: 6144/21504/26880/0",
          str(e.torals().size()) + " toral; tori dim 2/3/4/5: " + join(bases, "/"), ok,
          "tori counted as unordered toral bases; distinct subspaces " + join(spaces, "/")};
}

inline CheckOutcome centralizer_census_check(ReportContext& c) {
  c.say("computing 384 toral centralizers");
  const CentralizerCensus cc = centralizer_census(c.algebra(), c.envelope());
  std::vector<std::string> dims, ranks;
  for (const auto& [d, n] : cc.by_dim) dims.push_back(str(n) + " of dim " + str(d));
  for (const auto& [r, n] : cc.simple_by_rank) ranks.push_back(str(n) + " of rank " + std::to_string(r));
  const bool ok = cc.by_dim == std::map<std::size_t, std::size_t>{{7, 384}} && cc.central_simple == 240 &&
                  cc.simple_by_rank == std::map<int, std::size_t>{{2, 48}, {3, 192}};
  return {"384 of dim 7; 240 central simple: 48 of rank 2, 192 of rank 3",
          join(dims, ", ") + "; " + str(cc.central_simple) + " central simple: " + join(ranks, ", "), ok,
          str(cc.simple) + " simple in total"};
}

inline CheckOutcome cartan_all(ReportContext& c) {
  const auto& tori = c.four_tori();
  const bits::BitAlgebra& b = c.tori().algebra();
  std::size_t cartan = 0;
  for (const auto& t : tori)
    if (is_self_normalizing_bits(b, t)) ++cartan;
  return {"every 4-torus self-normalizing", str(cartan) + "/" + str(tori.size()) + " distinct 4-tori self-normalizing",
          cartan == tori.size() && !tori.empty(), "each of the 26880 toral bases spans one of these"};
}

inline CheckOutcome rank_4(ReportContext& c) {
  const ToralRank tr = toral_rank(c.envelope());
  const RestrictedAlgebra& env = c.envelope();
  const std::vector<Vector> t = canonical_torus();
  bool toral = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(square(env, t[i]) == t[i])) toral = false;
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!env.base.product(t[i], t[j]).is_zero()) toral = false;
  }
  const Subspace ts = Subspace::span(Field::gf2(), env.dim(), t);
  const bool cartan = ts.dim() == 4 && is_cartan(env.base, ts);
  const int computed_rank = toral_rank(c.algebra()).rank;
  return {"toral rank 4; printed torus is Cartan",
          "toral rank " + std::to_string(tr.rank) + " (computed envelope " + std::to_string(computed_rank) + "); printed torus " +
              (toral ? "" : "not toral, ") + (cartan ? "is Cartan" : "is not Cartan"),
          tr.rank == 4 && computed_rank == 4 && toral && cartan, ""};
}

inline CheckOutcome thin_all(ReportContext& c) {
  const auto& tori = c.four_tori();
  const bits::BitAlgebra& b = c.tori().algebra();
  const std::size_t l = c.algebra().dim();
  std::size_t thin = 0;
  for (const auto& t : tori)
    if (is_thin_bits(b, l, t)) ++thin;
  const RootDecomposition d = root_decomposition(c.envelope(), l, canonical_torus());
  std::vector<std::pair<std::string, Vector>> printed;
  for (const auto& lv : thin_basis()) printed.emplace_back(lv.label, lv.vector);
  const auto pi = thin_label_permutation(d, printed);
  std::size_t entries = 0, agree = 0;
  if (pi) {
    // printed label -> root, through the eigenvalue correspondence
    auto root = [&](const std::string& label) {
      std::uint32_t a = 0;
      for (std::size_t j = 0; j < pi->size(); ++j)
        if (label[j + 1] == '1') a |= 1u << (*pi)[j];
      return a;
    };
    std::map<std::uint32_t, Vector> chosen;
    for (const auto& [label, v] : printed) chosen.emplace(root(label), v);
    const AlgebraTable tt = thin_table(c.algebra(), d, chosen);
    for (const auto& [x, y, z] : printed_thin_table()) {
      ++entries;
      const Vector& p = tt.basis_product(root(x) - 1, root(y) - 1);
      if (z == "0" ? p.is_zero() : p == tt.basis(root(z) - 1)) ++agree;
    }
  }
  std::string perm;
  if (pi)
    for (std::size_t j : *pi) perm += std::to_string(j + 1);
  return {"all 4-tori thin; printed table 105/105",
          str(thin) + "/" + str(tori.size()) + " distinct 4-tori thin; printed table " + str(agree) + "/" + str(entries) +
              (pi ? "" : "; no label correspondence"),
          thin == tori.size() && !tori.empty() && is_thin(d).thin && pi && agree == 105 && entries == 105,
          pi ? "label position j <-> torus generator " + perm : ""};
}

inline CheckOutcome aut_relations(ReportContext& c) {
  std::vector<std::string> parts;
  bool ok = true;
  for (int k : {1, 2, 3}) {
    const Field f(k);
    c.say("relations over " + f.name());
    std::uint64_t inst = 0, fail = 0;
    const auto rel = verify_relations(f);
    for (const auto& r : rel) {
      inst += r.instances;
      fail += r.failures;
    }
    ok = ok && fail == 0;
    parts.push_back(f.name() + " " + str(rel.size()) + " relations " + str(inst) + " instances " + str(fail) + " failures");
  }
  return {"0 failures over gf2, gf2^2, gf2^3", join(parts, "; "), ok, ""};
}

inline CheckOutcome exp_order_16(ReportContext&) {
  std::vector<LinearMap> gens;
  for (AutoKind k : {AutoKind::ExpC2, AutoKind::ExpC4, AutoKind::ExpC5, AutoKind::ExpC3sq}) gens.push_back(family_auto(k, Field::one()));
  const FiniteGroup g = group_closure(gens);
  return {"16", str(g.order()), g.order() == 16, ""};
}

inline CheckOutcome aut_order_128(ReportContext& c) {
  const FiniteGroup& g = c.aut_closure();
  const AutomorphismSearchResult& s = c.aut_search();
  std::size_t shared = 0;
  for (const auto& m : s.automorphisms)
    if (g.contains(m)) ++shared;
  return {"closure 128; search 128", "closure " + str(g.order()) + "; search " + str(s.order) + " (" + str(shared) + " in closure)",
          g.order() == 128 && s.order == 128 && shared == 128, str(s.nodes) + " search nodes"};
}

inline CheckOutcome invariant_catalog(ReportContext& c) {
  const NamedSubspaceCatalog& cat = c.catalog();
  const auto& autos = c.aut_search().automorphisms;
  std::size_t match = 0, fixed = 0;
  std::vector<std::string> notes, bad;
  for (const auto& e : cat.entries) {
    if (e.matches()) ++match;
    else bad.push_back(e.name);
    bool all = !autos.empty();
    for (const auto& m : autos)
      if (!(map_subspace(m, e.printed) == e.printed)) {
        all = false;
        break;
      }
    if (all) ++fixed;
    if (!e.note.empty()) notes.push_back(e.name + " by " + e.recipe + " (" + e.note + ")");
  }
  std::string computed = str(match) + "/" + str(cat.entries.size()) + " recipes match; " + str(fixed) + "/" +
                         str(cat.entries.size()) + " fixed by " + str(autos.size()) + " automorphisms";
  if (!bad.empty()) computed += "; mismatched " + join(bad, ",");
  return {"21/21 recipes match; 21/21 fixed by 128 automorphisms", computed,
          match == 21 && fixed == 21 && cat.entries.size() == 21 && autos.size() == 128, join(notes, "; ")};
}

inline CheckOutcome universal_group(ReportContext& c) {
  const AlgebraTable& t = c.algebra();
  const UniversalGrading u = universal_grading_group(t);
  const bool own = check_grading(t, u.grading).ok;
  const Grading z = grading_from_diagonal();
  const bool zok = check_grading(t, z).ok;
  std::size_t mods = 0;
  for (long long n = 1; n <= 7; ++n)
    if (check_grading(t, reduce_grading_mod(z, n)).ok) ++mods;
  std::map<std::uint32_t, Vector> chosen;
  for (const auto& lv : thin_basis()) {
    std::uint32_t a = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (lv.label[i + 1] == '1') a |= 1u << i;
    chosen.emplace(a, lv.vector);
  }
  const AlgebraTable thin = thin_table(t, root_decomposition(c.envelope(), t.dim(), canonical_torus()), chosen);
  const bool tok = check_grading(thin, thin_grading(thin)).ok;
  const bool ok = u.group == AbelianGroup{1, {2}} && own && zok && mods == 7 && tok;
  return {"Z + Z/2; Z-grading, mod 1..7 and thin (Z/2)^4 gradings valid",
          u.group.describe() + "; Z-grading " + (zok ? "valid" : "invalid") + ", " + str(mods) + "/7 reductions valid, thin grading " +
              (tok ? "valid" : "invalid"),
          ok, ""};
}

inline CheckOutcome profile_skryabin(ReportContext& c) {
  const InvariantProfile p = invariant_profile(c.algebra());
  return {"(4, 384, 26880, 3)", to_string(p), p == InvariantProfile{4, 384, 26880, 3}, "N_m counts unordered toral bases"};
}

inline CheckOutcome semisimple_form_check(ReportContext&) {
  const SemisimpleForm s = semisimple_form();
  const bool valid = validate(s.table).ok();
  const bool ideal = ideal_closure(s.table, s.socle) == s.socle;
  const bool simple = is_simple(s.table);
  std::size_t autos = 0, match = 0, total = 0;
  for (int k : {1, 2, 3}) {
    const Field f(k);
    const SemisimpleForm sf = semisimple_form(f);
    for (Felt a : f.elements()) {
      ++total;
      const LinearMap m = semisimple_phi_auto(a, f);
      if (is_automorphism(sf.table, m)) ++autos;
      if (m == family_auto(AutoKind::ExpC4, a, f)) ++match;
    }
  }
  return {"valid dim 15; 12-dim ideal; not simple; phi(a) automorphisms equal to exp(a c4)",
          std::string(valid ? "valid" : "invalid") + " dim " + str(s.table.dim()) + "; " + str(s.socle.dim()) + "-dim " +
              (ideal ? "ideal" : "non-ideal") + "; " + (simple ? "simple" : "not simple") + "; phi(a) " + str(autos) + "/" + str(total) +
              " automorphisms, " + str(match) + "/" + str(total) + " equal to exp(a c4)",
          valid && s.table.dim() == 15 && s.socle.dim() == 12 && ideal && !simple && autos == total && match == total,
          "parameters over gf2, gf2^2, gf2^3"};
}

}  // namespace detail

/// The acceptance checks for the Skryabin algebra, in a fixed order.
inline const std::vector<CheckSpec>& skryabin_checks() {
  static const std::vector<CheckSpec> checks = {
      {"jacobi-all-params", "L(beta,delta) valid over GF(2) and GF(4)", 5, detail::jacobi_all_params},
      {"iso-family", "basis changes give L(beta,delta) = L(0,0) over GF(4)", 5, detail::iso_family},
      {"env-dim-19", "2-envelope has dim 19 and matches the printed table", 30, detail::env_dim_19},
      {"der-dim-19", "derivation algebra has dim 19 and equals the envelope", 30, detail::der_dim_19},
      {"sandwich-3", "sandwich subalgebra and weak sandwich set", 10, detail::sandwich_3},
      {"sandwich-der-4", "sandwich derivations", 10, detail::sandwich_der_4},
      {"torus-census", "toral elements and tori over GF(2)", 300, detail::torus_census},
      {"centralizer-census", "centralizers of toral elements", 600, detail::centralizer_census_check},
      {"cartan-all", "4-tori are self-normalizing", 300, detail::cartan_all},
      {"rank-4", "toral rank and the printed Cartan torus", 300, detail::rank_4},
      {"thin-all-4-tori", "thin root decompositions and the printed thin table", 300, detail::thin_all},
      {"aut-relations", "automorphism relations over GF(2), GF(4), GF(8)", 30, detail::aut_relations},
      {"exp-order-16", "group of sandwich exponentials", 600, detail::exp_order_16},
      {"aut-order-128", "automorphism group: closure and exhaustive search", 600, detail::aut_order_128},
      {"invariant-catalog", "invariant subspaces by recipe, fixed by all automorphisms", 120, detail::invariant_catalog},
      {"universal-group", "universal grading group and gradings", 5, detail::universal_group},
      {"profile-skryabin", "invariant profile", 600, detail::profile_skryabin},
      {"semisimple-form", "semisimple form and its automorphisms", 10, detail::semisimple_form_check},
  };
  return checks;
}

/// Runs one spec, catching errors into a failed result.
inline CheckResult run_check(const CheckSpec& spec, ReportContext& ctx) {
  ctx.say("[" + spec.id + "] " + spec.title);
  CheckResult r;
  r.id = spec.id;
  r.target = spec.target;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = spec.run(ctx);
    r.expected = std::move(o.expected);
    r.computed = std::move(o.computed);
    r.correct = o.correct;
    r.note = std::move(o.note);
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
    r.correct = false;
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << "[" << spec.id << "] " << (r.pass() ? "pass" : "FAIL") << " in " << r.elapsed << " s";
  if (!r.within_target()) s << " (target " << r.target << " s)";
  ctx.say(s.str());
  return r;
}

/// Selected Skryabin checks; empty `ids` means all. Unknown ids throw.
inline std::vector<CheckResult> run_skryabin_checks(const std::vector<std::string>& ids, std::ostream* progress = nullptr) {
  ReportContext ctx(progress);
  std::vector<CheckResult> out;
  for (const std::string& id : ids) {
    bool known = false;
    for (const auto& c : skryabin_checks()) known = known || c.id == id;
    if (!known) throw Error(ErrorKind::InvalidArgument, "unknown check '" + id + "'");
  }
  for (const auto& c : skryabin_checks()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    out.push_back(run_check(c, ctx));
  }
  return out;
}

/// Profile of an arbitrary algebra; a restricted algebra is used as its own envelope.
inline InvariantProfile invariant_profile(const ParsedAlgebra& a) {
  if (!a.restricted()) return invariant_profile(a.table);
  const ToralRank tr = toral_rank(a.as_restricted(), true);
  return {tr.rank, tr.toral_count, tr.maximal_bases, sandwich_subalgebra(a.table).dim()};
}

/// Checks for any algebra: `validate` and `profile` (no pinned expectation).
inline std::vector<CheckResult> run_generic_checks(const ParsedAlgebra& a, const std::vector<std::string>& ids,
                                                   std::ostream* progress = nullptr) {
  ReportContext ctx(progress);
  const std::vector<CheckSpec> specs = {
      {"validate", "Jacobi identity and 2-map axioms", 0,
       [&](ReportContext&) {
         const ValidationReport rep = a.restricted() ? validate(a.as_restricted()) : validate(a.table);
         return CheckOutcome{"valid", rep.ok() ? "valid" : "invalid", rep.ok(), ""};
       }},
      {"profile", "(toral rank, toral elements, maximal tori, sandwich dim)", 0,
       [&](ReportContext&) {
         if (!a.table.field().is_prime()) throw Error(ErrorKind::FieldMismatch, "profile needs an algebra over gf2");
         return CheckOutcome{"-", to_string(invariant_profile(a)), true, "no pinned value"};
       }},
  };
  for (const std::string& id : ids)
    if (id != "validate" && id != "profile") throw Error(ErrorKind::InvalidArgument, "unknown check '" + id + "' for this target");
  std::vector<CheckResult> out;
  for (const auto& s : specs)
    if (ids.empty() || std::find(ids.begin(), ids.end(), s.id) != ids.end()) out.push_back(run_check(s, ctx));
  return out;
}

inline bool all_pass(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass(); });
}

/// One line per check: status, id, computed value, and the expectation when it differs.
inline void write_results(std::ostream& out, const std::vector<CheckResult>& rs, bool timings = false) {
  for (const auto& r : rs) {
    out << (r.pass() ? "PASS" : "FAIL") << "  " << r.id << "  " << r.computed;
    if (!r.correct) out << "  [expected " << r.expected << "]";
    if (!r.within_target()) out << "  [over time target " << r.target << " s]";
    if (timings) {
      std::ostringstream s;
      s.precision(3);
      s << std::fixed << r.elapsed;
      out << "  (" << s.str() << " s)";
    }
    out << '\n';
    if (!r.note.empty()) out << "      " << r.note << '\n';
  }
}

}  // namespace skry
