#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "skry/skry.hpp"

using namespace skry;

namespace {

struct Target {
  ParsedAlgebra algebra;
  std::size_t base_dim = 0;  // L sits in the first base_dim coordinates
  bool skryabin = false;
};

const std::vector<std::string> kBuiltins = {"skryabin", "skryabin-env", "semisimple", "sl2-char2"};

Target load(const std::string& name, Field f, Felt beta = Felt(0), Felt delta = Felt(0)) {
  if (name == "skryabin") {
    AlgebraTable t = skryabin_table({beta, delta, f});
    const std::size_t n = t.dim();
    return {{std::move(t), std::nullopt}, n, beta.is_zero() && delta.is_zero() && f.is_prime()};
  }
  if (name == "skryabin-env") {
    RestrictedAlgebra r = skryabin_envelope(f);
    return {{std::move(r.base), std::move(r.squares)}, 15, false};
  }
  if (name == "semisimple") {
    AlgebraTable t = semisimple_form(f).table;
    const std::size_t n = t.dim();
    return {{std::move(t), std::nullopt}, n, false};
  }
  if (name == "sl2-char2") {
    AlgebraTable t = sl2_char2(f);
    return {{std::move(t), std::nullopt}, 3, false};
  }
  ParsedAlgebra a = parse_algebra_file(name);
  const std::size_t n = a.table.dim();
  return {std::move(a), n, false};
}

// the algebra with a 2-map: itself if restricted, else its 2-envelope (L first)
RestrictedAlgebra restricted_of(const Target& t) {
  if (t.algebra.restricted()) return t.algebra.as_restricted();
  if (t.skryabin) return skryabin_envelope(t.algebra.table.field());
  return two_envelope(t.algebra.table).algebra;
}

std::string describe(const AlgebraTable& t, const Vector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (v[k].bits != 1) s += to_hex(v[k]) + "*";
    s += t.labels()[k];
  }
  return s.empty() ? "0" : s;
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_hex(m(i, j));
    out << '\n';
  }
}

int cmd_check(const std::string& path) {
  const ParsedAlgebra a = parse_algebra_file(path);
  std::cout << "valid " << (a.restricted() ? "restricted " : "") << "Lie algebra " << a.table.name() << ", dim " << a.table.dim()
            << " over " << a.table.field().name() << '\n';
  return 0;
}

int cmd_report(const Target& t, bool all, const std::vector<std::string>& ids, bool json, bool timings) {
  const std::vector<std::string> selected = all ? std::vector<std::string>{} : ids;
  const auto results = t.skryabin ? run_skryabin_checks(selected, &std::cerr) : run_generic_checks(t.algebra, selected, &std::cerr);
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json e{{"id", r.id},         {"pass", r.pass()},       {"expected", r.expected},
                               {"computed", r.computed}, {"correct", r.correct}, {"target_seconds", r.target}};
      if (!r.note.empty()) e["note"] = r.note;
      if (timings) e["elapsed_seconds"] = r.elapsed;
      j.push_back(std::move(e));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    write_results(std::cout, results, timings);
  }
  return all_pass(results) ? 0 : 1;
}

int cmd_tori(const Target& t, int dim, bool list) {
  const RestrictedAlgebra r = restricted_of(t);
  if (!r.field().is_prime()) throw Error(ErrorKind::FieldMismatch, "tori: needs gf2");
  const TorusEnumerator e(to_bits(r));
  std::cerr << "enumerating tori of dimension " << dim << std::endl;
  std::cout << "toral elements " << e.torals().size() << '\n';
  std::cout << "tori of dim " << dim << ": " << e.count(dim) << " subspaces, " << e.toral_bases(dim) << " unordered toral bases\n";
  if (list)
    e.for_each(dim, [&](const std::vector<bits::Mask>& basis) {
      std::string line;
      for (bits::Mask m : basis) line += (line.empty() ? "" : " | ") + describe(r.base, bits::to_vector(m, r.dim()));
      std::cout << line << '\n';
      return true;
    });
  return 0;
}

int cmd_sandwich(const Target& t) {
  const AlgebraTable& l = t.algebra.table;
  const Subspace s = sandwich_subalgebra(l);
  std::cout << "sandwich subalgebra dim " << s.dim() << '\n';
  for (const Vector& v : s.basis()) std::cout << "  " << describe(l, v) << '\n';
  std::cout << "sandwich derivations dim " << sandwich_derivations(l).dim() << '\n';
  if (center(l).dim() == 0) {
    const RestrictedAlgebra r = restricted_of(t);
    const std::size_t base = t.algebra.restricted() ? t.base_dim : l.dim();
    const WeakSandwichSet w = weak_sandwich_set(r.base, base);
    std::cout << "weak sandwich set (" << w.method << ") spans dim " << w.span.dim() << (w.is_subspace ? ", a subspace" : ", not a subspace")
              << (w.implies_ad_cube ? ", [[L,x],x] = 0 on it" : "") << '\n';
    for (const Vector& v : w.span.basis()) std::cout << "  " << describe(r.base, v) << '\n';
  }
  return 0;
}

int cmd_autos(const Target& t, Field f, bool enumerate, bool closure, bool relations, std::uint64_t budget) {
  if (!enumerate && !closure && !relations) throw Error(ErrorKind::InvalidArgument, "autos: pick --enumerate, --closure or --relations");
  if (relations) {
    bool ok = true;
    for (const auto& r : verify_relations(f)) {
      std::cout << (r.ok() ? "ok    " : "FAIL  ") << r.name << "  (" << r.instances << " instances, " << r.failures << " failures)\n";
      ok = ok && r.ok();
    }
    if (!ok) return 1;
  }
  if (closure) {
    std::vector<LinearMap> exps, all;
    for (AutoKind k : {AutoKind::ExpC2, AutoKind::ExpC4, AutoKind::ExpC5, AutoKind::ExpC3sq})
      for (Felt a : f.elements())
        if (!a.is_zero()) exps.push_back(family_auto(k, a, f));
    all = exps;
    for (AutoKind k : {AutoKind::Phi, AutoKind::Psi, AutoKind::Theta})
      for (Felt a : f.elements())
        if (!a.is_zero()) all.push_back(family_auto(k, a, f));
    for (Felt l : f.elements())
      if (!l.is_zero() && !(l == Field::one())) all.push_back(family_auto(AutoKind::Delta, l, f));
    std::cerr << "closing generators over " << f.name() << std::endl;
    std::cout << "exp group order " << group_closure(exps).order() << '\n';
    std::cout << "Aut0 order " << group_closure(all).order() << '\n';
  }
  if (enumerate) {
    std::cerr << "searching automorphisms of " << t.algebra.table.name() << std::endl;
    const AutomorphismSearchResult s = automorphism_search(t.algebra.table, {}, budget);
    std::cout << "automorphisms " << s.order << " (" << s.nodes << " search nodes)\n";
  }
  return 0;
}

int cmd_decomp(const Target& t, const std::string& torus_file) {
  const RestrictedAlgebra r = restricted_of(t);
  const std::size_t l = t.algebra.restricted() ? t.base_dim : t.algebra.table.dim();
  const std::vector<Vector> torus = parse_vectors_file(torus_file, r.field(), r.dim());
  const RootDecomposition d = root_decomposition(r, l, torus);
  const AlgebraTable& base = r.base;
  std::cout << "zero weight dim " << d.zero_weight.dim() << '\n';
  for (const auto& [alpha, w] : d.roots) {
    std::cout << root_label(alpha, torus.size()) << "  dim " << w.dim() << '\n';
    for (const Vector& v : w.basis()) std::cout << "  " << describe(base, detail::lift(v, r.dim())) << '\n';
  }
  const ThinCertificate c = is_thin(d);
  std::cout << (c.thin ? "thin: " : "not thin: ") << c.reason << '\n';
  if (c.thin) {
    AlgebraTable l_table(r.field(), std::vector<std::string>(base.labels().begin(), base.labels().begin() + static_cast<std::ptrdiff_t>(l)));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j) {
        Vector v(r.field(), l);
        for (std::size_t k = 0; k < l; ++k) v.set(k, base.basis_product(i, j)[k]);
        l_table.set_product(i, j, v);
      }
    write_algebra(std::cout, thin_table(l_table, d));
  }
  return 0;
}

int cmd_grading(const Target& t) {
  const AlgebraTable& l = t.algebra.table;
  const UniversalGrading u = universal_grading_group(l);
  std::cout << "universal group " << u.group.describe() << '\n';
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::cout << "  " << l.labels()[i] << "  (";
    for (std::size_t k = 0; k < u.grading.degrees[i].size(); ++k) std::cout << (k ? ", " : "") << u.grading.degrees[i][k];
    std::cout << ")\n";
  }
  const GradingCheck c = check_grading(l, u.grading);
  std::cout << (c.ok ? "grading valid\n" : "grading invalid: " + c.violation + "\n");
  return c.ok ? 0 : 1;
}

int cmd_iso(const std::string& a, const std::string& b, std::uint64_t budget) {
  const ParsedAlgebra pa = parse_algebra_file(a), pb = parse_algebra_file(b);
  const IsoResult r = is_isomorphic(pa.table, pb.table, budget);
  if (!r.witness) {
    std::cout << "not isomorphic: " << r.reason << '\n';
    return 1;
  }
  std::cout << "isomorphic; columns are the images of the basis of " << pa.table.name() << '\n';
  print_matrix(std::cout, *r.witness);
  return 0;
}

int cmd_export(const Target& t, const std::string& out) {
  std::ofstream file(out);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
  if (t.algebra.restricted()) write_algebra(file, t.algebra.as_restricted());
  else write_algebra(file, t.algebra.table);
  std::cerr << "wrote " << out << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skry: the Skryabin algebra and friends in characteristic 2"};
  app.require_subcommand(1);
  std::string field_name = "gf2";
  std::string beta_hex = "0", delta_hex = "0";
  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", field_name, "gf2 or gf2^k");
    c->add_option("--beta", beta_hex, "skryabin parameter beta (hex)");
    c->add_option("--delta", delta_hex, "skryabin parameter delta (hex)");
  };
  std::string target, path, path2, torus_file, output;
  std::vector<std::string> ids;
  bool all = false, json = false, timings = false, list = false, enumerate = false, closure = false, relations = false;
  int dim = 1;
  std::uint64_t budget = 100'000'000;
  const std::string target_help = "built-in (skryabin, skryabin-env, semisimple, sl2-char2) or a table file";

  auto* check = app.add_subcommand("check", "parse and validate a table file");
  check->add_option("file", path)->required();

  auto* report = app.add_subcommand("report", "run named checks");
  report->add_option("target", target, target_help)->required();
  report->add_flag("--all", all, "every check for the target");
  report->add_option("--check", ids, "check ids");
  report->add_flag("--json", json, "JSON output");
  report->add_flag("--timings", timings, "include elapsed times");
  add_field(report);

  auto* tori = app.add_subcommand("tori", "count tori over GF(2)");
  tori->add_option("target", target, target_help)->required();
  tori->add_option("--dim", dim, "torus dimension")->required();
  tori->add_flag("--list", list, "print a basis of each torus");

  auto* sandwich = app.add_subcommand("sandwich", "sandwich subalgebra, derivations and weak sandwich set");
  sandwich->add_option("target", target, target_help)->required();

  auto* autos = app.add_subcommand("autos", "automorphisms");
  autos->add_option("target", target, target_help)->required();
  autos->add_flag("--enumerate", enumerate, "exhaustive search");
  autos->add_flag("--closure", closure, "close the family generators");
  autos->add_flag("--relations", relations, "check the family relations");
  autos->add_option("--budget", budget, "search node budget");
  add_field(autos);

  auto* decomp = app.add_subcommand("decomp", "root decomposition under a torus");
  decomp->add_option("target", target, target_help)->required();
  decomp->add_option("--torus", torus_file, "torus vectors, one per line, in envelope coordinates")->required();
  add_field(decomp);

  auto* grading = app.add_subcommand("grading", "universal grading group of the basis grading");
  grading->add_option("target", target, target_help)->required();
  add_field(grading);

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("a", path, "first table file")->required();
  iso->add_option("b", path2, "second table file")->required();
  iso->add_option("--budget", budget, "search node budget");

  auto* exp = app.add_subcommand("export", "write a built-in algebra as a table file");
  exp->add_option("name", target, "skryabin, skryabin-env, semisimple or sl2-char2")->required();
  exp->add_option("-o,--output", output, "output file")->required();
  add_field(exp);

  CLI11_PARSE(app, argc, argv);

  try {
    const Field f = Field::parse(field_name);
    auto felt = [&](const std::string& hex) {
      const Felt v(static_cast<std::uint32_t>(std::stoul(hex, nullptr, 16)));
      if (!f.contains(v)) throw Error(ErrorKind::InvalidArgument, "parameter " + hex + " outside " + f.name());
      return v;
    };
    auto tgt = [&] { return load(target, f, felt(beta_hex), felt(delta_hex)); };
    if (*check) return cmd_check(path);
    if (*report) return cmd_report(tgt(), all || ids.empty(), ids, json, timings);
    if (*tori) return cmd_tori(tgt(), dim, list);
    if (*sandwich) return cmd_sandwich(tgt());
    if (*autos) return cmd_autos(tgt(), f, enumerate, closure, relations, budget);
    if (*decomp) return cmd_decomp(tgt(), torus_file);
    if (*grading) return cmd_grading(tgt());
    if (*iso) return cmd_iso(path, path2, budget);
    if (*exp) {
      if (std::find(kBuiltins.begin(), kBuiltins.end(), target) == kBuiltins.end())
        throw Error(ErrorKind::InvalidArgument, "unknown built-in '" + target + "'");
      return cmd_export(tgt(), output);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
