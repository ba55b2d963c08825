#pragma once

// Text format for structure-constant tables:
//
//   algebra <name>
//   field gf2 | gf2^k
//   dim n
//   labels a b c ...
//   p i j  k:coeff k:coeff ...     [x_i, x_j] (1-based, i < j, hex coefficients)
//   s i  k:coeff ...               x_i^[2] (makes the algebra restricted)
//
// '#' starts a comment. Torus files hold one vector per line as dense hex
// coordinates.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skry/liealg.hpp"

namespace skry {

struct ParsedAlgebra {
  AlgebraTable table;
  std::optional<std::vector<Vector>> squares;

  bool restricted() const { return squares.has_value(); }
  RestrictedAlgebra as_restricted() const {
    if (!squares) throw Error(ErrorKind::InvalidArgument, table.name() + " has no 2-map");
    return RestrictedAlgebra{table, *squares};
  }
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

inline std::uint32_t parse_hex(const std::string& s, std::size_t line) {
  if (s.empty() || s.size() > 8) parse_fail(line, "bad coefficient '" + s + "'");
  std::uint32_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else parse_fail(line, "bad hex digit in '" + s + "'");
    v = v * 16 + static_cast<std::uint32_t>(d);
  }
  return v;
}

inline std::size_t parse_index(const std::string& s, std::size_t n, std::size_t line) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    parse_fail(line, "bad index '" + s + "'");
  }
  if (pos != s.size() || v < 1 || static_cast<std::size_t>(v) > n) parse_fail(line, "index '" + s + "' out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

inline Vector parse_terms(std::istringstream& in, Field f, std::size_t n, std::size_t line) {
  Vector v(f, n);
  std::string term;
  while (in >> term) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) parse_fail(line, "expected k:coeff, got '" + term + "'");
    const std::size_t k = parse_index(term.substr(0, colon), n, line);
    const std::uint32_t c = parse_hex(term.substr(colon + 1), line);
    if (!f.contains(Felt(c))) parse_fail(line, "coefficient " + term.substr(colon + 1) + " outside " + f.name());
    if (!v[k].is_zero()) parse_fail(line, "coordinate " + std::to_string(k + 1) + " given twice");
    v.set(k, Felt(c));
  }
  return v;
}

}  // namespace detail

/// Parses and validates; validation failures name the offending triple.
inline ParsedAlgebra parse_algebra(std::istream& in, bool validate_table = true) {
  std::string name = "algebra";
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::vector<std::string> labels;
  std::optional<AlgebraTable> table;
  std::optional<std::vector<Vector>> squares;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::string raw;
  std::size_t line = 0;
  auto ensure_table = [&] {
    if (table) return;
    if (!field) detail::parse_fail(line, "missing 'field' before products");
    if (!dim) detail::parse_fail(line, "missing 'dim' before products");
    if (labels.empty())
      for (std::size_t i = 0; i < *dim; ++i) labels.push_back("x" + std::to_string(i + 1));
    table.emplace(*field, labels, name);
  };
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(detail::strip_comment(raw));
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "algebra") {
      if (!(ls >> name)) detail::parse_fail(line, "missing algebra name");
    } else if (key == "field") {
      std::string f;
      if (!(ls >> f)) detail::parse_fail(line, "missing field name");
      try {
        field = Field::parse(f);
      } catch (const Error& e) {
        detail::parse_fail(line, e.message());
      }
    } else if (key == "dim") {
      std::string d;
      if (!(ls >> d)) detail::parse_fail(line, "missing dimension");
      try {
        dim = static_cast<std::size_t>(std::stoul(d));
      } catch (const std::exception&) {
        detail::parse_fail(line, "bad dimension '" + d + "'");
      }
    } else if (key == "labels") {
      if (!dim) detail::parse_fail(line, "'labels' before 'dim'");
      std::string l;
      while (ls >> l) labels.push_back(l);
      if (labels.size() != *dim) detail::parse_fail(line, "expected " + std::to_string(*dim) + " labels");
      std::set<std::string> uniq(labels.begin(), labels.end());
      if (uniq.size() != labels.size()) detail::parse_fail(line, "duplicate label");
    } else if (key == "p") {
      ensure_table();
      std::string si, sj;
      if (!(ls >> si >> sj)) detail::parse_fail(line, "expected 'p i j ...'");
      const std::size_t i = detail::parse_index(si, *dim, line), j = detail::parse_index(sj, *dim, line);
      if (i >= j) detail::parse_fail(line, "product lines need i < j");
      if (!seen.insert({i, j}).second) detail::parse_fail(line, "product [" + si + "," + sj + "] given twice");
      table->set_product(i, j, detail::parse_terms(ls, *field, *dim, line));
    } else if (key == "s") {
      ensure_table();
      std::string si;
      if (!(ls >> si)) detail::parse_fail(line, "expected 's i ...'");
      const std::size_t i = detail::parse_index(si, *dim, line);
      if (!squares) squares.emplace(*dim, Vector(*field, *dim));
      (*squares)[i] = detail::parse_terms(ls, *field, *dim, line);
    } else {
      detail::parse_fail(line, "unknown directive '" + key + "'");
    }
  }
  ensure_table();
  ParsedAlgebra out{std::move(*table), std::move(squares)};
  if (validate_table) {
    const ValidationReport rep = out.squares ? validate(out.as_restricted()) : validate(out.table);
    if (!rep.ok()) {
      std::string msg = out.table.name() + " is not a valid";
      msg += out.squares ? " restricted Lie algebra" : " Lie algebra";
      if (!rep.jacobi_violations.empty()) {
        const auto& v = rep.jacobi_violations.front();
        const auto& l = out.table.labels();
        msg += ": Jacobi fails on (" + l[v[0]] + ", " + l[v[1]] + ", " + l[v[2]] + ")";
      } else if (!rep.restrictedness_violations.empty()) {
        msg += ": 2-map axiom fails at " + out.table.labels()[rep.restrictedness_violations.front()];
      } else if (!rep.messages.empty()) {
        msg += ": " + rep.messages.front();
      }
      throw Error(ErrorKind::Validation, msg);
    }
  }
  return out;
}

inline ParsedAlgebra parse_algebra_file(const std::string& path, bool validate_table = true) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return parse_algebra(in, validate_table);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message());
  }
}

namespace detail {

inline void write_terms(std::ostream& out, const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out << ' ' << (k + 1) << ':' << to_hex(v[k]);
}

}  // namespace detail

inline void write_algebra(std::ostream& out, const AlgebraTable& t, const std::vector<Vector>* squares = nullptr) {
  out << "algebra " << (t.name().empty() ? "algebra" : t.name()) << '\n';
  out << "field " << t.field().name() << '\n';
  out << "dim " << t.dim() << '\n';
  out << "labels";
  for (const auto& l : t.labels()) out << ' ' << l;
  out << '\n';
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const Vector& p = t.basis_product(i, j);
      if (p.is_zero()) continue;
      out << "p " << (i + 1) << ' ' << (j + 1);
      detail::write_terms(out, p);
      out << '\n';
    }
  if (squares)
    for (std::size_t i = 0; i < t.dim(); ++i) {
      out << "s " << (i + 1);
      detail::write_terms(out, (*squares)[i]);
      out << '\n';
    }
}

inline void write_algebra(std::ostream& out, const RestrictedAlgebra& r) { write_algebra(out, r.base, &r.squares); }

inline std::string to_text(const AlgebraTable& t) {
  std::ostringstream s;
  write_algebra(s, t);
  return s.str();
}

inline std::string to_text(const RestrictedAlgebra& r) {
  std::ostringstream s;
  write_algebra(s, r);
  return s.str();
}

/// One vector per non-empty line, `n` hex coordinates each.
inline std::vector<Vector> parse_vectors(std::istream& in, Field f, std::size_t n) {
  std::vector<Vector> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(detail::strip_comment(raw));
    std::vector<std::string> coords;
    std::string c;
    while (ls >> c) coords.push_back(c);
    if (coords.empty()) continue;
    if (coords.size() != n) detail::parse_fail(line, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(coords.size()));
    Vector v(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t x = detail::parse_hex(coords[i], line);
      if (!f.contains(Felt(x))) detail::parse_fail(line, "coordinate " + coords[i] + " outside " + f.name());
      v.set(i, Felt(x));
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<Vector> parse_vectors_file(const std::string& path, Field f, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return parse_vectors(in, f, n);
}

}  // namespace skry
