#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gtutte/group.hpp"
#include "gtutte/int.hpp"
#include "gtutte/matrix.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/quasipoly.hpp"
#include "gtutte/transforms.hpp"

namespace gtutte {

// Insertion-ordered emission keeps the output byte-stable.
using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("file", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One input format for both instance kinds: a pair is { "group": "...",
// "list": [[...], ...] }, a congruence system is { "cw": { "A": [[...]],
// "B": [[...]], "ell": n } } with columns as inner arrays. A file may carry
// both.
struct Instance {
  std::optional<FgAbelianGroup> group;
  std::optional<ElementList> list;
  std::optional<CwInstance> cw;

  bool has_pair() const { return group.has_value() && list.has_value(); }

  const FgAbelianGroup& require_group() const {
    if (!group) throw parse_error("group", "input file has no pair instance");
    return *group;
  }
  const ElementList& require_list() const {
    if (!list) throw parse_error("list", "input file has no pair instance");
    return *list;
  }
  const CwInstance& require_cw() const {
    if (!cw) throw parse_error("cw", "input file has no congruence instance");
    return *cw;
  }
};

namespace detail {

inline Int json_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer())
    throw parse_error(field, "expected an integer, got " + v.dump());
  return Int(v.get<std::int64_t>());
}

inline std::vector<std::vector<Int>> json_vectors(const Json& v, const std::string& field) {
  if (!v.is_array()) throw parse_error(field, "expected an array of integer arrays");
  std::vector<std::vector<Int>> out;
  for (const Json& row : v) {
    if (!row.is_array()) throw parse_error(field, "expected an array of integer arrays");
    std::vector<Int> r;
    for (const Json& x : row) r.push_back(json_int(x, field));
    out.push_back(std::move(r));
  }
  return out;
}

inline IntMatrix json_columns(const Json& v, std::size_t ell, const std::string& field) {
  const auto cols = json_vectors(v, field);
  for (const auto& c : cols)
    if (c.size() != ell)
      throw parse_error(field, "every column must have " + std::to_string(ell) +
                                   " entries");
  return IntMatrix::from_columns(ell, cols);
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("json", e.what());
  }
  if (!j.is_object()) throw parse_error("json", "top-level value must be an object");

  Instance inst;
  if (j.contains("group") || j.contains("list")) {
    if (!j.contains("group")) throw parse_error("group", "missing (required with \"list\")");
    if (!j.contains("list")) throw parse_error("list", "missing (required with \"group\")");
    if (!j["group"].is_string()) throw parse_error("group", "expected a string");
    const FgAbelianGroup gamma = FgAbelianGroup::parse(j["group"].get<std::string>());
    try {
      inst.list = ElementList(gamma, detail::json_vectors(j["list"], "list"));
    } catch (const std::invalid_argument& e) {
      throw parse_error("list", e.what());
    }
    inst.group = gamma;
  }
  if (j.contains("cw")) {
    const Json& c = j["cw"];
    if (!c.is_object()) throw parse_error("cw", "expected an object");
    if (!c.contains("ell") || !c["ell"].is_number_unsigned())
      throw parse_error("cw.ell", "expected a nonnegative integer");
    CwInstance cw;
    cw.ell = c["ell"].get<std::size_t>();
    cw.a = c.contains("A") ? detail::json_columns(c["A"], cw.ell, "cw.A")
                           : IntMatrix(cw.ell, 0);
    cw.b = c.contains("B") ? detail::json_columns(c["B"], cw.ell, "cw.B")
                           : IntMatrix(cw.ell, 0);
    inst.cw = std::move(cw);
  }
  if (!inst.has_pair() && !inst.cw)
    throw parse_error("json", "need \"group\" and \"list\", or \"cw\"");
  return inst;
}

inline Json list_to_json(const ElementList& a) {
  Json arr = Json::array();
  for (const auto& e : a.elements()) {
    Json row = Json::array();
    for (const Int& c : e.coords) row.push_back(to_int64(c));
    arr.push_back(std::move(row));
  }
  return arr;
}

inline Json pair_to_json(const FgAbelianGroup& gamma, const ElementList& a) {
  Json j;
  j["group"] = gamma.descriptor();
  j["list"] = list_to_json(a);
  return j;
}

inline Json columns_to_json(const IntMatrix& m) {
  Json arr = Json::array();
  for (std::size_t jcol = 0; jcol < m.cols(); ++jcol) {
    Json col = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(to_int64(m.at(i, jcol)));
    arr.push_back(std::move(col));
  }
  return arr;
}

inline Json cw_to_json(const CwInstance& cw) {
  Json inner;
  inner["A"] = columns_to_json(cw.a);
  inner["B"] = columns_to_json(cw.b);
  inner["ell"] = cw.ell;
  Json j;
  j["cw"] = std::move(inner);
  return j;
}

inline Json coeffs_to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const Int& c : p.coeffs()) arr.push_back(to_int64(c));
  return arr;
}

inline Json poly_to_json(const IntPolynomial& p, const std::string& var = "t") {
  Json j;
  j["coeffs"] = coeffs_to_json(p);
  j["text"] = p.str(var);
  return j;
}

inline Json bivar_to_json(const BivariatePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json term;
    term["x"] = k.first;
    term["y"] = k.second;
    term["coeff"] = to_int64(c);
    terms.push_back(std::move(term));
  }
  Json j;
  j["terms"] = std::move(terms);
  j["text"] = p.str();
  return j;
}

inline Json quasipoly_to_json(const QuasiPolynomial& f) {
  Json constituents = Json::array();
  if (f.compressed()) {
    for (const auto& [d, p] : f.divisor_constituents()) {
      Json c;
      c["class"] = to_int64(d);
      c["coeffs"] = coeffs_to_json(p);
      constituents.push_back(std::move(c));
    }
  } else {
    const auto& by_class = f.class_constituents();
    for (std::size_t k = 0; k < by_class.size(); ++k) {
      Json c;
      c["class"] = k + 1;
      c["coeffs"] = coeffs_to_json(by_class[k]);
      constituents.push_back(std::move(c));
    }
  }
  Json j;
  j["period"] = to_int64(f.period());
  j["constituents"] = std::move(constituents);
  j["compressed"] = f.compressed();
  return j;
}

// cases-display: one line per class, "<poly> & gcd(q, rho) = d" for
// compressed storage, "<poly> & q \equiv k mod rho" otherwise.
inline std::string quasipoly_latex(const QuasiPolynomial& f,
                                   const std::string& lhs = "\\chi(q)") {
  const std::string rho = f.period().get_str();
  std::string s = lhs + " = \\begin{cases}\n";
  auto line = [&s](const IntPolynomial& p, const std::string& cond) {
    s += "  " + p.latex("q") + " & " + cond + " \\\\\n";
  };
  if (f.compressed()) {
    for (const auto& [d, p] : f.divisor_constituents())
      line(p, "\\gcd(q, " + rho + ") = " + d.get_str());
  } else {
    const auto& by_class = f.class_constituents();
    for (std::size_t k = 0; k < by_class.size(); ++k)
      line(by_class[k], "q \\equiv " + std::to_string(k + 1) + " \\pmod{" + rho + "}");
  }
  s += "\\end{cases}";
  return s;
}

// Text format: "<vertex count>;" then whitespace-separated 1-indexed pairs
// "i j", one edge each. '#' starts a comment.
inline Graph parse_graph(const std::string& text) {
  std::string cleaned;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    cleaned += line + "\n";
  }
  const std::size_t semi = cleaned.find(';');
  if (semi == std::string::npos)
    throw parse_error("graph", "expected \"<vertex count>;\" before the edges");
  Graph g;
  {
    std::istringstream head(cleaned.substr(0, semi));
    long long n = -1;
    if (!(head >> n) || n < 0)
      throw parse_error("graph", "bad vertex count");
    std::string rest;
    if (head >> rest) throw parse_error("graph", "unexpected token '" + rest + "'");
    g.n_vertices = static_cast<std::size_t>(n);
  }
  std::istringstream body(cleaned.substr(semi + 1));
  long long i = 0, jj = 0;
  while (body >> i) {
    if (!(body >> jj)) throw parse_error("graph", "dangling edge endpoint");
    if (i < 1 || jj < 1) throw parse_error("graph", "vertex indices are 1-based");
    g.edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(jj));
  }
  if (!body.eof()) {
    std::string tok;
    body.clear();
    body >> tok;
    throw parse_error("graph", "unexpected token '" + tok + "'");
  }
  return g;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gtutte
