#pragma once

#include <string>

#include <json.hpp>

#include "groebner.hpp"
#include "intfactor.hpp"
#include "kalgebra.hpp"
#include "poly_text.hpp"
#include "zalgebra.hpp"

// declarative JSON documents for algebras and ideals; parsers reject schema
// violations with field diagnostics, printers emit a canonical byte-stable form

namespace zalg {

using json = nlohmann::ordered_json;

namespace detail {

inline Int json_to_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw input_error(where + ": malformed integer literal");
    }
  }
  throw input_error(where + ": expected an integer");
}

inline json int_to_json(const Int& v) {
  static const Int lo = Int("-9007199254740992"), hi = Int("9007199254740992");
  if (v >= lo && v <= hi) return json(static_cast<long long>(v));
  return json(v.str());
}

inline Rat json_to_rat(const json& v, const std::string& where) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      Int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw input_error(where + ": zero denominator");
      return Rat(num) / Rat(den);
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      throw input_error(where + ": malformed rational literal");
    }
  }
  return Rat(json_to_int(v, where));
}

inline json rat_to_json(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return int_to_json(num);
  return json(num.str() + "/" + den.str());
}

inline const json& require_field(const json& j, const std::string& key,
                                 const std::string& doc) {
  if (!j.contains(key)) throw input_error(doc + ": missing field \"" + key + "\"");
  return j.at(key);
}

inline json parse_json_text(const std::string& text, const std::string& doc) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error(doc + ": malformed JSON");
  return j;
}

// tensor triples [i, j, row]: every nonzero entry must carry its mirrored
// symmetric partner with an identical row
template <class Elem, class FromJson>
std::vector<std::vector<std::vector<Elem>>> parse_tensor(const json& arr, std::size_t dim,
                                                         const std::string& doc,
                                                         const Elem& zero,
                                                         FromJson from_json) {
  if (!arr.is_array()) throw input_error(doc + ": \"tensor\" must be an array");
  std::vector<std::vector<std::vector<Elem>>> c(
      dim, std::vector<std::vector<Elem>>(dim, std::vector<Elem>(dim, zero)));
  std::vector<std::vector<bool>> present(dim, std::vector<bool>(dim, false));
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 3)
      throw input_error(doc + ": tensor entries must be [i, j, row] triples");
    long long i = entry.at(0).get<long long>();
    long long jx = entry.at(1).get<long long>();
    if (i < 0 || jx < 0 || i >= static_cast<long long>(dim) ||
        jx >= static_cast<long long>(dim))
      throw input_error(doc + ": tensor index out of range at (" + std::to_string(i) +
                        "," + std::to_string(jx) + ")");
    const json& row = entry.at(2);
    if (!row.is_array() || row.size() != dim)
      throw input_error(doc + ": tensor row length mismatch at (" + std::to_string(i) +
                        "," + std::to_string(jx) + ")");
    for (std::size_t k = 0; k < dim; ++k)
      c[i][jx][k] = from_json(row.at(k), doc + ": tensor (" + std::to_string(i) + "," +
                                             std::to_string(jx) + ")");
    present[i][jx] = true;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t jx = 0; jx < dim; ++jx) {
      if (!present[i][jx]) continue;
      if (!present[jx][i])
        throw input_error(doc + ": tensor entry (" + std::to_string(jx) + "," +
                          std::to_string(i) + ") missing; the mirror of (" +
                          std::to_string(i) + "," + std::to_string(jx) +
                          ") is required");
      if (c[i][jx] != c[jx][i])
        throw input_error(doc + ": tensor entries (" + std::to_string(i) + "," +
                          std::to_string(jx) + ") and (" + std::to_string(jx) + "," +
                          std::to_string(i) + ") disagree");
    }
  return c;
}

}  // namespace detail

// ---- .zalg: explicitly given finite Z-algebra ----

struct AlgebraDocument {
  std::string name;
  ExplicitZAlgebra algebra;
};

inline AlgebraDocument parse_zalg(const std::string& text) {
  const std::string doc = "zalg document";
  json j = detail::parse_json_text(text, doc);
  if (detail::require_field(j, "schema", doc).get<std::string>() != "zalg/1")
    throw input_error(doc + ": unsupported schema");
  AlgebraDocument out;
  out.name = detail::require_field(j, "name", doc).get<std::string>();
  bool unital = detail::require_field(j, "unital", doc).get<bool>();
  const json& gens = detail::require_field(j, "generators", doc);
  if (!gens.is_array() || gens.empty())
    throw input_error(doc + ": \"generators\" must be a nonempty array");
  std::vector<std::string> labels;
  for (const auto& g : gens) labels.push_back(g.get<std::string>());
  std::size_t dim = labels.size();
  auto c = detail::parse_tensor<Int>(
      detail::require_field(j, "tensor", doc), dim, doc, Int(0),
      [](const json& v, const std::string& w) { return detail::json_to_int(v, w); });
  std::vector<ZElem> rows;
  const json& syz = detail::require_field(j, "syzygies", doc);
  if (!syz.is_array()) throw input_error(doc + ": \"syzygies\" must be an array");
  for (const auto& r : syz) {
    if (!r.is_array() || r.size() != dim)
      throw input_error(doc + ": syzygy row length mismatch");
    ZElem row;
    for (const auto& v : r) row.push_back(detail::json_to_int(v, doc + ": syzygies"));
    rows.push_back(std::move(row));
  }
  out.algebra = make_algebra(dim - 1, unital, c, rows, labels);
  return out;
}

inline std::string print_zalg(const AlgebraDocument& d) {
  const ExplicitZAlgebra& R = d.algebra;
  json j;
  j["schema"] = "zalg/1";
  j["name"] = d.name;
  j["unital"] = R.unital;
  j["generators"] = R.labels;
  json syz = json::array();
  for (std::size_t r = 0; r < R.syzygies.basis.rows(); ++r) {
    json row = json::array();
    for (std::size_t k = 0; k < R.ambient(); ++k)
      row.push_back(detail::int_to_json(R.syzygies.basis(r, k)));
    syz.push_back(std::move(row));
  }
  j["syzygies"] = std::move(syz);
  json tensor = json::array();
  for (std::size_t i = 0; i < R.ambient(); ++i)
    for (std::size_t k = 0; k < R.ambient(); ++k) {
      bool nonzero = false;
      for (const auto& v : R.c[i][k])
        if (v != 0) nonzero = true;
      if (!nonzero) continue;
      json row = json::array();
      for (const auto& v : R.c[i][k]) row.push_back(detail::int_to_json(v));
      tensor.push_back(json::array({i, k, std::move(row)}));
    }
  j["tensor"] = std::move(tensor);
  return j.dump(2) + "\n";
}

// ---- .kalg: explicitly given K-algebra over Q or F_p ----

struct KAlgebraDocument {
  std::string name;
  bool rational = true;
  QAlgebra q;
  PAlgebra f;

  std::size_t dim() const { return rational ? q.dim : f.dim; }
};

inline KAlgebraDocument parse_kalg(const std::string& text) {
  const std::string doc = "kalg document";
  json j = detail::parse_json_text(text, doc);
  if (detail::require_field(j, "schema", doc).get<std::string>() != "kalg/1")
    throw input_error(doc + ": unsupported schema");
  KAlgebraDocument out;
  out.name = detail::require_field(j, "name", doc).get<std::string>();
  const json& gens = detail::require_field(j, "generators", doc);
  if (!gens.is_array() || gens.empty())
    throw input_error(doc + ": \"generators\" must be a nonempty array");
  std::vector<std::string> labels;
  for (const auto& g : gens) labels.push_back(g.get<std::string>());
  std::size_t dim = labels.size();
  const json& field = detail::require_field(j, "field", doc);
  if (field.is_string() && field.get<std::string>() == "Q") {
    out.rational = true;
    out.q.field = RationalField{};
    out.q.dim = dim;
    out.q.labels = labels;
    out.q.c = detail::parse_tensor<Rat>(
        detail::require_field(j, "tensor", doc), dim, doc, Rat(0),
        [](const json& v, const std::string& w) { return detail::json_to_rat(v, w); });
    out.q.unit = out.q.basis_vec(0);
  } else {
    Int p = detail::json_to_int(field, doc + ": field");
    if (!is_probable_prime(p)) throw input_error(doc + ": field must be \"Q\" or a prime");
    out.rational = false;
    out.f.field = PrimeField{p};
    out.f.dim = dim;
    out.f.labels = labels;
    out.f.c = detail::parse_tensor<Int>(
        detail::require_field(j, "tensor", doc), dim, doc, Int(0),
        [p](const json& v, const std::string& w) {
          return fdiv_r(detail::json_to_int(v, w), p);
        });
    out.f.unit = out.f.basis_vec(0);
  }
  return out;
}

inline std::string print_kalg(const KAlgebraDocument& d) {
  json j;
  j["schema"] = "kalg/1";
  j["name"] = d.name;
  if (d.rational)
    j["field"] = "Q";
  else
    j["field"] = detail::int_to_json(d.f.field.p);
  j["generators"] = d.rational ? d.q.labels : d.f.labels;
  json tensor = json::array();
  std::size_t dim = d.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      json row = json::array();
      bool nonzero = false;
      if (d.rational) {
        for (const auto& v : d.q.c[i][k]) {
          if (!(v == Rat(0))) nonzero = true;
          row.push_back(detail::rat_to_json(v));
        }
      } else {
        for (const auto& v : d.f.c[i][k]) {
          if (v != 0) nonzero = true;
          row.push_back(detail::int_to_json(v));
        }
      }
      if (nonzero) tensor.push_back(json::array({i, k, std::move(row)}));
    }
  j["tensor"] = std::move(tensor);
  return j.dump(2) + "\n";
}

// ---- .ideal: polynomial ideal in Z[x1..xn] or element ideal in an algebra ----

struct IdealDocument {
  std::string name;
  bool polynomial = false;
  std::vector<std::string> variables;
  std::vector<PolyZ> gens;       // polynomial form
  std::vector<ZElem> elements;   // element-row form
};

inline IdealDocument parse_ideal(const std::string& text,
                                 TermOrdering ord = TermOrdering::DegRevLex) {
  const std::string doc = "ideal document";
  json j = detail::parse_json_text(text, doc);
  if (detail::require_field(j, "schema", doc).get<std::string>() != "ideal/1")
    throw input_error(doc + ": unsupported schema");
  IdealDocument out;
  out.name = detail::require_field(j, "name", doc).get<std::string>();
  if (j.contains("generators")) {
    out.polynomial = true;
    const json& vars = detail::require_field(j, "variables", doc);
    for (const auto& v : vars) out.variables.push_back(v.get<std::string>());
    for (const auto& g : j.at("generators")) {
      try {
        out.gens.push_back(parse_poly_z(g.get<std::string>(), out.variables, ord));
      } catch (const input_error& e) {
        throw input_error(doc + ": generator \"" + g.get<std::string>() +
                          "\": " + e.what());
      }
    }
  } else if (j.contains("elements")) {
    for (const auto& r : j.at("elements")) {
      if (!r.is_array()) throw input_error(doc + ": element rows must be arrays");
      ZElem row;
      for (const auto& v : r) row.push_back(detail::json_to_int(v, doc + ": elements"));
      out.elements.push_back(std::move(row));
    }
  } else {
    throw input_error(doc + ": needs either \"generators\" or \"elements\"");
  }
  return out;
}

inline std::string print_ideal(const IdealDocument& d) {
  json j;
  j["schema"] = "ideal/1";
  j["name"] = d.name;
  if (d.polynomial) {
    j["variables"] = d.variables;
    json gens = json::array();
    for (const auto& g : d.gens) gens.push_back(print_poly(g, d.variables));
    j["generators"] = std::move(gens);
  } else {
    json rows = json::array();
    for (const auto& r : d.elements) {
      json row = json::array();
      for (const auto& v : r) row.push_back(detail::int_to_json(v));
      rows.push_back(std::move(row));
    }
    j["elements"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

}  // namespace zalg
