#pragma once
/**
 * @file io.hpp
 * @brief JSON wire formats for polynomials, Seifert matrices, surgery diagrams,
 *        move traces and annulus instructions.
 *
 * Decoders throw std::invalid_argument with a message naming the offending field.
 */

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "annulus.hpp"
#include "laurent.hpp"
#include "seifert.hpp"
#include "surgery.hpp"

namespace slicekit::io {

using nlohmann::json;

// ---- polynomials: {"min_exp": e, "coeffs": [ascending]} -------------------

inline json to_json(const LaurentPoly& p) {
  return json{{"min_exp", p.is_zero() ? 0 : p.min_exp()}, {"coeffs", p.coefficients()}};
}

inline LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs"))
    throw std::invalid_argument("polynomial must be an object with \"min_exp\" and \"coeffs\"");
  if (!j.at("min_exp").is_number_integer()) throw std::invalid_argument("\"min_exp\" must be an integer");
  const auto& c = j.at("coeffs");
  if (!c.is_array()) throw std::invalid_argument("\"coeffs\" must be an array");
  std::vector<Int> coeffs;
  for (const auto& x : c) {
    if (!x.is_number_integer()) throw std::invalid_argument("polynomial coefficients must be integers");
    coeffs.push_back(x.get<Int>());
  }
  if (!coeffs.empty() && (coeffs.front() == 0 || coeffs.back() == 0))
    throw std::invalid_argument("polynomial coefficients may not have leading or trailing zeros");
  return LaurentPoly(j.at("min_exp").get<int>(), coeffs);
}

// ---- matrices: {"genus": g, "entries": [[...]]} ---------------------------

inline IntMatrix int_matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("matrix entries must be an array of rows");
  std::vector<std::vector<Int>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<Int> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw std::invalid_argument("matrix entries must be integers");
      row.push_back(x.get<Int>());
    }
    out.push_back(std::move(row));
  }
  return IntMatrix::from_rows(out);
}

inline json to_json(const IntMatrix& m) { return json(m.to_rows()); }

inline json to_json(const SeifertMatrix& s) { return json{{"genus", s.genus()}, {"entries", to_json(s.entries())}}; }

/// Raw entries of a matrix document; a bare array of rows is also accepted.
inline IntMatrix seifert_entries_from_json(const json& j) {
  if (j.is_array()) return int_matrix_from_json(j);
  if (!j.is_object() || !j.contains("entries")) throw std::invalid_argument("Seifert matrix must have \"entries\"");
  IntMatrix m = int_matrix_from_json(j.at("entries"));
  if (j.contains("genus")) {
    if (!j.at("genus").is_number_integer()) throw std::invalid_argument("\"genus\" must be an integer");
    if (static_cast<std::size_t>(j.at("genus").get<Int>()) * 2 != m.rows())
      throw std::invalid_argument("\"genus\" does not match the matrix size");
  }
  return m;
}

inline SeifertMatrix seifert_from_json(const json& j) { return SeifertMatrix::validate(seifert_entries_from_json(j)); }

inline json to_json(const HomologyClass& h) { return json(h.coords); }

inline HomologyClass homology_class_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("homology class must be an array of integers");
  HomologyClass h;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("homology class coordinates must be integers");
    h.coords.push_back(x.get<Int>());
  }
  return h;
}

inline json to_json(const Metabolizer& m) {
  json basis = json::array();
  for (const auto& v : m.basis) basis.push_back(to_json(v));
  return basis;
}

// ---- surgery coefficients and diagrams ------------------------------------

inline json to_json(const SurgeryCoefficient& c) { return c.str(); }

inline SurgeryCoefficient coefficient_from_json(const json& j) {
  if (j.is_number_integer()) return SurgeryCoefficient(j.get<Int>());
  if (!j.is_string()) throw std::invalid_argument("surgery coefficient must be a \"p/q\" string or \"inf\"");
  return SurgeryCoefficient::parse(j.get<std::string>());
}

inline json to_json(const SchemaDiagram& d) {
  json s;
  s["twist"] = d.twist;
  s["r1"] = d.r1 ? to_json(*d.r1) : json(nullptr);
  s["r2"] = d.r2 ? to_json(*d.r2) : json(nullptr);
  json mers = json::array();
  for (const auto& m : d.meridians) {
    json targets = json::array();
    if (m.first && m.second)
      targets.push_back("both");
    else if (m.first)
      targets.push_back("first");
    else if (m.second)
      targets.push_back("second");
    mers.push_back(json{{"r", to_json(m.coefficient)}, {"targets", targets}});
  }
  s["meridians"] = mers;
  return json{{"schema", s}};
}

inline SchemaDiagram schema_from_json(const json& j) {
  if (!j.is_object() || !j.contains("schema")) throw std::invalid_argument("diagram must be an object with \"schema\"");
  const json& s = j.at("schema");
  if (!s.is_object()) throw std::invalid_argument("\"schema\" must be an object");
  SchemaDiagram d;
  if (s.contains("twist")) {
    if (!s.at("twist").is_number_integer()) throw std::invalid_argument("\"twist\" must be an integer");
    d.twist = s.at("twist").get<Int>();
  }
  if (s.contains("r1") && !s.at("r1").is_null()) d.r1 = coefficient_from_json(s.at("r1"));
  if (s.contains("r2") && !s.at("r2").is_null()) d.r2 = coefficient_from_json(s.at("r2"));
  if (s.contains("meridians")) {
    if (!s.at("meridians").is_array()) throw std::invalid_argument("\"meridians\" must be an array");
    for (const auto& m : s.at("meridians")) {
      if (!m.is_object() || !m.contains("r")) throw std::invalid_argument("meridian needs \"r\"");
      Meridian mer{coefficient_from_json(m.at("r")), false, false};
      for (const auto& t : m.value("targets", json::array())) {
        const std::string name = t.is_string() ? t.get<std::string>() : "";
        if (name == "both")
          mer.first = mer.second = true;
        else if (name == "first")
          mer.first = true;
        else if (name == "second")
          mer.second = true;
        else
          throw std::invalid_argument("meridian targets must be \"both\", \"first\" or \"second\"");
      }
      if ((mer.first && !d.r1) || (mer.second && !d.r2))
        throw std::invalid_argument("meridian targets a pair member that is absent");
      d.meridians.push_back(mer);
    }
  }
  return d;
}

inline json to_json(const AbstractDiagram& d) {
  json comps = json::array();
  for (const auto& c : d.components)
    comps.push_back(json{{"name", c.name}, {"r", to_json(c.coefficient)}, {"unknotted", c.unknotted}});
  return json{{"abstract", json{{"components", comps}, {"linking", to_json(d.linking)}}}};
}

inline AbstractDiagram abstract_from_json(const json& j) {
  if (!j.is_object() || !j.contains("abstract")) throw std::invalid_argument("diagram must be an object with \"abstract\"");
  const json& a = j.at("abstract");
  AbstractDiagram d;
  std::size_t k = 0;
  for (const auto& c : a.value("components", json::array())) {
    ++k;
    if (!c.is_object() || !c.contains("r")) throw std::invalid_argument("component needs \"r\"");
    d.components.push_back({c.value("name", "c" + std::to_string(k)), coefficient_from_json(c.at("r")),
                            c.value("unknotted", true)});
  }
  d.linking = a.contains("linking") ? int_matrix_from_json(a.at("linking")) : IntMatrix(0, 0);
  if (d.components.empty() && d.linking.rows() == 0) return d;
  d.check();
  return d;
}

inline std::string to_string(Move::Kind k) { return k == Move::Kind::rolfsen_twist ? "rolfsen_twist" : "delete_infinity"; }

inline json to_json(const Reduction& r) {
  json trace = json::array();
  for (const auto& m : r.trace) {
    json step{{"move", to_string(m.kind)}, {"component", m.component}, {"after", to_json(m.after)}};
    if (m.kind == Move::Kind::rolfsen_twist) step["t"] = m.twist;
    if (!m.note.empty()) step["note"] = m.note;
    trace.push_back(step);
  }
  return json{{"is_s3", r.is_s3}, {"initial", to_json(r.initial)}, {"trace", trace}, {"residual", to_json(r.residual)}};
}

// ---- annulus ---------------------------------------------------------------

/// {"eta1": "p/q", "eta2": "p/q", "lk": l, "rho": [[..],[..]]}
inline json annulus_json(const InstructionPair& instr, Int lk, const TorusAutomorphism& r) {
  return json{{"eta1", to_json(instr[0].coefficient)},
              {"eta2", to_json(instr[1].coefficient)},
              {"lk", lk},
              {"rho", to_json(r.matrix())}};
}

inline json annulus_json(const AnnulusModSpec& s) { return annulus_json(boundary_instructions(s), s.l, rho(s)); }

}  // namespace slicekit::io
