#pragma once
/**
 * @file catalog.hpp
 * @brief The bundled catalog of worked knots (data/catalog.json).
 *
 * Parsing is structural only; Seifert-matrix validity and polynomial symmetry
 * are reported by Catalog::problems() so a verification run can show a
 * corrupted entry as a failed check instead of refusing to start.
 */

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "io.hpp"
#include "laurent.hpp"
#include "seifert.hpp"

#ifndef SLICEKIT_CATALOG_PATH
#define SLICEKIT_CATALOG_PATH "data/catalog.json"
#endif

namespace slicekit {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  std::string name;
  std::optional<IntMatrix> seifert_entries;  // raw; see seifert()
  std::optional<LaurentPoly> alexander_claimed;
  std::vector<HomologyClass> derivative_classes;
  std::optional<int> annulus_epsilon;
  std::string origin;  // "quoted" or "computed"
  std::string source;
  std::string note;

  /// Validated Seifert matrix; throws std::invalid_argument if the stored entries are not one.
  std::optional<SeifertMatrix> seifert() const {
    if (!seifert_entries) return std::nullopt;
    return SeifertMatrix::validate(*seifert_entries);
  }
};

class Catalog {
 public:
  static Catalog parse(const std::string& text, const std::string& origin = "<catalog>") {
    using nlohmann::json;
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      auto [line, col] = line_col(text, e.byte);
      throw CatalogError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc.at("entries").is_array())
      throw CatalogError(origin + ":1: catalog must be an object with an \"entries\" array");

    Catalog cat;
    cat.origin_ = origin;
    std::size_t index = 0;
    for (const auto& e : doc.at("entries")) {
      ++index;
      std::string name = e.is_object() && e.contains("name") && e.at("name").is_string() ? e.at("name").get<std::string>() : "";
      auto fail = [&](const std::string& msg) -> CatalogError {
        return CatalogError(origin + ":" + std::to_string(line_of_name(text, name)) + ": entry " +
                            (name.empty() ? "#" + std::to_string(index) : "\"" + name + "\"") + ": " + msg);
      };
      if (name.empty()) throw fail("missing \"name\"");
      if (cat.contains(name)) throw fail("duplicate name");
      CatalogEntry entry;
      entry.name = name;
      try {
        entry.origin = e.value("origin", "quoted");
        if (entry.origin != "quoted" && entry.origin != "computed")
          throw std::invalid_argument("origin must be \"quoted\" or \"computed\"");
        entry.source = e.value("source", "");
        entry.note = e.value("note", "");
        if (e.contains("seifert_matrix")) entry.seifert_entries = io::seifert_entries_from_json(e.at("seifert_matrix"));
        if (e.contains("alexander_claimed")) entry.alexander_claimed = io::poly_from_json(e.at("alexander_claimed"));
        if (e.contains("derivative_classes")) {
          if (!e.at("derivative_classes").is_array()) throw std::invalid_argument("\"derivative_classes\" must be an array");
          for (const auto& v : e.at("derivative_classes")) entry.derivative_classes.push_back(io::homology_class_from_json(v));
        }
        if (e.contains("annulus_epsilon")) {
          const auto& eps = e.at("annulus_epsilon");
          if (!eps.is_number_integer() || (eps.get<int>() != 1 && eps.get<int>() != -1))
            throw std::invalid_argument("\"annulus_epsilon\" must be +1 or -1");
          entry.annulus_epsilon = eps.get<int>();
        }
      } catch (const CatalogError&) {
        throw;
      } catch (const std::exception& ex) {
        throw fail(ex.what());
      }
      cat.entries_.push_back(std::move(entry));
    }
    return cat;
  }

  static Catalog read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
  }

  /// Semantic problems: invalid Seifert matrices, asymmetric claimed
  /// polynomials, derivative classes of the wrong dimension.
  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) {
      std::optional<SeifertMatrix> s;
      if (e.seifert_entries) {
        try {
          s = e.seifert();
        } catch (const std::exception& ex) {
          out.push_back("entry \"" + e.name + "\": " + ex.what() + " (det(M - M^T) must be 1)");
        }
      }
      if (e.alexander_claimed) {
        if (e.alexander_claimed->is_zero() || !is_symmetric(*e.alexander_claimed))
          out.push_back("entry \"" + e.name + "\": claimed Alexander polynomial is not symmetric under t -> 1/t");
      }
      if (e.seifert_entries)
        for (const auto& v : e.derivative_classes)
          if (v.dimension() != e.seifert_entries->rows())
            out.push_back("entry \"" + e.name + "\": derivative class " + v.str() + " has the wrong dimension");
    }
    return out;
  }

  bool contains(const std::string& name) const {
    for (const auto& e : entries_)
      if (e.name == name) return true;
    return false;
  }

  const CatalogEntry& find(const std::string& name) const {
    for (const auto& e : entries_)
      if (e.name == name) return e;
    throw CatalogError("catalog entry \"" + name + "\" not found");
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const std::string& origin() const { return origin_; }

 private:
  static std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  static std::size_t line_of_name(const std::string& text, const std::string& name) {
    if (name.empty()) return 1;
    std::smatch m;
    const std::regex pattern("\"name\"\\s*:\\s*\"" + std::regex_replace(name, std::regex(R"([.^$|()\[\]{}*+?\\])"), R"(\$&)") + "\"");
    if (!std::regex_search(text, m, pattern)) return 1;
    return line_col(text, static_cast<std::size_t>(m.position(0)) + 1).first;
  }

  std::string origin_;
  std::vector<CatalogEntry> entries_;
};

inline std::string default_catalog_path() { return SLICEKIT_CATALOG_PATH; }

/// Strict load: structural and semantic problems are both errors.
inline Catalog catalog_load(const std::string& path = default_catalog_path()) {
  Catalog c = Catalog::read(path);
  auto problems = c.problems();
  if (!problems.empty()) throw CatalogError(path + ": " + problems.front());
  return c;
}

}  // namespace slicekit
