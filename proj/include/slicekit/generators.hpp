#pragma once
/**
 * @file generators.hpp
 * @brief Seeded random inputs for the property suites.
 */

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "seifert.hpp"
#include "surgery.hpp"

namespace slicekit::gen {

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

/// Random valid Seifert matrix of the given genus, entries in [-range, range],
/// by rejection on det(M - M^T) = 1.
inline SeifertMatrix seifert_matrix(Rng& rng, std::size_t genus, Int range = 3) {
  const std::size_t n = 2 * genus;
  while (true) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -range, range);
    try {
      return SeifertMatrix::validate(std::move(m));
    } catch (const std::invalid_argument&) {
    }
  }
}

/// Polynomial of exact degree `degree` with nonzero constant and leading terms.
inline LaurentPoly polynomial(Rng& rng, int degree, Int range = 3) {
  std::vector<Int> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = uniform(rng, -range, range);
  while (c.front() == 0) c.front() = uniform(rng, -range, range);
  while (c.back() == 0) c.back() = uniform(rng, -range, range);
  return LaurentPoly(0, c);
}

/// Product of two or three random polynomials with total degree in [1, max_degree].
inline std::pair<LaurentPoly, std::vector<LaurentPoly>> polynomial_product(Rng& rng, int max_degree = 6) {
  const int parts = static_cast<int>(uniform(rng, 2, 3));
  int remaining = static_cast<int>(uniform(rng, parts, max_degree));
  std::vector<LaurentPoly> factors;
  for (int i = 0; i < parts; ++i) {
    const int left = parts - i - 1;
    const int d = i + 1 == parts ? remaining : static_cast<int>(uniform(rng, 1, remaining - left));
    remaining -= d;
    factors.push_back(polynomial(rng, d, 3));
  }
  LaurentPoly p(1);
  for (const auto& f : factors) p *= f;
  return {p, factors};
}

inline SurgeryCoefficient coefficient(Rng& rng, Int range = 5) {
  while (true) {
    Int p = uniform(rng, -range, range), q = uniform(rng, 0, 4);
    if (p != 0 || q != 0) return {p, q};
  }
}

inline SchemaDiagram schema_diagram(Rng& rng) {
  SchemaDiagram d;
  d.twist = uniform(rng, -3, 3);
  if (uniform(rng, 0, 5) > 0) d.r1 = coefficient(rng);
  if (uniform(rng, 0, 5) > 0) d.r2 = coefficient(rng);
  if (!d.r1 || !d.r2) d.twist = 0;
  const Int count = uniform(rng, 0, 3);
  for (Int k = 0; k < count; ++k) {
    Meridian m{coefficient(rng), uniform(rng, 0, 1) == 1 && d.r1, uniform(rng, 0, 1) == 1 && d.r2};
    d.meridians.push_back(m);
  }
  return d;
}

struct SchemaStep {
  SchemaDiagram after;
  std::string description;
};

/// One random move that stays in the schema family, or nullopt when the drawn
/// move would leave it (the caller just draws again).
inline std::optional<SchemaStep> schema_move(Rng& rng, const SchemaDiagram& d) {
  const auto comps = d.components();
  if (comps.empty()) return std::nullopt;
  const ComponentRef c = comps[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(comps.size()) - 1))];
  if (d.coefficient(c).is_infinite() && uniform(rng, 0, 1) == 1)
    return SchemaStep{delete_infinity(d, c), "delete " + c.name()};
  const Int t = uniform(rng, -3, 3);
  try {
    return SchemaStep{rolfsen_twist(d, c, t), "twist " + c.name() + " by " + std::to_string(t)};
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace slicekit::gen
