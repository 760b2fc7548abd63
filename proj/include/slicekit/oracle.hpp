#pragma once
/**
 * @file oracle.hpp
 * @brief Independent cross-check routes for invariants computed elsewhere.
 *
 * Nothing in the main computation paths calls these. They exist so tests and
 * the verification report can compare two algebraically unrelated methods.
 */

#include <algorithm>
#include <numeric>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"
#include "seifert.hpp"

namespace slicekit::oracle {

/// Arf invariant of the mod-2 quadratic form q(v) = v^T M v, computed on a
/// symplectic basis of the intersection form M - M^T over Z/2.
inline int arf_quadratic_form(const SeifertMatrix& s) {
  const IntMatrix& m = s.entries();
  const std::size_t n = m.rows();
  auto mod2 = [](Int x) { return static_cast<int>(((x % 2) + 2) % 2); };
  auto q = [&](const std::vector<int>& v) {
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc += v[i] * v[j] * mod2(m(i, j));
    return mod2(acc);
  };
  auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc += x[i] * y[j] * mod2(m(i, j) - m(j, i));
    return mod2(acc);
  };
  auto add = [](std::vector<int> x, const std::vector<int>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= y[i];
    return x;
  };

  std::vector<std::vector<int>> pool;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    pool.push_back(e);
  }
  int arf = 0;
  while (!pool.empty()) {
    std::vector<int> a = pool.back();
    pool.pop_back();
    auto it = std::find_if(pool.begin(), pool.end(), [&](const auto& b) { return form(a, b) == 1; });
    if (it == pool.end()) continue;  // radical vector; cannot happen for unimodular forms
    std::vector<int> b = *it;
    pool.erase(it);
    arf ^= q(a) & q(b);
    for (auto& v : pool) {
      // project off the hyperbolic plane spanned by a, b
      if (form(v, b)) v = add(v, a);
      if (form(v, a)) v = add(v, b);
    }
  }
  return arf;
}

/// det(M - t M^T) by permutation expansion, normalized.
inline LaurentPoly alexander_leibniz(const SeifertMatrix& s) {
  const IntMatrix& m = s.entries();
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    LaurentPoly term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      term *= LaurentPoly(0, {m(i, perm[i]), -m(perm[i], i)});
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return normalize(total);
}

/// Signature of M + M^T from its characteristic polynomial: a real symmetric
/// matrix has only real eigenvalues, so Descartes' rule of signs is exact.
inline int signature_descartes(const SeifertMatrix& s) {
  const IntMatrix& m = s.entries();
  const std::size_t n = m.rows();
  Matrix<LaurentPoly> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = (i == j ? LaurentPoly::t() : LaurentPoly()) - LaurentPoly(m(i, j) + m(j, i));
  const LaurentPoly chi = bareiss_determinant<LaurentPoly>(a, LaurentPoly(1));
  auto sign_changes = [](const LaurentPoly& p) {
    int changes = 0;
    Int last = 0;
    for (auto [e, c] : p.terms()) {
      if (last != 0 && (c > 0) != (last > 0)) ++changes;
      last = c;
    }
    return changes;
  };
  LaurentPoly reflected;  // chi(-x)
  for (auto [e, c] : chi.terms()) reflected += LaurentPoly::monomial(e % 2 ? -c : c, e);
  return sign_changes(chi) - sign_changes(reflected);
}

}  // namespace slicekit::oracle
