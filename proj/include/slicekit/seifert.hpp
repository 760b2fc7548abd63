#pragma once
/**
 * @file seifert.hpp
 * @brief Seifert matrices and the classical invariants read off them:
 *        Alexander polynomial, signature, determinant, Arf invariant, and a
 *        bounded search for metabolizers (half-rank summands on which the
 *        Seifert form vanishes).
 *
 * Convention: entry (i, j) is lk(x_i, x_j^+), the linking number of the i-th
 * basis curve with the positive push-off of the j-th.
 */

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace slicekit {

/// A class in H_1 of the Seifert surface, in band-basis coordinates.
struct HomologyClass {
  IntVector coords;

  bool is_zero() const {
    for (Int c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_primitive() const { return content(coords) == 1; }
  std::size_t dimension() const { return coords.size(); }

  /// Representative of {v, -v} whose first nonzero coordinate is positive.
  HomologyClass canonical_sign() const {
    for (Int c : coords) {
      if (c == 0) continue;
      if (c > 0) return *this;
      HomologyClass neg{coords};
      for (Int& x : neg.coords) x = checked_neg(x);
      return neg;
    }
    return *this;
  }

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
  }
};

class SeifertMatrix {
 public:
  /// Rejects anything that is not square of even size with det(M - M^T) = 1.
  static SeifertMatrix validate(IntMatrix m) {
    if (!m.is_square() || m.rows() % 2 != 0) throw std::invalid_argument("not square of even dimension");
    IntMatrix anti(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) anti(i, j) = checked_sub(m(i, j), m(j, i));
    if (determinant(anti) != 1) throw std::invalid_argument("not a Seifert matrix");
    return SeifertMatrix(std::move(m));
  }

  const IntMatrix& entries() const { return m_; }
  std::size_t genus() const { return m_.rows() / 2; }
  std::size_t dimension() const { return m_.rows(); }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  explicit SeifertMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

/// normalize(det(M - t M^T)); 1 for the empty matrix.
inline LaurentPoly alexander(const SeifertMatrix& s) {
  const IntMatrix& m = s.entries();
  const std::size_t n = m.rows();
  Matrix<LaurentPoly> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = LaurentPoly(0, {m(i, j), checked_neg(m(j, i))});
  return normalize(bareiss_determinant<LaurentPoly>(std::move(a), LaurentPoly(1)));
}

/// Signature of the symmetric form M + M^T by exact congruence diagonalization over Q.
inline int signature(const SeifertMatrix& s) {
  const IntMatrix& m = s.entries();
  const std::size_t n = m.rows();
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(checked_add(m(i, j), m(j, i)));

  // Simultaneous row/column operations keep the matrix symmetric.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& c) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += c * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += c * a(i, src);
  };
  auto swap_both = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };

  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == Rational(0)) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == Rational(0)) ++p;
      if (p < n) {
        swap_both(k, p);
      } else {
        // Zero diagonal: a nonzero off-diagonal entry gives a hyperbolic pair;
        // adding row/col q to k makes the pivot 2 a(k, q).
        std::size_t q = k + 1;
        while (q < n && a(k, q) == Rational(0)) ++q;
        if (q == n) continue;  // row k is entirely zero
        add_multiple(k, q, Rational(1));
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      if (a(i, k) != Rational(0)) add_multiple(i, k, -(a(i, k) / pivot));
    sig += pivot.sign();
  }
  return sig;
}

/// |Delta(-1)|.
inline Int knot_determinant(const SeifertMatrix& s) {
  return checked_abs(evaluate(alexander(s), Rational(-1)).num());
}

/// Arf invariant via the congruence Arf = 0 iff det = +-1 mod 8.
inline int arf(const SeifertMatrix& s) {
  const Int r = knot_determinant(s) % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

/// v^T M w.
inline Int seifert_pairing(const SeifertMatrix& s, const HomologyClass& v, const HomologyClass& w) {
  if (v.dimension() != s.dimension() || w.dimension() != s.dimension())
    throw std::invalid_argument("homology class dimension does not match the Seifert matrix");
  return dot(v.coords, multiply(s.entries(), w.coords));
}

struct Metabolizer {
  std::vector<HomologyClass> basis;

  friend bool operator==(const Metabolizer&, const Metabolizer&) = default;
};

/// True when the Seifert form vanishes on every basis pair and the basis spans
/// a half-rank direct summand.
inline bool is_metabolizer(const SeifertMatrix& s, const Metabolizer& h) {
  if (h.basis.size() != s.genus()) return false;
  for (const auto& v : h.basis)
    for (const auto& w : h.basis)
      if (seifert_pairing(s, v, w) != 0) return false;
  std::vector<IntVector> rows;
  for (const auto& v : h.basis) rows.push_back(v.coords);
  return is_direct_summand(rows);
}

inline constexpr Int kMaxMetabolizerBound = 50;

/// All metabolizers spanned by primitive vectors with coordinates in
/// [-bound, bound], one entry per summand. An empty result only says nothing
/// was found inside the box.
inline std::vector<Metabolizer> metabolizer_search(const SeifertMatrix& s, Int bound) {
  if (bound < 1 || bound > kMaxMetabolizerBound) throw std::invalid_argument("bound must lie in [1, 50]");
  const std::size_t g = s.genus();
  if (g > 2) throw std::invalid_argument("unsupported genus");
  if (g == 0) return {Metabolizer{}};

  const std::size_t dim = 2 * g;
  // Isotropic primitive vectors, one per sign class, in lexicographic order.
  std::vector<HomologyClass> isotropic;
  IntVector v(dim, -bound);
  while (true) {
    HomologyClass h{v};
    if (!h.is_zero() && h.canonical_sign() == h && h.is_primitive() && seifert_pairing(s, h, h) == 0)
      isotropic.push_back(h);
    std::size_t i = dim;
    while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
    if (i == 0) break;
    ++v[i - 1];
  }

  std::vector<Metabolizer> out;
  if (g == 1) {
    for (auto& h : isotropic) out.push_back(Metabolizer{{h}});
    return out;
  }

  // Genus 2: pairs with vanishing cross terms spanning a summand, deduplicated by
  // the Hermite normal form of the summand.
  std::map<std::vector<std::vector<Int>>, std::size_t> seen;
  const IntMatrix& m = s.entries();
  const IntMatrix mt = m.transpose();
  std::vector<IntVector> left, right;  // M^T v and M v, so v^T M w = (M^T v).w
  for (const auto& h : isotropic) {
    left.push_back(multiply(mt, h.coords));
    right.push_back(multiply(m, h.coords));
  }
  for (std::size_t i = 0; i < isotropic.size(); ++i) {
    for (std::size_t j = i + 1; j < isotropic.size(); ++j) {
      const IntVector& w = isotropic[j].coords;
      if (dot(left[i], w) != 0 || dot(right[i], w) != 0) continue;
      if (!is_direct_summand({isotropic[i].coords, w})) continue;
      auto key = hermite_normal_form(IntMatrix::from_rows({isotropic[i].coords, w})).to_rows();
      if (seen.emplace(std::move(key), out.size()).second) out.push_back(Metabolizer{{isotropic[i], isotropic[j]}});
    }
  }
  return out;
}

}  // namespace slicekit
