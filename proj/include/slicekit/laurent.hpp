#pragma once
/**
 * @file laurent.hpp
 * @brief Integer Laurent polynomials in one variable t, their canonical unit
 *        normalization, Kronecker factorization over Z, and the Fox-Milnor test.
 *
 * Alexander polynomials are only defined up to multiplication by units +-t^k.
 * The canonical representative used throughout has lowest exponent 0 and a
 * positive leading coefficient.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "rational.hpp"

namespace slicekit {

class LaurentPoly {
 public:
  using Exponent = int;
  using TermMap = std::map<Exponent, Int>;

  LaurentPoly() = default;
  LaurentPoly(Int constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[0] = constant;
  }
  /// Coefficients in ascending exponent order starting at `min_exp`. Zeros are dropped.
  LaurentPoly(Exponent min_exp, const std::vector<Int>& coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) terms_[min_exp + static_cast<Exponent>(i)] = coeffs[i];
  }

  static LaurentPoly monomial(Int coeff, Exponent exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
  }
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Exponent min_exp() const { return is_zero() ? 0 : terms_.begin()->first; }
  Exponent max_exp() const { return is_zero() ? 0 : terms_.rbegin()->first; }
  /// Span max_exp - min_exp; -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : max_exp() - min_exp(); }
  Int leading() const { return is_zero() ? 0 : terms_.rbegin()->second; }
  Int trailing() const { return is_zero() ? 0 : terms_.begin()->second; }
  Int coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  /// Dense coefficients from min_exp() to max_exp().
  std::vector<Int> coefficients() const {
    std::vector<Int> out;
    if (is_zero()) return out;
    out.assign(static_cast<std::size_t>(degree() + 1), 0);
    for (auto [e, c] : terms_) out[static_cast<std::size_t>(e - min_exp())] = c;
    return out;
  }

  /// Multiply by t^k.
  LaurentPoly shifted(Exponent k) const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }
  /// p(1/t), not normalized.
  LaurentPoly inverted() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_[e] = checked_neg(c);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) {
      Int v = checked_add(coefficient(e), c);
      if (v == 0)
        terms_.erase(e);
      else
        terms_[e] = v;
    }
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) r += monomial(checked_mul(ca, cb), ea + eb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Total order used to sort factor lists deterministically.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.min_exp() != b.min_exp()) return a.min_exp() < b.min_exp();
    return a.coefficients() < b.coefficients();
  }

  /// Ascending human form, e.g. "4 - 9t + 4t^2".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
      Int mag = checked_abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (mag != 1 || e == 0) os << mag;
      if (e != 0) {
        os << 't';
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  TermMap terms_;
};

/// Canonical representative of the class {+-t^k p}: lowest exponent 0, positive leading coefficient.
inline LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("zero has no canonical form");
  LaurentPoly r = p.shifted(-p.min_exp());
  return r.leading() < 0 ? -r : r;
}

inline bool is_normalized(const LaurentPoly& p) { return !p.is_zero() && p.min_exp() == 0 && p.leading() > 0; }

inline bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize(a) == normalize(b);
}

/// Exact value at a rational point (Horner from the top exponent, then rescaled).
inline Rational evaluate(const LaurentPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  if (x.num() == 0) {
    if (p.min_exp() < 0) throw std::domain_error("evaluation at 0 of a polynomial with negative exponents");
    return p.coefficient(0);
  }
  Rational acc = 0;
  for (int e = p.max_exp(); e >= p.min_exp(); --e) acc = acc * x + Rational(p.coefficient(e));
  for (int e = p.min_exp(); e < 0; ++e) acc /= x;
  for (int e = 0; e < p.min_exp(); ++e) acc *= x;
  return acc;
}

/// Integer evaluation for polynomials with no negative exponents.
inline Int evaluate_int(const LaurentPoly& p, Int x) {
  if (p.min_exp() < 0) throw std::domain_error("integer evaluation needs nonnegative exponents");
  Int acc = 0;
  for (int e = p.max_exp(); e >= 0; --e) acc = checked_add(checked_mul(acc, x), p.coefficient(e));
  return p.is_zero() ? 0 : acc;
}

/// normalize(p(1/t)).
inline LaurentPoly reciprocal(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("zero has no canonical form");
  return normalize(p.inverted());
}

inline bool is_symmetric(const LaurentPoly& p) { return reciprocal(p) == normalize(p); }

/// Quotient a / b in Z[t, 1/t] when it exists; nullopt otherwise.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Both shifted to ordinary polynomials with nonzero constant term on b.
  LaurentPoly rem = a.shifted(-a.min_exp());
  const LaurentPoly den = b.shifted(-b.min_exp());
  const int dd = den.max_exp();
  const Int lead = den.leading();
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= dd) {
    Int c = rem.leading();
    if (c % lead != 0) return std::nullopt;
    LaurentPoly term = LaurentPoly::monomial(c / lead, rem.max_exp() - dd);
    quot += term;
    rem -= term * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(a.min_exp() - b.min_exp());
}

inline Int content(const LaurentPoly& p) {
  Int g = 0;
  for (auto [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

inline LaurentPoly ring_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly ring_sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
inline LaurentPoly ring_neg(const LaurentPoly& a) { return -a; }
inline LaurentPoly ring_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact polynomial division in Bareiss step");
  return *q;
}
inline bool ring_is_zero(const LaurentPoly& a) { return a.is_zero(); }

// ---------------------------------------------------------------------------
// Kronecker factorization
// ---------------------------------------------------------------------------

inline constexpr int kMaxFactorDegree = 8;
inline constexpr Int kMaxInterpolationValue = 1'000'000;

/// normalize(p) == content * product(factors). Factors are canonical, primitive,
/// irreducible over Z, and sorted.
struct Factorization {
  Int content = 1;
  std::vector<LaurentPoly> factors;

  LaurentPoly product() const {
    LaurentPoly r(content);
    for (const auto& f : factors) r *= f;
    return r;
  }
};

namespace detail {

inline std::vector<Int> signed_divisors(Int v) {
  v = checked_abs(v);
  std::vector<Int> pos;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    pos.push_back(d);
    if (d != v / d) pos.push_back(v / d);
  }
  std::sort(pos.begin(), pos.end());
  std::vector<Int> out;
  for (Int d : pos) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

/// Search for a factor of exact degree k of the primitive polynomial f with
/// positive leading coefficient. Candidate values at k+1 sample points range
/// over divisors of f at those points; Newton divided differences of an
/// integer polynomial at integer nodes are integers, which prunes the search.
class KroneckerSearch {
 public:
  KroneckerSearch(const LaurentPoly& f, int k) : f_(f), k_(k) {
    std::vector<std::pair<Int, Int>> candidates;  // (|f(x)|, x)
    for (Int r = 0; r <= 24; ++r) {
      for (Int x : {r, -r}) {
        if (r == 0 && x != 0) continue;
        Int v = evaluate_int(f, x);
        if (v != 0) candidates.emplace_back(checked_abs(v), x);
        if (r == 0) break;
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    if (candidates.size() < static_cast<std::size_t>(k + 1))
      throw std::logic_error("not enough nonzero sample points for interpolation");
    for (int i = 0; i <= k; ++i) {
      const auto [mag, x] = candidates[static_cast<std::size_t>(i)];
      if (mag > kMaxInterpolationValue) throw std::domain_error("interpolation value bound exceeded");
      nodes_.push_back(x);
      auto divs = signed_divisors(mag);
      if (i == 0) {  // fix the overall sign: g and -g are the same factor
        std::erase_if(divs, [](Int d) { return d < 0; });
      }
      choices_.push_back(std::move(divs));
    }
    table_.assign(static_cast<std::size_t>(k + 1), std::vector<Int>(static_cast<std::size_t>(k + 1), 0));
  }

  std::optional<LaurentPoly> run() { return descend(0); }

 private:
  std::optional<LaurentPoly> descend(std::size_t j) {
    for (Int y : choices_[j]) {
      if (!fill_row(j, y)) continue;
      if (j == static_cast<std::size_t>(k_)) {
        if (auto g = accept()) return g;
      } else if (auto g = descend(j + 1)) {
        return g;
      }
    }
    return std::nullopt;
  }

  // Row j of the divided-difference table; false if a non-integer entry appears.
  bool fill_row(std::size_t j, Int y) {
    table_[j][0] = y;
    for (std::size_t m = 1; m <= j; ++m) {
      Int num = checked_sub(table_[j][m - 1], table_[j - 1][m - 1]);
      Int den = checked_sub(nodes_[j], nodes_[j - m]);
      if (num % den != 0) return false;
      table_[j][m] = num / den;
    }
    return true;
  }

  std::optional<LaurentPoly> accept() const {
    const auto k = static_cast<std::size_t>(k_);
    Int top = table_[k][k];
    if (top == 0 || f_.leading() % top != 0) return std::nullopt;
    // Newton form -> monomial form, innermost first.
    LaurentPoly g(table_[k][k]);
    for (std::size_t i = k; i-- > 0;) {
      g = g * LaurentPoly(0, {checked_neg(nodes_[i]), 1}) + LaurentPoly(table_[i][i]);
    }
    if (g.degree() != k_) return std::nullopt;
    if (!divide_exact(f_, g)) return std::nullopt;
    return normalize(g);
  }

  const LaurentPoly& f_;
  int k_;
  std::vector<Int> nodes_;
  std::vector<std::vector<Int>> choices_;
  std::vector<std::vector<Int>> table_;
};

}  // namespace detail

/// Complete factorization of normalize(p) over Z by Kronecker's method.
inline Factorization kronecker_factor(const LaurentPoly& p) {
  const LaurentPoly q = normalize(p);
  if (q.degree() > kMaxFactorDegree) throw std::domain_error("degree bound exceeded");
  Factorization out;
  out.content = content(q);
  LaurentPoly rest = *divide_exact(q, LaurentPoly(out.content));
  // Smallest degrees first: any factor found at degree k is irreducible
  // because nothing of lower degree divides what remains.
  int k = 1;
  while (2 * k <= rest.degree()) {
    if (auto g = detail::KroneckerSearch(rest, k).run()) {
      out.factors.push_back(*g);
      rest = normalize(*divide_exact(rest, *g));
    } else {
      ++k;
    }
  }
  if (rest.degree() >= 1) out.factors.push_back(rest);
  std::sort(out.factors.begin(), out.factors.end());
  if (out.product() != q) throw std::logic_error("Kronecker factorization failed to re-multiply");
  return out;
}

// ---------------------------------------------------------------------------
// Fox-Milnor
// ---------------------------------------------------------------------------

struct FoxMilnorResult {
  bool holds = false;
  std::optional<LaurentPoly> witness;  // f with normalize(f * reciprocal(f)) == normalize(p)
  std::string reason;
};

/// Decide whether p is unit-equivalent to f(t) f(1/t) for an integer polynomial f.
/// Screens first on |p(-1)| being a perfect square and |p(1)| = 1, the values
/// forced for the Alexander polynomial of a knot.
inline FoxMilnorResult is_fox_milnor(const LaurentPoly& p) {
  const LaurentPoly q = normalize(p);
  if (q.degree() > kMaxFactorDegree) throw std::domain_error("degree bound exceeded");
  FoxMilnorResult res;

  const Int at_minus_one = checked_abs(evaluate_int(q, -1));
  if (!is_perfect_square(at_minus_one)) {
    res.reason = "|p(-1)| = " + std::to_string(at_minus_one) + " is not a perfect square";
    return res;
  }
  const Int at_one = checked_abs(evaluate_int(q, 1));
  if (at_one != 1) {
    res.reason = "|p(1)| = " + std::to_string(at_one) + ", not 1";
    return res;
  }

  const Factorization fac = kronecker_factor(q);
  const Int root = exact_isqrt(fac.content);
  if (root < 0) {
    res.reason = "content " + std::to_string(fac.content) + " is not a perfect square";
    return res;
  }

  std::map<LaurentPoly, int> mult;
  for (const auto& g : fac.factors) ++mult[g];

  LaurentPoly witness(root);
  for (const auto& [g, e] : mult) {
    const LaurentPoly partner = reciprocal(g);
    if (partner == g) {
      if (e % 2 != 0) {
        res.reason = "self-reciprocal factor " + g.str() + " has odd multiplicity";
        return res;
      }
      for (int i = 0; i < e / 2; ++i) witness *= g;
      continue;
    }
    auto it = mult.find(partner);
    if (it == mult.end() || it->second != e) {
      res.reason = "factor " + g.str() + " is not matched by its reciprocal " + partner.str();
      return res;
    }
    // Take the member of the pair whose constant term is no larger than its leading term.
    const bool take = checked_abs(g.trailing()) < checked_abs(g.leading()) ||
                      (checked_abs(g.trailing()) == checked_abs(g.leading()) && g < partner);
    if (take)
      for (int i = 0; i < e; ++i) witness *= g;
  }

  if (normalize(witness * reciprocal(witness)) != q)
    throw std::logic_error("Fox-Milnor witness does not reproduce the polynomial");
  res.holds = true;
  res.witness = normalize(witness);
  res.reason = "factors pair up under t -> 1/t";
  return res;
}

}  // namespace slicekit
