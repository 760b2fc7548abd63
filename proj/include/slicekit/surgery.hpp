#pragma once
/**
 * @file surgery.hpp
 * @brief Rational surgery diagrams and the moves used to recognize S^3.
 *
 * Two layers:
 *  - AbstractDiagram: coefficients plus a linking matrix. Sound for H_1 of the
 *    surgered manifold, knows nothing about geometry.
 *  - SchemaDiagram: a parallel pair of round unknots joined by a full-twist box,
 *    plus round meridian circles around the pair strands. Every component is
 *    unknotted by construction and splitness is decided syntactically, so
 *    reductions inside this family can certify S^3.
 *
 * S^3 recognition is conservative: true comes with an explicit move trace,
 * false only means no reduction was found.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "matrix.hpp"

namespace slicekit {

/// Dehn surgery coefficient p/q in lowest terms with q >= 0; infinity is 1/0.
class SurgeryCoefficient {
 public:
  SurgeryCoefficient() = default;
  SurgeryCoefficient(Int p, Int q) : p_(p), q_(q) {  // NOLINT(google-explicit-constructor)
    if (p_ == 0 && q_ == 0) throw std::invalid_argument("0/0 is not a surgery coefficient");
    if (q_ < 0) p_ = checked_neg(p_), q_ = checked_neg(q_);
    if (q_ == 0) {
      p_ = 1;
      return;
    }
    Int g = gcd(p_, q_);
    p_ /= g;
    q_ /= g;
  }
  SurgeryCoefficient(Int integer) : SurgeryCoefficient(integer, 1) {}  // NOLINT(google-explicit-constructor)

  static SurgeryCoefficient infinity() { return {1, 0}; }

  /// Accepts "p/q", "p", "inf" (also "infinity", "1/0").
  static SurgeryCoefficient parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    auto parse_int = [&](const std::string& s) -> Int {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (s.empty() || used != s.size()) throw std::invalid_argument("malformed surgery coefficient \"" + text + "\"");
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return {parse_int(text), 1};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  }

  Int p() const { return p_; }
  Int q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }

  /// Wire form: "p/q" or "inf".
  std::string str() const { return is_infinite() ? "inf" : std::to_string(p_) + "/" + std::to_string(q_); }
  /// Display form: integers without a denominator.
  std::string pretty() const { return q_ == 1 ? std::to_string(p_) : str(); }

  /// r + k, with infinity absorbing.
  SurgeryCoefficient plus(Int k) const { return {checked_add(p_, checked_mul(k, q_)), q_}; }
  /// The coefficient of the twisted circle itself: p/q -> p/(q + t p).
  SurgeryCoefficient twisted(Int t) const { return {p_, checked_add(q_, checked_mul(t, p_))}; }

  friend bool operator==(const SurgeryCoefficient&, const SurgeryCoefficient&) = default;

 private:
  Int p_ = 1;
  Int q_ = 0;
};

// ---------------------------------------------------------------------------
// Abstract layer
// ---------------------------------------------------------------------------

struct AbstractComponent {
  std::string name;
  SurgeryCoefficient coefficient;
  bool unknotted = true;

  friend bool operator==(const AbstractComponent&, const AbstractComponent&) = default;
};

struct AbstractDiagram {
  std::vector<AbstractComponent> components;
  IntMatrix linking;  // symmetric, zero diagonal

  std::size_t size() const { return components.size(); }

  void check() const {
    if (linking.rows() != components.size() || linking.cols() != components.size())
      throw std::invalid_argument("linking matrix dimension does not match component count");
    for (std::size_t i = 0; i < size(); ++i) {
      if (linking(i, i) != 0) throw std::invalid_argument("linking matrix must have zero diagonal");
      for (std::size_t j = 0; j < i; ++j)
        if (linking(i, j) != linking(j, i)) throw std::invalid_argument("linking matrix must be symmetric");
    }
  }

  friend bool operator==(const AbstractDiagram&, const AbstractDiagram&) = default;
};

/// How a component meets the spanning disk of the twisted circle.
struct DiskCrossing {
  Int algebraic = 0;  // signed count, equals lk with the twisted circle
  Int geometric = 0;  // number of strands through the disk

  friend bool operator==(const DiskCrossing&, const DiskCrossing&) = default;
};

/// Presentation matrix of H_1 of the surgered manifold: A_ii = p_i, A_ij = q_i lk(i, j).
inline IntMatrix linking_presentation(const AbstractDiagram& d) {
  d.check();
  const std::size_t n = d.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = d.components[i].coefficient;
    if (c.is_infinite()) throw std::domain_error("component " + d.components[i].name + " has coefficient inf; delete it first");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = i == j ? c.p() : checked_mul(c.q(), d.linking(i, j));
  }
  return a;
}

inline AbstractDiagram delete_infinity(const AbstractDiagram& d, std::size_t i) {
  d.check();
  if (i >= d.size()) throw std::out_of_range("no such component");
  if (!d.components[i].coefficient.is_infinite())
    throw std::domain_error("component " + d.components[i].name + " has a finite coefficient");
  AbstractDiagram out;
  out.linking = IntMatrix(d.size() - 1, d.size() - 1);
  for (std::size_t a = 0, ra = 0; a < d.size(); ++a) {
    if (a == i) continue;
    out.components.push_back(d.components[a]);
    for (std::size_t b = 0, rb = 0; b < d.size(); ++b) {
      if (b == i) continue;
      out.linking(ra, rb++) = d.linking(a, b);
    }
    ++ra;
  }
  return out;
}

/// Order of H_1 (0 when infinite) after discarding infinity components.
inline Int first_homology_order(AbstractDiagram d) {
  for (std::size_t i = d.size(); i-- > 0;)
    if (d.components[i].coefficient.is_infinite()) d = delete_infinity(d, i);
  return checked_abs(determinant(linking_presentation(d)));
}

/// Rolfsen twist by t along the disk bounded by unknotted component i.
/// `through` lists, per component, how it crosses that disk; the entry for i is ignored.
inline AbstractDiagram rolfsen_twist(const AbstractDiagram& d, std::size_t i, Int t,
                                     const std::optional<std::vector<DiskCrossing>>& through) {
  d.check();
  if (i >= d.size()) throw std::out_of_range("no such component");
  if (!d.components[i].unknotted) throw std::domain_error("Rolfsen twist needs an unknotted component");
  if (!through || through->size() != d.size()) throw std::invalid_argument("through-data missing");
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == i) continue;
    const auto& x = (*through)[j];
    if (x.algebraic != d.linking(i, j))
      throw std::invalid_argument("through-data for " + d.components[j].name + " disagrees with the linking number");
    if (x.geometric < checked_abs(x.algebraic) || (x.geometric - x.algebraic) % 2 != 0)
      throw std::invalid_argument("inconsistent geometric crossing count for " + d.components[j].name);
  }
  if (t == 0) return d;

  AbstractDiagram out = d;
  out.components[i].coefficient = d.components[i].coefficient.twisted(t);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == i) continue;
    const Int lj = (*through)[j].algebraic;
    out.components[j].coefficient = d.components[j].coefficient.plus(checked_mul(t, checked_mul(lj, lj)));
    // A single strand through the disk keeps its knot type; more may not.
    if ((*through)[j].geometric > 1) out.components[j].unknotted = false;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k == i || k == j) continue;
      out.linking(j, k) = checked_add(d.linking(j, k), checked_mul(t, checked_mul(lj, (*through)[k].algebraic)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schema layer
// ---------------------------------------------------------------------------

/// A round circle around the parallel strands of the listed pair members.
struct Meridian {
  SurgeryCoefficient coefficient;
  bool first = false;
  bool second = false;

  friend bool operator==(const Meridian&, const Meridian&) = default;
};

/// Identifies a component independently of how many others have been deleted.
struct ComponentRef {
  enum class Role { eta1, eta2, meridian };
  Role role = Role::eta1;
  std::size_t index = 0;  // meridian index (0-based) when role == meridian

  static ComponentRef eta1() { return {Role::eta1, 0}; }
  static ComponentRef eta2() { return {Role::eta2, 0}; }
  static ComponentRef meridian(std::size_t k) { return {Role::meridian, k}; }

  /// "eta1", "eta2", "m1", "m2", ...
  std::string name() const {
    switch (role) {
      case Role::eta1: return "eta1";
      case Role::eta2: return "eta2";
      default: return "m" + std::to_string(index + 1);
    }
  }
  static ComponentRef parse(const std::string& s) {
    if (s == "eta1") return eta1();
    if (s == "eta2") return eta2();
    if (s.size() > 1 && s[0] == 'm') {
      std::size_t k = std::stoul(s.substr(1));
      if (k >= 1) return meridian(k - 1);
    }
    throw std::invalid_argument("unknown component \"" + s + "\"");
  }

  friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
};

/// Parallel pair eta1, eta2 joined by a box of `twist` right-handed full twists
/// (so lk(eta1, eta2) = twist), plus meridian circles. Either pair member may
/// be absent once deleted.
struct SchemaDiagram {
  Int twist = 0;
  std::optional<SurgeryCoefficient> r1;
  std::optional<SurgeryCoefficient> r2;
  std::vector<Meridian> meridians;

  /// Present components in flattening order: eta1, eta2, then meridians.
  std::vector<ComponentRef> components() const {
    std::vector<ComponentRef> out;
    if (r1) out.push_back(ComponentRef::eta1());
    if (r2) out.push_back(ComponentRef::eta2());
    for (std::size_t k = 0; k < meridians.size(); ++k) out.push_back(ComponentRef::meridian(k));
    return out;
  }
  std::size_t size() const { return components().size(); }
  bool empty() const { return size() == 0; }

  bool has(const ComponentRef& c) const {
    switch (c.role) {
      case ComponentRef::Role::eta1: return r1.has_value();
      case ComponentRef::Role::eta2: return r2.has_value();
      default: return c.index < meridians.size();
    }
  }

  const SurgeryCoefficient& coefficient(const ComponentRef& c) const {
    if (!has(c)) throw std::out_of_range("no component " + c.name());
    switch (c.role) {
      case ComponentRef::Role::eta1: return *r1;
      case ComponentRef::Role::eta2: return *r2;
      default: return meridians[c.index].coefficient;
    }
  }
  SurgeryCoefficient& coefficient(const ComponentRef& c) {
    return const_cast<SurgeryCoefficient&>(std::as_const(*this).coefficient(c));
  }

  Int pair_linking() const { return r1 && r2 ? twist : 0; }

  /// Signed and geometric crossings of component `other` with the disk bounded by `c`.
  DiskCrossing crossing(const ComponentRef& c, const ComponentRef& other) const {
    using Role = ComponentRef::Role;
    if (c == other) return {};
    auto targets = [&](const ComponentRef& m, Role member) {
      const Meridian& mer = meridians[m.index];
      return member == Role::eta1 ? mer.first : mer.second;
    };
    if (c.role == Role::meridian) {
      if (other.role == Role::meridian) return {};
      return targets(c, other.role) ? DiskCrossing{1, 1} : DiskCrossing{};
    }
    if (other.role == Role::meridian) return targets(other, c.role) ? DiskCrossing{1, 1} : DiskCrossing{};
    const Int l = pair_linking();
    return {l, checked_abs(l)};
  }

  std::vector<DiskCrossing> through(const ComponentRef& c) const {
    std::vector<DiskCrossing> out;
    for (const auto& o : components()) out.push_back(crossing(c, o));
    return out;
  }

  /// Linking number of two distinct components.
  Int linking(const ComponentRef& a, const ComponentRef& b) const { return crossing(a, b).algebraic; }

  /// Split from everything else: no linking and no geometric entanglement in this family.
  bool is_split(const ComponentRef& c) const {
    for (const auto& o : components())
      if (!(o == c) && crossing(c, o).geometric != 0) return false;
    return true;
  }

  AbstractDiagram to_abstract() const {
    const auto comps = components();
    AbstractDiagram d;
    d.linking = IntMatrix(comps.size(), comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      d.components.push_back({comps[i].name(), coefficient(comps[i]), true});
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (i != j) d.linking(i, j) = linking(comps[i], comps[j]);
    }
    return d;
  }

  std::size_t flat_index(const ComponentRef& c) const {
    const auto comps = components();
    auto it = std::find(comps.begin(), comps.end(), c);
    if (it == comps.end()) throw std::out_of_range("no component " + c.name());
    return static_cast<std::size_t>(it - comps.begin());
  }

  friend bool operator==(const SchemaDiagram&, const SchemaDiagram&) = default;
};

/// Rolfsen twist inside the schema family. Twisting a pair member while the
/// twist box is nonzero, or when two or more meridians pass through its disk,
/// would leave the family and is rejected.
inline SchemaDiagram rolfsen_twist(const SchemaDiagram& d, const ComponentRef& c, Int t) {
  if (!d.has(c)) throw std::out_of_range("no component " + c.name());
  if (t == 0) return d;
  SchemaDiagram out = d;
  out.coefficient(c) = d.coefficient(c).twisted(t);

  if (c.role == ComponentRef::Role::meridian) {
    const Meridian& m = d.meridians[c.index];
    if (m.first && d.r1) out.r1 = d.r1->plus(t);
    if (m.second && d.r2) out.r2 = d.r2->plus(t);
    if (m.first && m.second && d.r1 && d.r2) out.twist = checked_add(d.twist, t);
    return out;
  }

  if (d.pair_linking() != 0)
    throw std::domain_error("twist on " + c.name() + " leaves the schema family: the pair strands are twisted together");
  const bool on_first = c.role == ComponentRef::Role::eta1;
  std::size_t crossing_meridians = 0;
  for (const auto& m : d.meridians) crossing_meridians += (on_first ? m.first : m.second) ? 1 : 0;
  if (crossing_meridians > 1)
    throw std::domain_error("twist on " + c.name() + " leaves the schema family: several meridians cross its disk");
  for (std::size_t k = 0; k < d.meridians.size(); ++k)
    if (on_first ? d.meridians[k].first : d.meridians[k].second)
      out.meridians[k].coefficient = d.meridians[k].coefficient.plus(t);
  return out;
}

inline SchemaDiagram delete_infinity(const SchemaDiagram& d, const ComponentRef& c) {
  if (!d.coefficient(c).is_infinite()) throw std::domain_error("component " + c.name() + " has a finite coefficient");
  SchemaDiagram out = d;
  switch (c.role) {
    case ComponentRef::Role::eta1:
      out.r1.reset();
      for (auto& m : out.meridians) m.first = false;
      out.twist = 0;
      break;
    case ComponentRef::Role::eta2:
      out.r2.reset();
      for (auto& m : out.meridians) m.second = false;
      out.twist = 0;
      break;
    default:
      out.meridians.erase(out.meridians.begin() + static_cast<std::ptrdiff_t>(c.index));
  }
  return out;
}

inline IntMatrix linking_presentation(const SchemaDiagram& d) { return linking_presentation(d.to_abstract()); }
inline Int first_homology_order(const SchemaDiagram& d) { return first_homology_order(d.to_abstract()); }

struct Move {
  enum class Kind { rolfsen_twist, delete_infinity };
  Kind kind = Kind::rolfsen_twist;
  std::string component;
  Int twist = 0;
  SchemaDiagram after;
  std::string note;
};

struct Reduction {
  bool is_s3 = false;
  SchemaDiagram initial;
  std::vector<Move> trace;
  SchemaDiagram residual;
};

namespace detail {
inline void record_twist(Reduction& r, const ComponentRef& c, Int t, std::string note = {}) {
  r.residual = rolfsen_twist(r.residual, c, t);
  r.trace.push_back({Move::Kind::rolfsen_twist, c.name(), t, r.residual, std::move(note)});
}
inline void record_delete(Reduction& r, const ComponentRef& c) {
  const std::string name = c.name();
  r.residual = delete_infinity(r.residual, c);
  r.trace.push_back({Move::Kind::delete_infinity, name, 0, r.residual, {}});
}

/// Delete infinity components and clear split unknots with |p| = 1 until stuck.
inline void finish_reduction(Reduction& r) {
  while (true) {
    bool moved = false;
    for (const auto& c : r.residual.components()) {
      if (r.residual.coefficient(c).is_infinite()) {
        record_delete(r, c);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    for (const auto& c : r.residual.components()) {
      const auto& k = r.residual.coefficient(c);
      if (r.residual.is_split(c) && checked_abs(k.p()) == 1) {
        record_twist(r, c, checked_neg(checked_mul(k.q(), k.p())));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  r.is_s3 = r.residual.empty();
}
}  // namespace detail

/// Conservative S^3 recognition by infinity deletions and twists on split unknots.
inline Reduction reduce_to_s3(const SchemaDiagram& d) {
  Reduction r;
  r.initial = d;
  r.residual = d;
  detail::finish_reduction(r);
  return r;
}

inline bool is_s3(const SchemaDiagram& d) { return reduce_to_s3(d).is_s3; }

/// The boundary of the twisted ball: eta1, eta2 with (nl+1)/n and (nl-1)/n,
/// l full twists between them, and an infinity circle around both strands.
inline SchemaDiagram twisted_pair_diagram(Int n, Int l) {
  const Int nl = checked_mul(n, l);
  SchemaDiagram d;
  d.twist = l;
  d.r1 = SurgeryCoefficient(checked_add(nl, 1), n);
  d.r2 = SurgeryCoefficient(checked_sub(nl, 1), n);
  d.meridians.push_back({SurgeryCoefficient::infinity(), true, true});
  return d;
}

/// Scripted reduction: -l twist on the infinity circle, -n on eta1, +n on eta2,
/// then infinity deletions and the residual split unknot.
inline Reduction reduce_twisted_pair(Int n, Int l) {
  Reduction r;
  r.initial = twisted_pair_diagram(n, l);
  r.residual = r.initial;
  detail::record_twist(r, ComponentRef::meridian(0), checked_neg(l));
  detail::record_twist(r, ComponentRef::eta1(), checked_neg(n),
                       n != 0 && l != 0 ? "m1 passes through -(nl+1)/l here; the paired twist on eta2 restores -1/l" : "");
  detail::record_twist(r, ComponentRef::eta2(), n);
  detail::finish_reduction(r);
  return r;
}

}  // namespace slicekit
