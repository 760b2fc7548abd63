#pragma once
/**
 * @file annulus.hpp
 * @brief Bookkeeping for the n-twist annulus modification: the regluing map
 *        rho_n on the boundary torus, the curve identifications it induces at
 *        the two ends of the annulus, and the resulting Dehn surgery
 *        instructions on eta1 and eta2.
 *
 * Curve classes are written a*lambda + b*mu in (longitude, meridian) coordinates.
 */

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "matrix.hpp"
#include "surgery.hpp"

namespace slicekit {

struct AnnulusModSpec {
  Int l = 0;  // lk(eta1, eta2)
  Int n = 0;  // twist parameter
};

/// Mapping class of the torus as a 2x2 integer matrix; column j is the image of
/// basis vector j (longitude, meridian).
class TorusAutomorphism {
 public:
  explicit TorusAutomorphism(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2) throw std::invalid_argument("torus automorphism must be 2x2");
    const Int d = determinant(m_);
    if (d != 1 && d != -1) throw std::invalid_argument("torus automorphism must have determinant +-1");
  }

  const IntMatrix& matrix() const { return m_; }
  Int det() const { return determinant(m_); }
  std::array<Int, 2> apply(std::array<Int, 2> v) const {
    auto r = multiply(m_, IntVector{v[0], v[1]});
    return {r[0], r[1]};
  }

  friend bool operator==(const TorusAutomorphism&, const TorusAutomorphism&) = default;

 private:
  IntMatrix m_;
};

/// rho_n: longitude -> longitude + l meridian, meridian -> n longitude + (nl+1) meridian.
inline TorusAutomorphism rho(const AnnulusModSpec& s) {
  const Int nl = checked_mul(s.n, s.l);
  return TorusAutomorphism(IntMatrix{{1, s.n}, {s.l, checked_add(nl, 1)}});
}

/// a*lambda_i + b*mu_i on the boundary torus at end i (0 or 1) of the annulus.
struct CurveClass {
  Int a = 0;
  Int b = 0;
  int end = 0;

  std::string str() const {
    const std::string k = std::to_string(end + 1);
    return std::to_string(a) + " lambda" + k + (b < 0 ? " - " : " + ") + std::to_string(checked_abs(b)) + " mu" + k;
  }
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct GluingIdentification {
  std::string source;  // the curve on S^1 x dD^2 x {end}
  CurveClass image;
};

/// Frame at each end: columns are the images of the product longitude and
/// meridian before regluing. End 0 is (lambda1, mu1); end 1 is
/// (lambda2 + 2l mu2, -mu2).
inline IntMatrix end_frame(const AnnulusModSpec& s, int end) {
  if (end == 0) return IntMatrix::identity(2);
  return IntMatrix{{1, 0}, {checked_mul(2, s.l), -1}};
}

/// The four identifications after regluing by rho_n, in the order
/// core at end 0, meridian at end 0, core at end 1, meridian at end 1.
inline std::vector<GluingIdentification> gluing_images(const AnnulusModSpec& s) {
  const IntMatrix r = rho(s).matrix();
  std::vector<GluingIdentification> out;
  for (int end : {0, 1}) {
    const IntMatrix composite = multiply(end_frame(s, end), r);
    const std::string t = std::to_string(end);
    out.push_back({"S^1 x {1} x {" + t + "}", {composite(0, 0), composite(1, 0), end}});
    out.push_back({"{1} x dD^2 x {" + t + "}", {composite(0, 1), composite(1, 1), end}});
  }
  return out;
}

struct SurgeryInstruction {
  std::string curve;
  SurgeryCoefficient coefficient;

  friend bool operator==(const SurgeryInstruction&, const SurgeryInstruction&) = default;
};

using InstructionPair = std::array<SurgeryInstruction, 2>;

/// The reglued meridian a*lambda + b*mu bounds a disk, which is b/a surgery.
inline SurgeryCoefficient coefficient_of_meridian_image(const CurveClass& c) { return {c.b, c.a}; }

/// Dehn surgery on eta1 and eta2 realizing the modification on the boundary:
/// (nl+1)/n and (nl-1)/n, both infinity when n = 0.
inline InstructionPair boundary_instructions(const AnnulusModSpec& s) {
  const auto images = gluing_images(s);
  return {SurgeryInstruction{"eta1", coefficient_of_meridian_image(images[1].image)},
          SurgeryInstruction{"eta2", coefficient_of_meridian_image(images[3].image)}};
}

struct AnnulusTwist {
  InstructionPair instructions;
  Int linking = 0;  // lk(eta1, eta2) = -epsilon
};

/// n-fold annulus twist for an annulus presentation with framing epsilon:
/// (-n eps + 1)/n on eta1 and (-n eps - 1)/n on eta2.
inline AnnulusTwist annulus_twist_family(int epsilon, Int n) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  const Int ne = checked_mul(n, epsilon);
  AnnulusTwist out;
  out.instructions = {SurgeryInstruction{"eta1", SurgeryCoefficient(checked_add(checked_neg(ne), 1), n)},
                      SurgeryInstruction{"eta2", SurgeryCoefficient(checked_sub(checked_neg(ne), 1), n)}};
  out.linking = -epsilon;
  return out;
}

enum class StandardCertificate { certified, not_applicable };

inline std::string to_string(StandardCertificate c) {
  return c == StandardCertificate::certified ? "0-standard certified" : "criterion not applicable";
}

/// With l = 0, an annulus with exactly one index-1 and one index-2 critical
/// point is 0-standard. Any other input is outside the criterion; the answer is
/// never "not standard".
inline StandardCertificate certify_standard(Int l, Int index1_count, Int index2_count) {
  if (index1_count < 0 || index2_count < 0) throw std::invalid_argument("critical point counts must be nonnegative");
  return (l == 0 && index1_count == 1 && index2_count == 1) ? StandardCertificate::certified
                                                            : StandardCertificate::not_applicable;
}

}  // namespace slicekit
