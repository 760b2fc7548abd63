// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <slicekit/annulus.hpp>
#include <slicekit/catalog.hpp>
#include <slicekit/generators.hpp>
#include <slicekit/laurent.hpp>
#include <slicekit/oracle.hpp>
#include <slicekit/seifert.hpp>
#include <slicekit/surgery.hpp>

using namespace slicekit;

namespace {

using SC = SurgeryCoefficient;

struct Check {
  std::ostringstream failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures << (failures.tellp() > 0 ? "; " : "") << what;
  }
};

int failed = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const std::string why = c.failures.str();
  std::cout << (why.empty() ? "PASS" : "FAIL") << "  AC" << id << "  " << title;
  if (!why.empty()) {
    std::cout << "  [" << why << "]";
    ++failed;
  }
  std::cout << '\n';
}

SeifertMatrix seifert(std::initializer_list<std::initializer_list<Int>> rows) {
  return SeifertMatrix::validate(IntMatrix(rows));
}

}  // namespace

int main() {
  const Catalog catalog = catalog_load();
  const SeifertMatrix mR = seifert({{2, 1}, {0, 0}});
  const SeifertMatrix mR1 = seifert({{2, 0}, {-1, -1}});

  criterion(1, "Alexander polynomials of R and R1, Fox-Milnor witness", [&](Check& c) {
    c.expect(alexander(mR) == LaurentPoly(1), "alexander(R) != 1");
    const LaurentPoly want(0, {2, -5, 2});
    c.expect(alexander(mR1) == want, "alexander(R1) = " + alexander(mR1).str());
    const auto fm = is_fox_milnor(want);
    c.expect(fm.holds && fm.witness.has_value(), "Fox-Milnor does not hold");
    if (fm.witness) c.expect(normalize(*fm.witness * fm.witness->inverted()) == want, "witness does not reproduce");
  });

  criterion(2, "derivative polynomials evaluate to 17 at -1 and fail Fox-Milnor", [&](Check& c) {
    for (const char* name : {"R1.gamma1", "R1.gamma2"}) {
      const auto& p = *catalog.find(name).alexander_claimed;
      const Rational v = evaluate(p, Rational(-1));
      c.expect(v == Rational(17), std::string(name) + "(-1) = " + v.str());
      c.expect(!is_perfect_square(17), "17 reported square");
      c.expect(!is_fox_milnor(p).holds, std::string(name) + " passes Fox-Milnor");
    }
  });

  criterion(3, "metabolizers of R1 within bound 5 are +-(1,1), +-(1,-2)", [&](Check& c) {
    std::set<HomologyClass> got;
    for (const auto& m : metabolizer_search(mR1, 5))
      for (const auto& v : m.basis) {
        got.insert(v.canonical_sign());
        c.expect(seifert_pairing(mR1, v, v) == 0, "pairing nonzero on " + v.str());
      }
    const std::set<HomologyClass> want{HomologyClass{{1, 1}}, HomologyClass{{1, -2}}};
    c.expect(got == want, "unexpected metabolizer set");
  });

  criterion(4, "twisted pair family reduces to S^3 on [-5,5]^2 with labels 1/n, -1/n, -1/l", [&](Check& c) {
    for (Int n = -5; n <= 5; ++n)
      for (Int l = -5; l <= 5; ++l) {
        const auto r = reduce_twisted_pair(n, l);
        const std::string at = "(n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")";
        c.expect(r.is_s3, "not S^3 at " + at);
        if (n == 0 || l == 0 || r.trace.size() < 3) continue;
        const auto& first = r.trace[0].after;
        c.expect(first.r1 == SC(1, n) && first.r2 == SC(-1, n) && first.meridians.size() == 1 &&
                     first.meridians[0].coefficient == SC(-1, l),
                 "labels differ at " + at);
      }
  });

  criterion(5, "|det| of the presentation is invariant under 1000 random moves; 1 on the family", [&](Check& c) {
    gen::Rng rng(0x5eed2016);
    int moves = 0;
    while (moves < 1000) {
      SchemaDiagram d = gen::schema_diagram(rng);
      for (int k = 0; k < 8 && moves < 1000; ++k) {
        const auto step = gen::schema_move(rng, d);
        if (!step) continue;
        c.expect(first_homology_order(step->after) == first_homology_order(d), "changed by " + step->description);
        d = step->after;
        ++moves;
      }
    }
    for (Int n = -5; n <= 5; ++n)
      for (Int l = -5; l <= 5; ++l) {
        const auto d = twisted_pair_diagram(n, l);
        const auto a = d.to_abstract();
        bool finite = true;
        for (const auto& comp : a.components) finite = finite && !comp.coefficient.is_infinite();
        const Int order = finite ? checked_abs(determinant(linking_presentation(a))) : first_homology_order(d);
        c.expect(order == 1, "|det| != 1 at n=" + std::to_string(n) + ", l=" + std::to_string(l));
      }
  });

  criterion(6, "gluing images reproduce the four identifications; det rho = 1 on [-10,10]^2", [&](Check& c) {
    gen::Rng rng(6);
    for (int i = 0; i < 20; ++i) {
      const Int l = gen::uniform(rng, -1000, 1000), n = gen::uniform(rng, -1000, 1000);
      const auto g = gluing_images({l, n});
      c.expect(g.size() == 4, "wrong count");
      if (g.size() != 4) return;
      c.expect(g[0].image == CurveClass{1, l, 0}, "lambda1 + l mu1");
      c.expect(g[1].image == CurveClass{n, n * l + 1, 0}, "n lambda1 + (nl+1) mu1");
      c.expect(g[2].image == CurveClass{1, l, 1}, "lambda2 + l mu2");
      c.expect(g[3].image == CurveClass{n, n * l - 1, 1}, "n lambda2 + (nl-1) mu2");
    }
    for (Int l = -10; l <= 10; ++l)
      for (Int n = -10; n <= 10; ++n) c.expect(rho({l, n}).det() == 1, "det rho != 1");
  });

  criterion(7, "annulus twist family for epsilon = -1 equals boundary instructions at l = 1", [&](Check& c) {
    c.expect(catalog.find("8_20").annulus_epsilon == -1, "8_20 epsilon");
    for (Int n = -5; n <= 5; ++n) {
      if (n == 0) continue;
      const auto f = annulus_twist_family(-1, n);
      c.expect(f.instructions[0].coefficient == SC(n + 1, n) && f.instructions[1].coefficient == SC(n - 1, n),
               "family at n=" + std::to_string(n));
      c.expect(f.instructions == boundary_instructions({1, n}), "boundary mismatch at n=" + std::to_string(n));
    }
  });

  criterion(8, "coefficients (2, 0) with lk = 1 give a homology sphere", [&](Check& c) {
    AbstractDiagram d;
    d.components = {{"eta1", SC(2), true}, {"eta2", SC(0), true}};
    d.linking = IntMatrix{{0, 1}, {1, 0}};
    c.expect(checked_abs(determinant(linking_presentation(d))) == 1, "|det| != 1");
  });

  criterion(9, "property suites: symmetry, |Delta(1)| = 1, Arf oracle, Kronecker re-multiplication", [&](Check& c) {
    gen::Rng rng(9);
    for (int i = 0; i < 500; ++i) {
      const auto s = gen::seifert_matrix(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 2)));
      const LaurentPoly d = alexander(s);
      c.expect(reciprocal(d) == d, "asymmetric Delta");
      c.expect(checked_abs(evaluate_int(d, 1)) == 1, "|Delta(1)| != 1");
    }
    for (const auto& e : catalog.entries())
      if (auto s = e.seifert()) c.expect(arf(*s) == oracle::arf_quadratic_form(*s), "Arf disagrees on " + e.name);
    for (int i = 0; i < 200; ++i) {
      const auto [p, parts] = gen::polynomial_product(rng, 6);
      c.expect(kronecker_factor(p).product() == normalize(p), "refactorization of " + p.str());
    }
  });

  std::cout << (failed == 0 ? "all 9 criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
