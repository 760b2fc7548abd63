#include <catch_amalgamated.hpp>

#include <slicekit/generators.hpp>
#include <slicekit/io.hpp>
#include <slicekit/laurent.hpp>

using namespace slicekit;

namespace {

LaurentPoly P(std::vector<Int> c, int min_exp = 0) { return LaurentPoly(min_exp, c); }

// Rational roots of an integer polynomial by the rational root test.
bool has_rational_root(const LaurentPoly& f) {
  const Int a0 = f.coefficient(0), an = f.leading();
  if (a0 == 0) return true;
  for (Int p : detail::signed_divisors(a0))
    for (Int q : detail::signed_divisors(an))
      if (q > 0 && evaluate(f, Rational(p, q)) == Rational(0)) return true;
  return false;
}

}  // namespace

TEST_CASE("normalize picks lowest exponent 0 and a positive leading coefficient") {
  CHECK(normalize(LaurentPoly::t()) == LaurentPoly(1));
  CHECK(normalize(P({-2, 5, -2}, 0)) == P({2, -5, 2}));
  CHECK(normalize(P({-2, 5, -2}, -3)) == P({2, -5, 2}));
  CHECK(normalize(LaurentPoly(-7)) == LaurentPoly(7));
  CHECK_THROWS_WITH(normalize(LaurentPoly{}), "zero has no canonical form");
  CHECK(is_normalized(P({4, -9, 4})));
  CHECK_FALSE(is_normalized(P({4, -9, 4}, 1)));
  CHECK(unit_equivalent(P({1, -1, 1}, -1), P({-1, 1, -1}, 5)));
}

TEST_CASE("evaluation is exact") {
  CHECK(evaluate(P({4, -9, 4}), Rational(-1)) == Rational(17));
  CHECK(evaluate(P({1, 1, 3, -11, 3, 1, 1}), Rational(-1)) == Rational(17));
  CHECK(evaluate(LaurentPoly(5), Rational(3, 7)) == Rational(5));
  CHECK(evaluate(P({1, 1}, -1), Rational(2)) == Rational(3, 2));
  CHECK_THROWS_AS(evaluate(P({1, 1}, -1), Rational(0)), std::domain_error);
  CHECK(evaluate_int(P({2, -5, 2}), 1) == -1);
}

TEST_CASE("reciprocal and symmetry") {
  CHECK(reciprocal(P({1, 2, 3})) == P({3, 2, 1}));
  CHECK(is_symmetric(P({1, -3, 1})));
  CHECK_FALSE(is_symmetric(P({1, 2})));
  CHECK(is_symmetric(P({2, -5, 2})));
}

TEST_CASE("exact division") {
  auto q = divide_exact(P({2, -5, 2}), P({-2, 1}));
  REQUIRE(q);
  CHECK(*q == P({-1, 2}));
  CHECK_FALSE(divide_exact(P({1, 0, 1}), P({1, 1})));
  CHECK(*divide_exact(P({1, 1}, 3), P({1}, 1)) == P({1, 1}, 2));
}

TEST_CASE("string form is ascending") {
  CHECK(P({4, -9, 4}).str() == "4 - 9t + 4t^2");
  CHECK(P({-1, 2}).str() == "-1 + 2t");
  CHECK(LaurentPoly{}.str() == "0");
}

TEST_CASE("Kronecker factorization") {
  SECTION("two linear factors") {
    auto f = kronecker_factor(P({2, -5, 2}));
    CHECK(f.content == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == P({-2, 1}));
    CHECK(f.factors[1] == P({-1, 2}));
  }
  SECTION("content and repeated factor") {
    auto f = kronecker_factor(P({4, -8, 4}));
    CHECK(f.content == 4);
    CHECK(f.factors == std::vector<LaurentPoly>{P({-1, 1}), P({-1, 1})});
  }
  SECTION("irreducible inputs stay whole") {
    CHECK(kronecker_factor(P({4, -9, 4})).factors == std::vector<LaurentPoly>{P({4, -9, 4})});
    CHECK(kronecker_factor(P({1, 1, 3, -11, 3, 1, 1})).product() == P({1, 1, 3, -11, 3, 1, 1}));
  }
  SECTION("quartic with two quadratic factors") {
    const LaurentPoly a = P({1, 1, 1}), b = P({2, 0, 1});
    auto f = kronecker_factor(a * b);
    CHECK(f.factors.size() == 2);
    CHECK(f.product() == a * b);
  }
  SECTION("bounds") {
    CHECK_THROWS_WITH(kronecker_factor(P(std::vector<Int>(10, 1))), "degree bound exceeded");
  }
}

TEST_CASE("Kronecker factors re-multiply and linear-free factors have no rational roots") {
  gen::Rng rng(20160801);
  for (int i = 0; i < 200; ++i) {
    auto [p, parts] = gen::polynomial_product(rng, 6);
    const auto f = kronecker_factor(p);
    REQUIRE(f.product() == normalize(p));
    for (const auto& g : f.factors) {
      CHECK(is_normalized(g));
      CHECK(content(g) == 1);
      if (g.degree() == 2 || g.degree() == 3) CHECK_FALSE(has_rational_root(g));
    }
  }
}

TEST_CASE("Fox-Milnor examples") {
  SECTION("stevedore-type polynomial holds with an explicit witness") {
    auto r = is_fox_milnor(P({2, -5, 2}));
    REQUIRE(r.holds);
    REQUIRE(r.witness);
    CHECK(*r.witness == P({-1, 2}));
    CHECK(normalize(*r.witness * r.witness->inverted()) == P({2, -5, 2}));
  }
  SECTION("value at 1 screened") {
    CHECK(is_fox_milnor(P({-1, 1}) * P({-1, 1})).reason.find("p(1)") != std::string::npos);
  }
  SECTION("non-square value at -1") {
    for (auto p : {P({4, -9, 4}), P({1, 1, 3, -11, 3, 1, 1}), P({1, -1, 1}), P({1, -3, 1})}) {
      auto r = is_fox_milnor(p);
      CHECK_FALSE(r.holds);
      CHECK_FALSE(r.witness);
    }
  }
  SECTION("self-reciprocal factor squared") {
    auto r = is_fox_milnor(P({1, -2, 3, -2, 1}));
    REQUIRE(r.holds);
    CHECK(normalize(*r.witness) == P({1, -1, 1}));
  }
  SECTION("self-reciprocal factor to an odd power") {
    // irreducible, p(-1) = 49 and p(1) = 1, so only the pairing step rejects it
    auto r = is_fox_milnor(P({1, -12, 23, -12, 1}));
    CHECK_FALSE(r.holds);
    CHECK(r.reason.find("odd multiplicity") != std::string::npos);
  }
  SECTION("trivial polynomial") {
    auto r = is_fox_milnor(LaurentPoly(1));
    CHECK(r.holds);
  }
}

TEST_CASE("Fox-Milnor holds on random f(t) f(1/t) with |f(1)| = 1") {
  gen::Rng rng(7);
  int tested = 0;
  while (tested < 100) {
    auto f = gen::polynomial(rng, static_cast<int>(gen::uniform(rng, 1, 4)), 3);
    auto c = f.coefficients();
    c.front() -= evaluate_int(f, 1) - 1;
    if (c.front() == 0) continue;
    f = P(c);
    const LaurentPoly p = f * f.inverted();
    auto r = is_fox_milnor(p);
    REQUIRE(r.holds);
    CHECK(normalize(*r.witness * r.witness->inverted()) == normalize(p));
    ++tested;
  }
}

TEST_CASE("polynomial JSON round trip and validation") {
  using io::json;
  const LaurentPoly p = P({2, -5, 2}, -1);
  CHECK(io::poly_from_json(io::to_json(p)) == p);
  CHECK(io::to_json(P({4, -9, 4})) == json::parse(R"({"min_exp":0,"coeffs":[4,-9,4]})"));
  CHECK_THROWS(io::poly_from_json(json::parse(R"({"min_exp":0,"coeffs":[0,1]})")));
  CHECK_THROWS(io::poly_from_json(json::parse(R"({"min_exp":0,"coeffs":[1,0]})")));
  CHECK_THROWS(io::poly_from_json(json::parse(R"({"coeffs":[1]})")));
}
