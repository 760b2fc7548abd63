#include <catch_amalgamated.hpp>

#include <slicekit/catalog.hpp>

using namespace slicekit;

TEST_CASE("bundled catalog loads strictly") {
  const Catalog c = catalog_load();
  CHECK(c.problems().empty());
  for (const char* name : {"R", "R1", "R1.gamma1", "R1.gamma2", "8_20", "6_1"}) CHECK(c.contains(name));
  CHECK(c.find("R1").seifert()->entries() == IntMatrix{{2, 0}, {-1, -1}});
  CHECK(*c.find("R1.gamma1").alexander_claimed == LaurentPoly(0, {4, -9, 4}));
  CHECK(*c.find("R1.gamma2").alexander_claimed == LaurentPoly(0, {1, 1, 3, -11, 3, 1, 1}));
  CHECK(c.find("8_20").annulus_epsilon == -1);
  CHECK(c.find("R1").derivative_classes.size() == 2);
  CHECK_FALSE(c.find("6_1").seifert());
}

TEST_CASE("missing entries name the entry") {
  const Catalog c = catalog_load();
  CHECK_THROWS_WITH(c.find("9_46"), "catalog entry \"9_46\" not found");
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    Catalog::parse("{\n  \"entries\": [\n    {\"name\": \"X\",, }\n  ]\n}", "bad.json");
    FAIL("no error");
  } catch (const CatalogError& e) {
    CHECK_THAT(e.what(), Catch::Matchers::StartsWith("bad.json:3:"));
  }
}

TEST_CASE("structural errors report the entry's line") {
  const std::string text = "{\"entries\": [\n  {\"name\": \"A\"},\n  {\"name\": \"B\", \"annulus_epsilon\": \"x\"}\n]}";
  try {
    Catalog::parse(text, "c.json");
    FAIL("no error");
  } catch (const CatalogError& e) {
    CHECK_THAT(e.what(), Catch::Matchers::StartsWith("c.json:3:") && Catch::Matchers::ContainsSubstring("\"B\""));
  }
}

TEST_CASE("semantic problems are reported, and strict loading rejects them") {
  const Catalog c = Catalog::read(SLICEKIT_TEST_DATA "/corrupted_catalog.json");
  const auto p = c.problems();
  REQUIRE(p.size() == 0);  // [[2,0],[-1,-2]] is still a Seifert matrix; only its invariants are wrong
  const Catalog bad = Catalog::parse(
      R"({"entries":[{"name":"Z","seifert_matrix":{"genus":1,"entries":[[1,0],[0,1]]}},
                     {"name":"Y","alexander_claimed":{"min_exp":0,"coeffs":[1,2]}}]})");
  const auto q = bad.problems();
  REQUIRE(q.size() == 2);
  CHECK_THAT(q[0], Catch::Matchers::ContainsSubstring("\"Z\""));
  CHECK_THAT(q[1], Catch::Matchers::ContainsSubstring("not symmetric"));
  CHECK_THROWS_AS(catalog_load("/nonexistent/catalog.json"), CatalogError);
}
