#include <catch_amalgamated.hpp>

#include <slicekit/generators.hpp>
#include <slicekit/io.hpp>
#include <slicekit/surgery.hpp>

using namespace slicekit;

namespace {

using SC = SurgeryCoefficient;

AbstractDiagram two_component(SC a, SC b, Int lk) {
  AbstractDiagram d;
  d.components = {{"a", a, true}, {"b", b, true}};
  d.linking = IntMatrix{{0, lk}, {lk, 0}};
  return d;
}

SchemaDiagram pair(Int twist, std::optional<SC> r1, std::optional<SC> r2, std::vector<Meridian> ms = {}) {
  SchemaDiagram d;
  d.twist = twist;
  d.r1 = r1;
  d.r2 = r2;
  d.meridians = std::move(ms);
  return d;
}

}  // namespace

TEST_CASE("surgery coefficients") {
  CHECK(SC(2, 4) == SC(1, 2));
  CHECK(SC(3, -6) == SC(-1, 2));
  CHECK(SC(-5, 0) == SC::infinity());
  CHECK_THROWS(SC(0, 0));
  CHECK(SC::parse("inf").is_infinite());
  CHECK(SC::parse("-7/3") == SC(-7, 3));
  CHECK(SC::parse("4") == SC(4));
  CHECK_THROWS(SC::parse("1/x"));
  CHECK(SC(3, 1).str() == "3/1");
  CHECK(SC(3, 1).pretty() == "3");
  CHECK(SC::infinity().str() == "inf");
  CHECK(SC(1, 2).plus(1) == SC(3, 2));
  CHECK(SC::infinity().plus(5) == SC::infinity());
  CHECK(SC(2, 3).twisted(-1) == SC(2, 1));
  CHECK(SC(1, 1).twisted(-1) == SC::infinity());
}

TEST_CASE("linking presentations") {
  CHECK(linking_presentation(two_component(2, 0, 1)) == IntMatrix{{2, 1}, {1, 0}});
  CHECK(linking_presentation(two_component(SC(7, 2), SC(5, 3), 2)) == IntMatrix{{7, 4}, {6, 5}});
  AbstractDiagram unknot;
  unknot.components = {{"u", 0, true}};
  unknot.linking = IntMatrix(1, 1);
  CHECK(first_homology_order(unknot) == 0);
  CHECK(first_homology_order(two_component(2, 0, 1)) == 1);
  CHECK_THROWS_AS(linking_presentation(two_component(SC::infinity(), 1, 0)), std::domain_error);
  AbstractDiagram bad = two_component(1, 1, 1);
  bad.linking(0, 1) = 2;
  CHECK_THROWS(bad.check());
}

TEST_CASE("abstract Rolfsen twist") {
  const auto d = two_component(SC(1, 1), SC(3, 1), 1);
  const std::vector<DiskCrossing> through{{0, 0}, {1, 1}};
  const auto e = rolfsen_twist(d, 0, -1, through);
  CHECK(e.components[0].coefficient == SC::infinity());
  CHECK(e.components[1].coefficient == SC(2));
  CHECK(e.components[1].unknotted);
  CHECK(first_homology_order(e) == first_homology_order(d));

  CHECK_THROWS_WITH(rolfsen_twist(d, 0, 1, std::nullopt), "through-data missing");
  CHECK_THROWS(rolfsen_twist(d, 0, 1, std::vector<DiskCrossing>{{0, 0}, {2, 2}}));
  const auto knotted = rolfsen_twist(two_component(1, 1, 0), 0, 1, std::vector<DiskCrossing>{{0, 0}, {0, 2}});
  CHECK_FALSE(knotted.components[1].unknotted);
  CHECK_THROWS_AS(rolfsen_twist(knotted, 1, 1, std::vector<DiskCrossing>{{0, 0}, {0, 0}}), std::domain_error);
}

TEST_CASE("twist followed by its inverse is the identity on coefficients") {
  gen::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const SC c = gen::coefficient(rng);
    const Int t = gen::uniform(rng, -4, 4);
    CHECK(c.twisted(t).twisted(-t) == c);
    CHECK(c.plus(t).plus(-t) == c);
  }
}

TEST_CASE("schema twists agree with abstract twists") {
  gen::Rng rng(29);
  int compared = 0;
  for (int i = 0; i < 2000 && compared < 300; ++i) {
    const SchemaDiagram d = gen::schema_diagram(rng);
    const auto comps = d.components();
    if (comps.empty()) continue;
    const auto c = comps[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<Int>(comps.size()) - 1))];
    const Int t = gen::uniform(rng, -3, 3);
    SchemaDiagram e;
    try {
      e = rolfsen_twist(d, c, t);
    } catch (const std::domain_error&) {
      continue;
    }
    const auto a = rolfsen_twist(d.to_abstract(), d.flat_index(c), t, d.through(c));
    const auto b = e.to_abstract();
    REQUIRE(a.linking == b.linking);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a.components[k].coefficient == b.components[k].coefficient);
    ++compared;
  }
  CHECK(compared == 300);
}

TEST_CASE("schema moves") {
  const SchemaDiagram d = pair(2, SC(3), SC(5), {{SC(1), true, true}});
  SECTION("meridian twist adds to both strands and to the twist box") {
    const auto e = rolfsen_twist(d, ComponentRef::meridian(0), -1);
    CHECK(e.meridians[0].coefficient == SC::infinity());
    CHECK(*e.r1 == SC(2));
    CHECK(*e.r2 == SC(4));
    CHECK(e.twist == 1);
  }
  SECTION("pair member twists leave the family while the box is nonzero") {
    CHECK_THROWS_AS(rolfsen_twist(d, ComponentRef::eta1(), 1), std::domain_error);
  }
  SECTION("two meridians through one disk leave the family") {
    const SchemaDiagram f = pair(0, SC(3), SC(5), {{SC(1), true, false}, {SC(2), true, false}});
    CHECK_THROWS_AS(rolfsen_twist(f, ComponentRef::eta1(), 1), std::domain_error);
    CHECK_NOTHROW(rolfsen_twist(f, ComponentRef::eta2(), 1));
  }
  SECTION("deleting a pair member clears its meridian targets and the box") {
    const SchemaDiagram f = pair(2, SC::infinity(), SC(5), {{SC(1), true, true}});
    const auto g = delete_infinity(f, ComponentRef::eta1());
    CHECK_FALSE(g.r1);
    CHECK(g.twist == 0);
    CHECK_FALSE(g.meridians[0].first);
    CHECK(g.meridians[0].second);
    CHECK_THROWS_AS(delete_infinity(f, ComponentRef::eta2()), std::domain_error);
  }
  SECTION("component names") {
    CHECK(ComponentRef::parse("m2") == ComponentRef::meridian(1));
    CHECK(ComponentRef::meridian(0).name() == "m1");
    CHECK_THROWS(ComponentRef::parse("x"));
  }
}

TEST_CASE("|det| of the presentation survives random moves") {
  gen::Rng rng(31);
  int moves = 0;
  while (moves < 1000) {
    SchemaDiagram d = gen::schema_diagram(rng);
    for (int k = 0; k < 6 && moves < 1000; ++k) {
      auto step = gen::schema_move(rng, d);
      if (!step) continue;
      CHECK(first_homology_order(step->after) == first_homology_order(d));
      d = step->after;
      ++moves;
    }
  }
}

TEST_CASE("S^3 recognition") {
  CHECK(is_s3(SchemaDiagram{}));
  CHECK(is_s3(pair(0, SC(1), std::nullopt)));
  CHECK(is_s3(pair(0, SC(-1, 4), SC::infinity())));
  CHECK_FALSE(is_s3(pair(0, SC(2), std::nullopt)));
  CHECK_FALSE(is_s3(pair(0, SC(0), std::nullopt)));
  const auto r = reduce_to_s3(pair(0, SC(1, 3), std::nullopt));
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].twist == -3);
  CHECK(r.trace[1].kind == Move::Kind::delete_infinity);
}

TEST_CASE("twisted pair family reduces to S^3 with the expected intermediate labels") {
  for (Int n = -5; n <= 5; ++n)
    for (Int l = -5; l <= 5; ++l) {
      const auto r = reduce_twisted_pair(n, l);
      INFO("n=" << n << " l=" << l);
      REQUIRE(r.is_s3);
      CHECK(first_homology_order(r.initial) == 1);
      if (n != 0 && l != 0) {
        const auto& first = r.trace[0].after;
        CHECK(*first.r1 == SC(1, n));
        CHECK(*first.r2 == SC(-1, n));
        CHECK(first.meridians[0].coefficient == SC(-1, l));
        CHECK(first.twist == 0);
        const auto& paired = r.trace[2].after;
        CHECK(paired.r1->is_infinite());
        CHECK(paired.r2->is_infinite());
        CHECK(paired.meridians[0].coefficient == SC(-1, l));
      }
    }
  const auto pair_only = delete_infinity(twisted_pair_diagram(3, 2), ComponentRef::meridian(0));
  CHECK(linking_presentation(pair_only) == IntMatrix{{7, 6}, {6, 5}});
  CHECK(determinant(linking_presentation(pair_only)) == -1);
}

TEST_CASE("diagram JSON") {
  using io::json;
  const auto j = json::parse(R"({"schema":{"twist":1,"r1":"2/1","r2":null,"meridians":[{"r":"inf","targets":["first"]}]}})");
  const SchemaDiagram d = io::schema_from_json(j);
  CHECK(*d.r1 == SC(2));
  CHECK_FALSE(d.r2);
  CHECK(d.meridians[0].coefficient.is_infinite());
  CHECK(io::schema_from_json(io::to_json(d)) == d);
  CHECK_THROWS(io::schema_from_json(json::parse(R"({"schema":{"r1":"1/1","meridians":[{"r":"1","targets":["second"]}]}})")));
  CHECK_THROWS(io::schema_from_json(json::parse(R"({"schema":{"r1":"1/0/2"}})")));
}
