#include <catch_amalgamated.hpp>

#include <slicekit/annulus.hpp>
#include <slicekit/generators.hpp>
#include <slicekit/io.hpp>

using namespace slicekit;

namespace {
using SC = SurgeryCoefficient;
}

TEST_CASE("rho") {
  CHECK(rho({1, 1}).matrix() == IntMatrix{{1, 1}, {1, 2}});
  CHECK(rho({0, 1}).matrix() == IntMatrix{{1, 1}, {0, 1}});
  CHECK(rho({3, -2}).matrix() == IntMatrix{{1, -2}, {3, -5}});
  for (Int l = -10; l <= 10; ++l)
    for (Int n = -10; n <= 10; ++n) CHECK(rho({l, n}).det() == 1);
  CHECK(rho({2, 3}).apply({0, 1}) == std::array<Int, 2>{3, 7});
  CHECK_THROWS(TorusAutomorphism(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("gluing images match the four identifications") {
  gen::Rng rng(37);
  for (int i = 0; i < 50; ++i) {
    const Int l = gen::uniform(rng, -1000, 1000), n = gen::uniform(rng, -1000, 1000);
    const auto g = gluing_images({l, n});
    REQUIRE(g.size() == 4);
    // Hand-derived from rho and the frames at each end.
    CHECK(g[0].image == CurveClass{1, l, 0});
    CHECK(g[1].image == CurveClass{n, n * l + 1, 0});
    CHECK(g[2].image == CurveClass{1, l, 1});
    CHECK(g[3].image == CurveClass{n, n * l - 1, 1});
  }
  CHECK(gluing_images({2, 3})[3].image.str() == "3 lambda2 + 5 mu2");
}

TEST_CASE("boundary instructions") {
  const auto r1 = boundary_instructions({0, 1});
  CHECK(r1[0].curve == "eta1");
  CHECK(r1[0].coefficient == SC(1));
  CHECK(r1[1].coefficient == SC(-1));
  const auto b = boundary_instructions({2, 3});
  CHECK(b[0].coefficient == SC(7, 3));
  CHECK(b[1].coefficient == SC(5, 3));
  const auto z = boundary_instructions({4, 0});
  CHECK(z[0].coefficient.is_infinite());
  CHECK(z[1].coefficient.is_infinite());
  CHECK(coefficient_of_meridian_image({3, 5, 1}) == SC(5, 3));
}

TEST_CASE("annulus twist family") {
  for (Int n = -5; n <= 5; ++n) {
    if (n == 0) continue;
    const auto minus = annulus_twist_family(-1, n);
    CHECK(minus.instructions[0].coefficient == SC(n + 1, n));
    CHECK(minus.instructions[1].coefficient == SC(n - 1, n));
    CHECK(minus.linking == 1);
    CHECK(minus.instructions == boundary_instructions({1, n}));
    const auto plus = annulus_twist_family(1, n);
    CHECK(plus.instructions[0].coefficient == SC(-n + 1, n));
    CHECK(plus.linking == -1);
    CHECK(plus.instructions == boundary_instructions({-1, n}));
  }
  CHECK_THROWS(annulus_twist_family(0, 1));
}

TEST_CASE("0-standard certificate") {
  CHECK(certify_standard(0, 1, 1) == StandardCertificate::certified);
  CHECK(certify_standard(1, 1, 1) == StandardCertificate::not_applicable);
  CHECK(certify_standard(0, 2, 1) == StandardCertificate::not_applicable);
  CHECK(to_string(certify_standard(0, 1, 1)) == "0-standard certified");
  CHECK_THROWS(certify_standard(0, -1, 1));
}

TEST_CASE("annulus JSON") {
  using io::json;
  CHECK(io::annulus_json(AnnulusModSpec{2, 3}) ==
        json::parse(R"({"eta1":"7/3","eta2":"5/3","lk":2,"rho":[[1,3],[2,7]]})"));
}
