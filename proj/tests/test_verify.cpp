#include <catch_amalgamated.hpp>

#include <slicekit/verify.hpp>

using namespace slicekit;

namespace {

const ReportRow* find_row(const VerificationReport& r, const std::string& check) {
  for (const auto& row : r.rows)
    if (row.check == check) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("sweep parsing") {
  CHECK(parse_sweep("-3..4").min == -3);
  CHECK(parse_sweep("-3..4").max == 4);
  CHECK(parse_sweep("2").size() == 5);
  CHECK(parse_sweep("0").empty());
  CHECK_THROWS(parse_sweep("a..b"));
  CHECK_THROWS(parse_sweep("3..1x"));
}

TEST_CASE("the bundled catalog verifies") {
  const auto report = verify_all(catalog_load());
  CHECK(report.passed());
  CHECK(report.count(Status::fail) == 0);
  CHECK(report.count(Status::skipped) == 0);
  for (int k = 1; k <= 9; ++k) {
    const std::string id = "AC" + std::to_string(k);
    bool seen = false;
    for (const auto& row : report.rows) seen = seen || row.criterion == id;
    CHECK(seen);
  }
}

TEST_CASE("a corrupted Seifert matrix is reported, not thrown") {
  const auto report = verify_all(Catalog::read(SLICEKIT_TEST_DATA "/corrupted_catalog.json"));
  CHECK_FALSE(report.passed());
  const ReportRow* row = find_row(report, "alexander(R1)");
  REQUIRE(row);
  CHECK(row->status == Status::fail);
  CHECK(row->expected == "2 - 5t + 2t^2");
  CHECK(row->computed == "4 - 9t + 4t^2");
}

TEST_CASE("an empty sweep skips the sweep rows and still passes") {
  VerifyOptions opt;
  opt.sweep = parse_sweep("0");
  const auto report = verify_all(catalog_load(), opt);
  CHECK(report.passed());
  CHECK(report.count(Status::skipped) > 0);
}

TEST_CASE("trace audit catches a wrong label") {
  auto r = reduce_twisted_pair(2, 3);
  CHECK(audit_twisted_pair_trace(r, 2, 3).empty());
  r.trace[0].after.r1 = SurgeryCoefficient(1, 3);
  CHECK(audit_twisted_pair_trace(r, 2, 3) == "first twist does not give 1/n, -1/n, -1/l");
}
