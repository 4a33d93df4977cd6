#include "doctest.h"
#include "lehmer/error.hpp"
#include "lehmer/verify.hpp"

using namespace lehmer;

namespace {

SuiteBounds upto(unsigned n) {
  SuiteBounds b;
  b.upto = n;
  return b;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("suite names") {
  CHECK(is_suite("all"));
  CHECK(is_suite("thm6"));
  CHECK_FALSE(is_suite("thm7"));
  CHECK(suite_names().size() == 13);
  CHECK_THROWS_AS(run_suite("thm7", {}, 1), InvalidInput);
  CHECK_THROWS_AS(run_suite("all", upto(5), 1), InvalidInput);
  SuiteBounds big;
  big.k = 12;
  CHECK_THROWS_AS(run_suite("cycles", big, 1), InvalidInput);
}

TEST_CASE("small suites pass") {
  for (const char* s : {"mod9", "mod27", "mod81"}) {
    SuiteResult r = run_suite(s, upto(60), 1);
    CHECK(r.suite == s);
    CHECK(r.passed());
  }
  CHECK(run_suite("thm6", upto(6), 2).passed());
  CHECK(run_suite("cfn", upto(8), 2).passed());
  SuiteBounds m;
  m.upto = 8;
  m.m = 2;
  CHECK(run_suite("incomplete", m, 2).passed());
  SuiteBounds h;
  h.upto = 10;
  h.alpha = 2;
  CHECK(run_suite("higher", h, 2).passed());
  SuiteBounds c;
  c.k = 3;
  SuiteResult cyc = run_suite("cycles", c, 1);
  CHECK(cyc.passed());
  CHECK(cyc.checks.size() == 2);
}

TEST_CASE("worker count does not change results or order") {
  SuiteResult one = run_suite("thm5", upto(7), 1);
  SuiteResult many = run_suite("thm5", upto(7), 4);
  REQUIRE(one.checks.size() == many.checks.size());
  CHECK(one.checks.size() == 7);
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    CHECK(one.checks[i].name == many.checks[i].name);
    CHECK(one.checks[i].report.status == many.checks[i].report.status);
    CHECK(one.checks[i].report.range_checked == many.checks[i].report.range_checked);
  }
}

TEST_CASE("a scan too short to confirm is not a pass") {
  SuiteBounds b;
  b.k = 3;
  b.upto = 5;
  SuiteResult r = run_suite("cycles", b, 1);
  CHECK_FALSE(r.passed());
  bool inconclusive = false;
  for (const CheckOutcome& c : r.checks) {
    inconclusive = inconclusive || c.report.status == CongruenceReport::Status::kInconclusive;
  }
  CHECK(inconclusive);
}

}  // TEST_SUITE
