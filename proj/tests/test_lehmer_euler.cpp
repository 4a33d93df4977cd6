#include "doctest.h"
#include "lehmer/error.hpp"
#include "lehmer/lehmer_euler.hpp"
#include "lehmer/reference.hpp"

using namespace lehmer;

TEST_SUITE("lehmer_euler") {

TEST_CASE("first values and signs") {
  WTable w = w_recurrence(11);
  REQUIRE(w.size() == 11);
  for (std::size_t n = 0; n < 11; ++n) {
    CHECK(w[n].abs() == ArbInt::parse(reference::kAbsW[n]));
    CHECK(w[n].sign() == (n % 2 ? -1 : 1));
  }
  CHECK(w.raw(12) == ArbInt(315523));
  CHECK(w.raw(15) == ArbInt(-136085041));
  CHECK(w.raw(7).is_zero());
}

TEST_CASE("method names") {
  for (WMethod m : {WMethod::kRecurrence, WMethod::kExplicit, WMethod::kDeterminant,
                    WMethod::kTrudi, WMethod::kSeries}) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK_THROWS_AS(parse_method("cofactor"), InvalidInput);
}

TEST_CASE("all methods agree on small indices") {
  const std::size_t count = 13;
  WTable ref = w_recurrence(count);
  CHECK(w_series(count).values == ref.values);
  for (WMethod m : {WMethod::kExplicit, WMethod::kDeterminant, WMethod::kTrudi}) {
    WTable t = w_table(m, count);
    CHECK(t.method == m);
    CHECK(t.values == ref.values);
  }
  for (unsigned n = 1; n < count; ++n) {
    CHECK(w_explicit(n) == ref[n]);
    CHECK(w_determinant(n) == ref[n]);
    CHECK(w_trudi(n) == ref[n]);
  }
  CHECK_THROWS_AS(w_explicit(0), InvalidInput);
  CHECK_THROWS_AS(w_recurrence(0), InvalidInput);
}

TEST_CASE("inversion determinant") {
  for (unsigned n = 1; n <= 15; ++n) CHECK(inversion_det_check(n));
  WTable bad = w_recurrence(8);
  bad.values[3] += ArbInt(1);
  CHECK_FALSE(inversion_det_check(5, bad));
}

TEST_CASE("Euler numbers") {
  ETable e = euler_numbers(8);
  std::vector<long> expect{1, -1, 5, -61, 1385, -50521, 2702765, -199360981};
  for (std::size_t n = 0; n < expect.size(); ++n) CHECK(e[n] == ArbInt(expect[n]));
  CHECK(e.raw(6) == ArbInt(-61));
  CHECK(e.raw(5).is_zero());
}

}  // TEST_SUITE
