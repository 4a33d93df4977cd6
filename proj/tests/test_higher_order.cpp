#include "doctest.h"
#include "lehmer/error.hpp"
#include "lehmer/higher_order.hpp"
#include "lehmer/lehmer_euler.hpp"

using namespace lehmer;

TEST_SUITE("higher_order") {

TEST_CASE("alpha = 1 reduces to W and E") {
  HigherWTable h3 = w_higher_series(3, 1, 31);
  WTable w = w_recurrence(11);
  for (std::size_t n = 0; n < h3.size(); ++n) CHECK(h3[n] == w.raw(n));
  HigherWTable h2 = w_higher_series(2, 1, 21);
  ETable e = euler_numbers(11);
  for (std::size_t n = 0; n < h2.size(); ++n) CHECK(h2[n] == e.raw(n));
}

TEST_CASE("second-order values") {
  HigherWTable r2 = w_higher_series(2, 2, 7);
  std::vector<long> e2{1, 0, -2, 0, 16, 0, -272};
  for (std::size_t n = 0; n < e2.size(); ++n) CHECK(r2[n] == ArbInt(e2[n]));
  HigherWTable r3 = w_higher_series(3, 2, 7);
  std::vector<long> w2{1, 0, 0, -2, 0, 0, 58};
  for (std::size_t n = 0; n < w2.size(); ++n) CHECK(r3[n] == ArbInt(w2[n]));
  HigherWTable r4 = w_higher_series(4, 3, 13);
  for (std::size_t n = 0; n < r4.size(); ++n) {
    if (n % 4) CHECK(r4[n].is_zero());
  }
  CHECK(r4[4] == ArbInt(-3));
  CHECK_THROWS_AS(w_higher_series(1, 1, 5), InvalidInput);
  CHECK_THROWS_AS(w_higher_series(3, 0, 5), InvalidInput);
}

TEST_CASE("explicit formula") {
  CHECK(w_higher_explicit(3, 1, 3) == ArbInt(-1));
  CHECK(w_higher_explicit(2, 1, 4) == ArbInt(5));
  CHECK(w_higher_explicit(2, 3, 0) == ArbInt(1));
  CHECK(w_higher_explicit(3, 4, 0) == ArbInt(1));
  for (unsigned r : {2u, 3u}) {
    for (unsigned alpha = 1; alpha <= 2; ++alpha) {
      HigherWTable s = w_higher_series(r, alpha, 13);
      for (unsigned n = 0; n < 13; ++n) {
        CAPTURE(r);
        CAPTURE(alpha);
        CAPTURE(n);
        CHECK(w_higher_explicit(r, alpha, n) == s[n]);
      }
    }
  }
  CHECK_THROWS_AS(w_higher_explicit(4, 1, 4), InvalidInput);
}

TEST_CASE("Luo's form") {
  CHECK(euler_higher_luo(1, 2) == ArbInt(-1));
  CHECK(euler_higher_luo(1, 6) == ArbInt(-61));
  CHECK(euler_higher_luo(2, 2) == ArbInt(-2));
  HigherWTable s = w_higher_series(2, 3, 11);
  for (unsigned n = 0; n < 11; ++n) CHECK(euler_higher_luo(3, n) == s[n]);
  CHECK_THROWS_AS(euler_higher_luo(0, 2), InvalidInput);
}

}  // TEST_SUITE
