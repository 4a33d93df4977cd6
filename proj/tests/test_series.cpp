#include <random>

#include "doctest.h"
#include "lehmer/combinatorics.hpp"
#include "lehmer/error.hpp"
#include "lehmer/series.hpp"

using namespace lehmer;

namespace {

Rat random_rat(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  long p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rat(ArbInt(p), ArbInt(den(rng)));
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("ordinary series basics") {
  const std::size_t order = 12;
  PowerSeries one_minus_x = PowerSeries::zero(order);
  one_minus_x[0] = Rat(1);
  one_minus_x[1] = Rat(-1);
  PowerSeries geom = one_minus_x.inverse();
  for (std::size_t i = 0; i < order; ++i) CHECK(geom[i] == Rat(1));
  CHECK(one_minus_x * geom == PowerSeries::one(order));
  CHECK(one_minus_x.pow(-1) == geom);
  CHECK(one_minus_x.pow(3)[3] == Rat(-1));
  CHECK_THROWS_AS(PowerSeries::zero(order).inverse(), InvalidInput);
}

TEST_CASE("sqrt, log and exp") {
  const std::size_t order = 15;
  PowerSeries one_plus_x = PowerSeries::zero(order);
  one_plus_x[0] = Rat(1);
  one_plus_x[1] = Rat(1);
  CHECK((one_plus_x * one_plus_x).sqrt() == one_plus_x);

  PowerSeries e = PowerSeries::exponential(Rat(ArbInt(1), ArbInt(2)), order);
  for (unsigned n = 0; n < order; ++n) {
    CHECK(e[n] == Rat(ArbInt(1), pow(ArbInt(2), n) * factorial(n)));
  }
  PowerSeries lg = e.log();
  CHECK(lg[0].is_zero());
  CHECK(lg[1] == Rat(ArbInt(1), ArbInt(2)));
  for (std::size_t i = 2; i < order; ++i) CHECK(lg[i].is_zero());
  CHECK(e.derivative()[0] == Rat(ArbInt(1), ArbInt(2)));
  CHECK(e.derivative().integral()[1] == e[1]);

  // log(1 + x) = x - x^2/2 + x^3/3 - ...
  PowerSeries l1 = one_plus_x.log();
  for (unsigned n = 1; n < order; ++n) {
    CHECK(l1[n] == Rat(ArbInt(n % 2 ? 1 : -1), ArbInt(n)));
  }
  PowerSeries two = PowerSeries::one(order) * Rat(2);
  CHECK_THROWS_AS(two.sqrt(), InvalidInput);
  CHECK_THROWS_AS(two.log(), InvalidInput);
}

TEST_CASE("random series: inverse is an involution, sqrt squares back") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 10;
    std::vector<Rat> c(order);
    c[0] = random_rat(rng, true);
    for (std::size_t i = 1; i < order; ++i) c[i] = random_rat(rng, false);
    PowerSeries f(c);
    CHECK(f.inverse().inverse() == f);
    CHECK(f * f.inverse() == PowerSeries::one(order));
    c[0] = Rat(1);
    PowerSeries g(c);
    PowerSeries s = g.sqrt();
    CHECK(s * s == g);
  }
}

TEST_CASE("Egf1 binomial convolution") {
  const std::size_t order = 14;
  Egf1 ones(std::vector<Rat>(order, Rat(1)));
  Egf1 sq = ones * ones;
  for (unsigned n = 0; n < order; ++n) CHECK(sq[n] == Rat(pow(ArbInt(2), n)));
  CHECK(series_pow(ones, 3)[5] == Rat(243));
  Egf1 inv = ones.inverse();
  for (unsigned n = 0; n < order; ++n) CHECK(inv[n] == Rat(n % 2 ? -1 : 1));
  CHECK(series_pow(ones, -1) == inv);
  CHECK(Egf1::from_ordinary(ones.to_ordinary()) == ones);
  CHECK(ones.to_ordinary()[4] == Rat(ArbInt(1), ArbInt(24)));
  Egf1 zero_head(std::vector<Rat>(order, Rat(0)));
  CHECK_THROWS_AS(series_pow(zero_head, -2), InvalidInput);
}

TEST_CASE("Egf3: inverting the all-ones series gives W") {
  Egf3 ones(std::vector<Rat>(6, Rat(1)));
  Egf3 w = series_invert(ones);
  std::vector<long> expect{1, -1, 19, -1513, 315523, -136085041};
  for (std::size_t l = 0; l < expect.size(); ++l) CHECK(w[l] == Rat(expect[l]));
  CHECK(ones * w == Egf3(std::vector<Rat>{1, 0, 0, 0, 0, 0}));
  Egf1 raw = w.to_egf1();
  CHECK(raw.truncation_order() >= 16);
  CHECK(raw[9] == Rat(-1513));
  CHECK(raw[10].is_zero());
  CHECK_THROWS_AS(series_invert(Egf3(std::vector<Rat>{0, 1, 1})), InvalidInput);
}

TEST_CASE("series_invert is an involution on random series") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rat> c(9);
    c[0] = random_rat(rng, true);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = random_rat(rng, false);
    Egf3 f(c);
    CHECK(series_invert(series_invert(f)) == f);
  }
}

}  // TEST_SUITE
