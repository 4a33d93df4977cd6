#include "doctest.h"
#include "lehmer/central_factorial.hpp"
#include "lehmer/error.hpp"
#include "lehmer/lehmer_euler.hpp"
#include "lehmer/reference.hpp"

using namespace lehmer;

namespace {

Rat q(long p, long d) { return Rat(ArbInt(p), ArbInt(d)); }

template <std::size_t N>
IntPoly from_array(const std::array<long, N>& a) {
  std::vector<ArbInt> c;
  for (long x : a) c.emplace_back(x);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_SUITE("central_factorial") {

TEST_CASE("polynomial helpers") {
  IntPoly p(std::vector<ArbInt>{1, 3, 1});
  CHECK(p.degree() == 2);
  CHECK(p.eval(ArbInt(2)) == ArbInt(11));
  CHECK(p.shift(ArbInt(1)) == IntPoly(std::vector<ArbInt>{5, 5, 1}));
  CHECK(IntPoly(std::vector<ArbInt>{0, 0}).is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly::linear(ArbInt(1)) * IntPoly::linear(ArbInt(2)) ==
        IntPoly(std::vector<ArbInt>{2, 3, 1}));
}

TEST_CASE("Delta polynomials") {
  CHECK(delta_poly(0) == IntPoly::constant(ArbInt(1)));
  CHECK(delta_poly(1) == from_array(reference::kDelta1));
  CHECK(delta_poly(2) == from_array(reference::kDelta2));
  CHECK(delta_poly(3) == from_array(reference::kDelta3));
  std::vector<IntPoly> all = delta_polys(15);
  ETable e = euler_numbers(16);
  for (unsigned k = 0; k <= 15; ++k) {
    CHECK(all[k].degree() == 2 * static_cast<long>(k));
    CHECK(all[k].leading() == ArbInt(1));
    CHECK(all[k].eval(ArbInt(0)) == (k % 2 ? -e[k] : e[k]));
  }
}

TEST_CASE("first kind") {
  CHECK(t_first(3, 1) == q(-1, 4));
  CHECK(t_first(4, 2) == Rat(-1));
  CHECK(t_first(4, 3).is_zero());
  for (unsigned n = 0; n <= 12; ++n) CHECK(t_first(n, n) == Rat(1));
  CHECK(t_first_via_product(3) == std::vector<Rat>{0, q(-1, 4), 0, 1});
  CHECK(t_first_via_product(2) == std::vector<Rat>{0, 0, 1});
  for (unsigned n = 1; n <= 14; ++n) {
    std::vector<Rat> row = t_first_via_product(n);
    for (unsigned k = 0; k < row.size(); ++k) CHECK(row[k] == t_first(n, k));
  }
  CHECK(central_factorial_product(0) == RatPoly::constant(Rat(1)));
  CHECK_THROWS_AS(t_first_via_product(0), InvalidInput);
}

TEST_CASE("second kind") {
  CHECK(T_second(4, 2) == Rat(1));
  CHECK(T_second(6, 2) == Rat(1));
  CHECK(T_second(3, 1) == q(1, 4));
  CHECK(T_second(5, 1) == q(1, 16));
  CHECK(T_second(6, 4) == Rat(5));
  CHECK(T_second(5, 2).is_zero());
  CfnTable t = cfn_second_table(14);
  for (unsigned n = 0; n <= 14; ++n) {
    CHECK(t.at(n, n) == Rat(1));
    for (unsigned k = 0; k <= n; k += 2) {
      if (n % 2 == 0) CHECK(t.at(n, k).is_integer());
    }
  }
  CHECK(t.at(3, 7).is_zero());
  CHECK(t.at(20, 2).is_zero());
  for (unsigned n = 1; n <= 14; ++n) CHECK(basis_check_second(n));
}

TEST_CASE("generating functions") {
  for (unsigned k = 1; k <= 5; ++k) {
    CHECK(gf_check_first(k, 14));
    CHECK(gf_check_second(k, 14));
  }
  CHECK(gf_check_first(3, 9));
  CHECK(gf_check_second(4, 10));
  CHECK_THROWS_AS(gf_check_first(0, 5), InvalidInput);
}

TEST_CASE("identities with Euler numbers") {
  CHECK(thm5_check(0, 1));
  CHECK(thm5_check(3, 2));
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(thm5_check(n, 0));
    CHECK(thm6_check(n));
    CHECK(thm6_remark_check(n));
  }
}

}  // TEST_SUITE
