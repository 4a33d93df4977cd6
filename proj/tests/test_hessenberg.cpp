#include <random>
#include <vector>

#include "doctest.h"
#include "lehmer/error.hpp"
#include "lehmer/hessenberg.hpp"

using namespace lehmer;

namespace {

using Dense = std::vector<std::vector<Rat>>;

// Laplace expansion along the first row.
Rat cofactor_det(const Dense& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rat(1);
  Rat det;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rat> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(a[i][c]);
      }
      minor.push_back(std::move(row));
    }
    Rat term = a[0][j] * cofactor_det(minor);
    det += j % 2 ? -term : term;
  }
  return det;
}

}  // namespace

TEST_SUITE("hessenberg") {

TEST_CASE("matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      Dense dense(n, std::vector<Rat>(n));
      LowerHessenberg h(n, [&](std::size_t i, std::size_t j) {
        Rat v(ArbInt(num(rng)), ArbInt(den(rng)));
        dense[i][j] = v;
        return v;
      });
      CHECK(hessenberg_det(h) == cofactor_det(dense));
    }
  }
}

TEST_CASE("toeplitz shape and storage bounds") {
  // [[1/6, 1], [1/720, 1/6]] has determinant 1/36 - 1/720 = 19/720.
  std::vector<Rat> band{Rat(ArbInt(1), ArbInt(6)), Rat(ArbInt(1), ArbInt(720))};
  LowerHessenberg h = LowerHessenberg::toeplitz(2, band, Rat(1));
  CHECK(h.at(1, 0) == band[1]);
  CHECK(h.at(0, 1) == Rat(1));
  CHECK(hessenberg_det(h) == Rat(ArbInt(19), ArbInt(720)));
  LowerHessenberg big(4);
  CHECK_THROWS_AS(big.at(0, 2), InvalidInput);
  CHECK_THROWS_AS(big.at(4, 0), InvalidInput);
  CHECK_THROWS_AS(big.set(1, 3, Rat(1)), InvalidInput);
  CHECK_THROWS_AS(LowerHessenberg::toeplitz(3, band, Rat(1)), InvalidInput);
  CHECK(hessenberg_det(LowerHessenberg(0)) == Rat(1));
}

}  // TEST_SUITE
