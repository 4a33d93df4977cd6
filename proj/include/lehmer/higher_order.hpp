#pragma once

// Higher-order numbers W_{r,n}^{(alpha)}:
//   sum W_{r,n}^{(alpha)} t^n/n! = (sum_l t^{rl}/(rl)!)^{-alpha}.
// r = 3, alpha = 1 gives W_n; r = 2 gives the higher-order Euler numbers.

#include <cstddef>
#include <vector>

#include "lehmer/arb.hpp"

namespace lehmer {

struct HigherWTable {
  unsigned r = 3;
  unsigned alpha = 1;
  std::vector<ArbInt> values;  // raw index n; zero unless r | n

  std::size_t size() const { return values.size(); }
  const ArbInt& operator[](std::size_t n) const { return values[n]; }
};

// Raw indices 0 .. count-1. r >= 2, alpha >= 1.
HigherWTable w_higher_series(unsigned r, unsigned alpha, std::size_t count);

// sum_k (-1/r)^k binom(alpha+k-1, k) binom(alpha+n, n-k)
//       * sum_{i_1+..+i_r = k} k!/(i_1!..i_r!) (sum_j zeta^{j-1} i_j)^n
// evaluated exactly for r in {2, 3} (r = 3 in Eisenstein arithmetic).
// Throws InvalidInput for other r and ConsistencyError if the total is not
// a rational integer.
ArbInt w_higher_explicit(unsigned r, unsigned alpha, unsigned n);

// Luo's form of the higher-order Euler numbers:
//   E_n^{(alpha)} = sum_k (-1/2)^k binom(alpha+n, n-k) binom(alpha+k-1, k)
//                   * sum_j binom(k, j) (k - 2j)^n
ArbInt euler_higher_luo(unsigned alpha, unsigned n);

}  // namespace lehmer
