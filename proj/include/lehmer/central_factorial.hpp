#pragma once

// The polynomials Delta(x, k), central factorial numbers t(n, k) and
// T(n, k), and exact checks of the identities linking them to the Euler
// numbers.
//
//   Delta(x, 0) = 1,
//   Delta(x, k+1) = (x+1)(2x+1) Delta(x+1, k) - x^2 Delta(x, k).
//
//   x (x + n/2 - 1) (x + n/2 - 2) ... (x - n/2 + 1) = sum_k t(n, k) x^k
//   x^n = sum_k T(n, k) x (x + k/2 - 1) ... (x - k/2 + 1)

#include <cstddef>
#include <vector>

#include "lehmer/arb.hpp"
#include "lehmer/poly.hpp"

namespace lehmer {

IntPoly delta_poly(unsigned k);
// Delta(x, 0) .. Delta(x, kmax).
std::vector<IntPoly> delta_polys(unsigned kmax);

// Triangular table indexed [n][k], 0 <= k <= n; zero when n + k is odd.
struct CfnTable {
  std::vector<std::vector<Rat>> rows;

  std::size_t size() const { return rows.size(); }
  // Zero outside 0 <= k <= n < size().
  Rat at(std::size_t n, std::size_t k) const;
};

// t(n, k) = t(n-2, k-2) - (n-2)^2/4 t(n-2, k), rows 0 .. nmax.
CfnTable cfn_first_table(unsigned nmax);
// T(n, k) = T(n-2, k-2) + k^2/4 T(n-2, k), rows 0 .. nmax. Odd-odd entries
// are not integers in general (T(3, 1) = 1/4).
CfnTable cfn_second_table(unsigned nmax);

Rat t_first(unsigned n, unsigned k);
Rat T_second(unsigned n, unsigned k);

// x (x + k/2 - 1) ... (x - k/2 + 1); the constant 1 for k = 0.
RatPoly central_factorial_product(unsigned k);

// Coefficients of the product for row n (n >= 1). Throws ConsistencyError
// when they differ from the recurrence row.
std::vector<Rat> t_first_via_product(unsigned n);

// (2 log(x/2 + sqrt(x^2/4 + 1)))^k == k! sum_n t(n, k) x^n / n!, n <= order.
bool gf_check_first(unsigned k, unsigned order);
// (e^{x/2} - e^{-x/2})^k == k! sum_n T(n, k) x^n / n!, n <= order.
bool gf_check_second(unsigned k, unsigned order);
// sum_k T(n, k) x (x + k/2 - 1) ... == x^n.
bool basis_check_second(unsigned n);

// E_{2n+2k} == sum_j (-1)^{j-k} (2j)! Delta(j, k) / 2^j T(2n, 2j).
bool thm5_check(unsigned n, unsigned k);
// sum_j (-4)^{n-j} t(2n+1, 2j+1) Delta(x, j) == (x+1)(x+2)...(x+2n), with
// every 4^{n-j} t(2n+1, 2j+1) integral.
bool thm6_check(unsigned n);
// sum_j 4^{n-j} t(2n+1, 2j+1) E_{2j} == (-1)^n (2n)!.
bool thm6_remark_check(unsigned n);

}  // namespace lehmer
