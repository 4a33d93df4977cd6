#pragma once

// Summation kernels shared by the plain and incomplete Lehmer-Euler
// numbers. Both evaluate (3n)! times a signed sum of reciprocal products of
// (3l)!, over compositions resp. partitions of n with parts in
// [min_part, max_part], entirely in integer arithmetic.

#include "lehmer/arb.hpp"

namespace lehmer::kernels {

inline constexpr unsigned kUnbounded = 0;

// (3n)! * sum over compositions (i_1..i_k) of (-1)^k / prod (3 i_j)!
ArbInt composition_sum(unsigned n, unsigned min_part, unsigned max_part);

// (3n)! * sum over multiplicity vectors t of
//   multinomial(t) * prod_l (-1/(3l)!)^{t_l}
ArbInt partition_sum(unsigned n, unsigned min_part, unsigned max_part);

}  // namespace lehmer::kernels
