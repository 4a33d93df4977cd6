#pragma once

// Lehmer-Euler numbers W_n, the coefficients of
//   3 / (e^t + e^{wt} + e^{w^2 t}) = (sum_l t^{3l}/(3l)!)^{-1},
// computed five independent ways, and the Euler numbers E_n.
//
// W_n vanishes unless 3 | n, so tables store the trisection: entry n of a
// WTable holds W_{3n}.

#include <cstddef>
#include <string_view>
#include <vector>

#include "lehmer/arb.hpp"

namespace lehmer {

enum class WMethod { kRecurrence, kExplicit, kDeterminant, kTrudi, kSeries };

std::string_view method_name(WMethod m);
// Throws InvalidInput for an unknown name.
WMethod parse_method(std::string_view name);

struct WTable {
  std::vector<ArbInt> values;  // values[n] = W_{3n}
  WMethod method = WMethod::kRecurrence;

  std::size_t size() const { return values.size(); }
  const ArbInt& operator[](std::size_t n) const { return values[n]; }
  // W_m for a raw index m; zero when 3 does not divide m.
  ArbInt raw(std::size_t m) const;
};

// E_{2n} at entry n; odd-index Euler numbers vanish and are not stored.
struct ETable {
  std::vector<ArbInt> values;

  std::size_t size() const { return values.size(); }
  const ArbInt& operator[](std::size_t n) const { return values[n]; }
  ArbInt raw(std::size_t m) const;
};

// W_0 .. W_{3(N-1)} by W_{3n} = -sum_{k<n} binom(3n,3k) W_{3k}.
WTable w_recurrence(std::size_t count);

// Signed sum over compositions of n: (3n)! sum_k (-1)^k sum 1/prod (3 i_j)!.
// Cost grows like 2^{n-1}.
ArbInt w_explicit(unsigned n);

// (-1)^n (3n)! det H_n, H_n lower Hessenberg with 1/(3(i-j+1))! on and below
// the diagonal and 1 on the superdiagonal.
ArbInt w_determinant(unsigned n);

// (3n)! sum over partitions of n (multiplicity vectors t) of
// multinomial(t) prod (-1/(3l)!)^{t_l}.
ArbInt w_trudi(unsigned n);

// Inverts the all-ones trisected series.
WTable w_series(std::size_t count);

// Table of `count` entries by any method. Per-index methods are evaluated
// independently for each n.
WTable w_table(WMethod method, std::size_t count);

// Checks (-1)^n / (3n)! == det of the Hessenberg matrix with entries
// W_{3(i-j+1)} / (3(i-j+1))! and 1 on the superdiagonal.
bool inversion_det_check(unsigned n);
bool inversion_det_check(unsigned n, const WTable& w);

// E_0 .. E_{2(N-1)} by E_{2n} = -sum_{k<n} binom(2n,2k) E_{2k}.
ETable euler_numbers(std::size_t count);

}  // namespace lehmer
