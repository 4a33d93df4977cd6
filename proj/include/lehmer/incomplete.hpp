#pragma once

// Incomplete Lehmer-Euler numbers. The restricted kind keeps only the
// terms l <= m of the denominator series, the associated kind only l >= m:
//   sum W_{n,<=m} t^n/n! = 1 / (1 + sum_{l=1..m}  t^{3l}/(3l)!)
//   sum W_{n,>=m} t^n/n! = 1 / (1 + sum_{l>=m}    t^{3l}/(3l)!)

#include <cstddef>
#include <string_view>
#include <vector>

#include "lehmer/arb.hpp"

namespace lehmer {

enum class IncompleteKind { kAtMost, kAtLeast };

std::string_view kind_name(IncompleteKind kind);

struct IncompleteWTable {
  IncompleteKind kind = IncompleteKind::kAtMost;
  unsigned m = 1;
  std::vector<ArbInt> values;  // values[n] = W_{3n, <=m} or W_{3n, >=m}

  std::size_t size() const { return values.size(); }
  const ArbInt& operator[](std::size_t n) const { return values[n]; }
  ArbInt raw(std::size_t index) const;  // zero when 3 does not divide index
};

// Windowed recurrence: W_{3n,<=m} = -sum_{k=max(n-m,0)}^{n-1} binom(3n,3k) W_{3k,<=m}.
IncompleteWTable w_le_recurrence(std::size_t count, unsigned m);
// W_{3n,>=m} = -sum_{k=0}^{n-m} binom(3n,3k) W_{3k,>=m}, zero for 0 < n < m.
IncompleteWTable w_ge_recurrence(std::size_t count, unsigned m);

// Composition sums with parts bounded by m.
ArbInt w_le_explicit(unsigned n, unsigned m);
ArbInt w_ge_explicit(unsigned n, unsigned m);

// (-1)^n (3n)! times the banded Hessenberg determinant.
ArbInt w_le_determinant(unsigned n, unsigned m);
ArbInt w_ge_determinant(unsigned n, unsigned m);

// Partition sums with parts bounded by m.
ArbInt w_le_trudi(unsigned n, unsigned m);
ArbInt w_ge_trudi(unsigned n, unsigned m);

// Dispatch helpers used by the verification suites.
IncompleteWTable incomplete_recurrence(IncompleteKind kind, std::size_t count, unsigned m);
ArbInt incomplete_explicit(IncompleteKind kind, unsigned n, unsigned m);
ArbInt incomplete_determinant(IncompleteKind kind, unsigned n, unsigned m);
ArbInt incomplete_trudi(IncompleteKind kind, unsigned n, unsigned m);

}  // namespace lehmer
