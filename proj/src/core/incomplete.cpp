#include "lehmer/incomplete.hpp"

#include <algorithm>
#include <string>

#include "lehmer/combinatorics.hpp"
#include "lehmer/error.hpp"
#include "lehmer/hessenberg.hpp"
#include "lehmer/kernels.hpp"

namespace lehmer {

std::string_view kind_name(IncompleteKind kind) {
  return kind == IncompleteKind::kAtMost ? "le" : "ge";
}

ArbInt IncompleteWTable::raw(std::size_t index) const {
  if (index % 3 != 0) return ArbInt(0);
  return values.at(index / 3);
}

namespace {

void require(std::size_t count, unsigned m) {
  if (count == 0) throw InvalidInput("table size must be at least 1");
  if (m == 0) throw InvalidInput("bound m must be at least 1");
}

void require_index(unsigned n, unsigned m) {
  if (n == 0) throw InvalidInput("index must be at least 1");
  if (m == 0) throw InvalidInput("bound m must be at least 1");
}

// Sum over k in [lo, hi] of binom(3n,3k) v_k, negated.
ArbInt windowed(const std::vector<ArbInt>& v, std::size_t n, std::size_t lo, std::size_t hi) {
  auto row = binomial_row(static_cast<unsigned>(3 * n));
  mpz_class acc;
  for (std::size_t k = lo; k <= hi; ++k) {
    mpz_addmul(acc.get_mpz_t(), row[3 * k].mpz().get_mpz_t(), v[k].mpz().get_mpz_t());
  }
  return ArbInt(mpz_class(-acc));
}

ArbInt banded_determinant(unsigned n, unsigned m, IncompleteKind kind) {
  // Band entry d (distance below the superdiagonal) is the coefficient of
  // t^{3(d+1)}/(3(d+1))! in the denominator series, divided by (3(d+1))!.
  std::vector<Rat> band(n);
  for (unsigned d = 0; d < n; ++d) {
    unsigned l = d + 1;
    bool kept = kind == IncompleteKind::kAtMost ? l <= m : l >= m;
    if (kept) band[d] = Rat(factorial(3 * l)).inverse();
  }
  Rat det = hessenberg_det(LowerHessenberg::toeplitz(n, band, Rat(1)));
  Rat w = det * Rat(factorial(3 * n));
  if (n % 2 == 1) w = -w;
  if (!w.is_integer()) {
    throw ConsistencyError("incomplete determinant (" + std::to_string(n) + "," +
                           std::to_string(m) + ") not integral: " + w.str());
  }
  return w.num();
}

}  // namespace

IncompleteWTable w_le_recurrence(std::size_t count, unsigned m) {
  require(count, m);
  IncompleteWTable t{IncompleteKind::kAtMost, m, {ArbInt(1)}};
  for (std::size_t n = 1; n < count; ++n) {
    std::size_t lo = n > m ? n - m : 0;
    t.values.push_back(windowed(t.values, n, lo, n - 1));
  }
  return t;
}

IncompleteWTable w_ge_recurrence(std::size_t count, unsigned m) {
  require(count, m);
  IncompleteWTable t{IncompleteKind::kAtLeast, m, {ArbInt(1)}};
  for (std::size_t n = 1; n < count; ++n) {
    if (n < m) {
      t.values.emplace_back(0);
    } else {
      t.values.push_back(windowed(t.values, n, 0, n - m));
    }
  }
  return t;
}

ArbInt w_le_explicit(unsigned n, unsigned m) {
  require_index(n, m);
  return kernels::composition_sum(n, 1, m);
}

ArbInt w_ge_explicit(unsigned n, unsigned m) {
  require_index(n, m);
  if (m > n) return ArbInt(0);
  return kernels::composition_sum(n, m, kernels::kUnbounded);
}

ArbInt w_le_determinant(unsigned n, unsigned m) {
  require_index(n, m);
  return banded_determinant(n, m, IncompleteKind::kAtMost);
}

ArbInt w_ge_determinant(unsigned n, unsigned m) {
  require_index(n, m);
  return banded_determinant(n, m, IncompleteKind::kAtLeast);
}

ArbInt w_le_trudi(unsigned n, unsigned m) {
  require_index(n, m);
  return kernels::partition_sum(n, 1, m);
}

ArbInt w_ge_trudi(unsigned n, unsigned m) {
  require_index(n, m);
  if (m > n) return ArbInt(0);
  return kernels::partition_sum(n, m, kernels::kUnbounded);
}

IncompleteWTable incomplete_recurrence(IncompleteKind kind, std::size_t count, unsigned m) {
  return kind == IncompleteKind::kAtMost ? w_le_recurrence(count, m) : w_ge_recurrence(count, m);
}

ArbInt incomplete_explicit(IncompleteKind kind, unsigned n, unsigned m) {
  return kind == IncompleteKind::kAtMost ? w_le_explicit(n, m) : w_ge_explicit(n, m);
}

ArbInt incomplete_determinant(IncompleteKind kind, unsigned n, unsigned m) {
  return kind == IncompleteKind::kAtMost ? w_le_determinant(n, m) : w_ge_determinant(n, m);
}

ArbInt incomplete_trudi(IncompleteKind kind, unsigned n, unsigned m) {
  return kind == IncompleteKind::kAtMost ? w_le_trudi(n, m) : w_ge_trudi(n, m);
}

}  // namespace lehmer
