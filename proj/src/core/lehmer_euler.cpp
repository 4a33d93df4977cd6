#include "lehmer/lehmer_euler.hpp"

#include <string>

#include "lehmer/combinatorics.hpp"
#include "lehmer/error.hpp"
#include "lehmer/hessenberg.hpp"
#include "lehmer/kernels.hpp"
#include "lehmer/series.hpp"

namespace lehmer {

std::string_view method_name(WMethod m) {
  switch (m) {
    case WMethod::kRecurrence: return "recurrence";
    case WMethod::kExplicit: return "explicit";
    case WMethod::kDeterminant: return "determinant";
    case WMethod::kTrudi: return "trudi";
    case WMethod::kSeries: return "series";
  }
  return "?";
}

WMethod parse_method(std::string_view name) {
  for (auto m : {WMethod::kRecurrence, WMethod::kExplicit, WMethod::kDeterminant, WMethod::kTrudi,
                 WMethod::kSeries}) {
    if (method_name(m) == name) return m;
  }
  throw InvalidInput("unknown method: " + std::string(name));
}

ArbInt WTable::raw(std::size_t m) const {
  if (m % 3 != 0) return ArbInt(0);
  return values.at(m / 3);
}

ArbInt ETable::raw(std::size_t m) const {
  if (m % 2 != 0) return ArbInt(0);
  return values.at(m / 2);
}

namespace {

void require_count(std::size_t count) {
  if (count == 0) throw InvalidInput("table size must be at least 1");
}

void require_index(unsigned n) {
  if (n == 0) throw InvalidInput("index must be at least 1");
}

// -sum_{k<n} binom(step*n, step*k) v_k, the shared shape of both
// reciprocal-series recurrences.
std::vector<ArbInt> sectioned_reciprocal(std::size_t count, unsigned step) {
  std::vector<ArbInt> v;
  v.reserve(count);
  v.emplace_back(1);
  for (std::size_t n = 1; n < count; ++n) {
    auto row = binomial_row(static_cast<unsigned>(step * n));
    mpz_class acc;
    for (std::size_t k = 0; k < n; ++k) {
      mpz_addmul(acc.get_mpz_t(), row[step * k].mpz().get_mpz_t(), v[k].mpz().get_mpz_t());
    }
    v.emplace_back(mpz_class(-acc));
  }
  return v;
}

}  // namespace

WTable w_recurrence(std::size_t count) {
  require_count(count);
  return WTable{sectioned_reciprocal(count, 3), WMethod::kRecurrence};
}

ArbInt w_explicit(unsigned n) {
  require_index(n);
  return kernels::composition_sum(n, 1, kernels::kUnbounded);
}

ArbInt w_determinant(unsigned n) {
  require_index(n);
  std::vector<Rat> band(n);
  for (unsigned d = 0; d < n; ++d) band[d] = Rat(factorial(3 * (d + 1))).inverse();
  Rat det = hessenberg_det(LowerHessenberg::toeplitz(n, band, Rat(1)));
  Rat w = det * Rat(factorial(3 * n));
  if (n % 2 == 1) w = -w;
  if (!w.is_integer()) {
    throw ConsistencyError("w_determinant(" + std::to_string(n) + ") not integral: " + w.str());
  }
  return w.num();
}

ArbInt w_trudi(unsigned n) {
  require_index(n);
  return kernels::partition_sum(n, 1, kernels::kUnbounded);
}

WTable w_series(std::size_t count) {
  require_count(count);
  Egf3 g = series_invert(Egf3(std::vector<Rat>(count, Rat(1))));
  WTable t{{}, WMethod::kSeries};
  t.values.reserve(count);
  for (const Rat& c : g.coeffs()) t.values.push_back(c.to_integer());
  return t;
}

WTable w_table(WMethod method, std::size_t count) {
  require_count(count);
  switch (method) {
    case WMethod::kRecurrence: return w_recurrence(count);
    case WMethod::kSeries: return w_series(count);
    default: break;
  }
  WTable t{{ArbInt(1)}, method};
  for (unsigned n = 1; n < count; ++n) {
    switch (method) {
      case WMethod::kExplicit: t.values.push_back(w_explicit(n)); break;
      case WMethod::kDeterminant: t.values.push_back(w_determinant(n)); break;
      default: t.values.push_back(w_trudi(n)); break;
    }
  }
  return t;
}

bool inversion_det_check(unsigned n, const WTable& w) {
  require_index(n);
  if (w.size() <= n) throw InvalidInput("inversion_det_check: table too short");
  std::vector<Rat> band(n);
  for (unsigned d = 0; d < n; ++d) {
    band[d] = Rat(w[d + 1], factorial(3 * (d + 1)));
  }
  Rat det = hessenberg_det(LowerHessenberg::toeplitz(n, band, Rat(1)));
  Rat expected = Rat(ArbInt(n % 2 == 0 ? 1 : -1), factorial(3 * n));
  return det == expected;
}

bool inversion_det_check(unsigned n) { return inversion_det_check(n, w_recurrence(n + 1)); }

ETable euler_numbers(std::size_t count) {
  require_count(count);
  return ETable{sectioned_reciprocal(count, 2)};
}

}  // namespace lehmer
