#include "lehmer/central_factorial.hpp"

#include <string>

#include "lehmer/combinatorics.hpp"
#include "lehmer/error.hpp"
#include "lehmer/lehmer_euler.hpp"
#include "lehmer/series.hpp"

namespace lehmer {

std::vector<IntPoly> delta_polys(unsigned kmax) {
  std::vector<IntPoly> out{IntPoly::constant(ArbInt(1))};
  out.reserve(kmax + 1);
  // (x+1)(2x+1) = 2x^2 + 3x + 1
  const IntPoly lift(std::vector<ArbInt>{1, 3, 2});
  const IntPoly x2 = IntPoly::monomial(2);
  for (unsigned k = 0; k < kmax; ++k) {
    const IntPoly& d = out.back();
    out.push_back(lift * d.shift(ArbInt(1)) - x2 * d);
  }
  return out;
}

IntPoly delta_poly(unsigned k) { return delta_polys(k).back(); }

Rat CfnTable::at(std::size_t n, std::size_t k) const {
  if (n >= rows.size() || k > n) return Rat(0);
  return rows[n][k];
}

namespace {

// Rows 0 and 1 are x^0 and x^1; row n from row n-2 by
// c(n, k) = c(n-2, k-2) + weight(n, k) c(n-2, k).
template <typename Weight>
CfnTable two_step_table(unsigned nmax, Weight weight) {
  CfnTable t;
  t.rows.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    std::vector<Rat> row(n + 1);
    if (n < 2) {
      row[n] = Rat(1);
    } else {
      const std::vector<Rat>& prev = t.rows[n - 2];
      for (unsigned k = 0; k <= n; ++k) {
        if ((n + k) % 2 != 0) continue;
        Rat v = k >= 2 ? prev[k - 2] : Rat(0);
        if (k <= n - 2) v += weight(n, k) * prev[k];
        row[k] = std::move(v);
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

CfnTable cfn_first_table(unsigned nmax) {
  return two_step_table(nmax, [](unsigned n, unsigned) {
    return Rat(-ArbInt((n - 2) * (n - 2)), ArbInt(4));
  });
}

CfnTable cfn_second_table(unsigned nmax) {
  return two_step_table(nmax, [](unsigned, unsigned k) { return Rat(ArbInt(k * k), ArbInt(4)); });
}

Rat t_first(unsigned n, unsigned k) { return cfn_first_table(n).at(n, k); }

Rat T_second(unsigned n, unsigned k) { return cfn_second_table(n).at(n, k); }

RatPoly central_factorial_product(unsigned k) {
  RatPoly p = RatPoly::constant(Rat(1));
  if (k == 0) return p;
  p = RatPoly::monomial(1);
  // factors x + k/2 - i, i = 1 .. k-1
  for (unsigned i = 1; i < k; ++i) {
    p = p * RatPoly::linear(Rat(ArbInt(k), ArbInt(2)) - Rat(i));
  }
  return p;
}

std::vector<Rat> t_first_via_product(unsigned n) {
  if (n < 1) throw InvalidInput("row index must be at least 1");
  RatPoly p = central_factorial_product(n);
  std::vector<Rat> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) out[k] = p[k];
  CfnTable t = cfn_first_table(n);
  if (out != t.rows[n]) {
    throw ConsistencyError("t(" + std::to_string(n) + ", .) from the product differs from the recurrence");
  }
  return out;
}

namespace {

// k! t(n, k) / n! for n <= order, compared with the series coefficients.
bool matches_gf(const PowerSeries& s, const CfnTable& t, unsigned k, unsigned order) {
  for (unsigned n = 0; n <= order; ++n) {
    Rat want = Rat(factorial(k)) * t.at(n, k) / Rat(factorial(n));
    if (s[n] != want) return false;
  }
  return true;
}

}  // namespace

bool gf_check_first(unsigned k, unsigned order) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  const std::size_t len = order + 1;
  PowerSeries f = PowerSeries::one(len);
  if (len > 2) f[2] = Rat(1, 4);
  PowerSeries g = f.sqrt();
  if (len > 1) g[1] += Rat(1, 2);
  PowerSeries a = g.log() * Rat(2);
  return matches_gf(a.pow(k), cfn_first_table(order), k, order);
}

bool gf_check_second(unsigned k, unsigned order) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  const std::size_t len = order + 1;
  PowerSeries d = PowerSeries::exponential(Rat(1, 2), len) -
                  PowerSeries::exponential(Rat(-1, 2), len);
  return matches_gf(d.pow(k), cfn_second_table(order), k, order);
}

bool basis_check_second(unsigned n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  CfnTable t = cfn_second_table(n);
  RatPoly sum;
  for (unsigned k = 0; k <= n; ++k) {
    if (!t.at(n, k).is_zero()) sum += central_factorial_product(k) * t.at(n, k);
  }
  return sum == RatPoly::monomial(n);
}

bool thm5_check(unsigned n, unsigned k) {
  ETable e = euler_numbers(n + k + 1);
  CfnTable t = cfn_second_table(2 * n);
  IntPoly delta = delta_poly(k);
  Rat rhs;
  for (unsigned j = 0; j <= n; ++j) {
    Rat term = Rat(factorial(2 * j) * delta.eval(ArbInt(j)), pow(ArbInt(2), j)) * t.at(2 * n, 2 * j);
    if ((j + k) % 2 == 1) term = -term;
    rhs += term;
  }
  return rhs == Rat(e[n + k]);
}

bool thm6_check(unsigned n) {
  CfnTable t = cfn_first_table(2 * n + 1);
  std::vector<IntPoly> delta = delta_polys(n);
  IntPoly lhs;
  for (unsigned j = 0; j <= n; ++j) {
    Rat c = t.at(2 * n + 1, 2 * j + 1) * pow(Rat(4), static_cast<long>(n - j));
    if (!c.is_integer()) return false;
    ArbInt ci = c.num();
    if ((n - j) % 2 == 1) ci = -ci;
    lhs += delta[j] * ci;
  }
  IntPoly rhs = IntPoly::constant(ArbInt(1));
  for (unsigned i = 1; i <= 2 * n; ++i) rhs = rhs * IntPoly::linear(ArbInt(i));
  return lhs == rhs;
}

bool thm6_remark_check(unsigned n) {
  CfnTable t = cfn_first_table(2 * n + 1);
  ETable e = euler_numbers(n + 1);
  Rat lhs;
  for (unsigned j = 0; j <= n; ++j) {
    lhs += pow(Rat(4), static_cast<long>(n - j)) * t.at(2 * n + 1, 2 * j + 1) * Rat(e[j]);
  }
  ArbInt rhs = factorial(2 * n);
  if (n % 2 == 1) rhs = -rhs;
  return lhs == Rat(rhs);
}

}  // namespace lehmer
