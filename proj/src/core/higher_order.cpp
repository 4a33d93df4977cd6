#include "lehmer/higher_order.hpp"

#include <sstream>
#include <string>

#include "lehmer/combinatorics.hpp"
#include "lehmer/eisenstein.hpp"
#include "lehmer/error.hpp"
#include "lehmer/series.hpp"

namespace lehmer {

HigherWTable w_higher_series(unsigned r, unsigned alpha, std::size_t count) {
  if (r < 2) throw InvalidInput("step r must be at least 2");
  if (alpha < 1) throw InvalidInput("order alpha must be at least 1");
  if (count == 0) throw InvalidInput("table size must be at least 1");
  std::vector<Rat> step(count);
  for (std::size_t n = 0; n < count; n += r) step[n] = Rat(1);
  Egf1 g = series_pow(Egf1(std::move(step)), -static_cast<long>(alpha));
  HigherWTable t{r, alpha, {}};
  t.values.reserve(count);
  for (const Rat& c : g.coeffs()) t.values.push_back(c.to_integer());
  return t;
}

namespace {

// Outer weight (-1/r)^k binom(alpha+k-1, k) binom(alpha+n, n-k).
Rat outer_weight(unsigned r, unsigned alpha, unsigned n, unsigned k) {
  ArbInt w = binomial(alpha + k - 1, k) * binomial(alpha + n, n - k);
  ArbInt den = pow(ArbInt(r), k);
  return Rat(k % 2 == 0 ? w : -w, den);
}

// sum_{i_1+i_2 = k} k!/(i_1! i_2!) (i_1 - i_2)^n, zeta_2 = -1.
ArbInt inner_r2(unsigned k, unsigned n) {
  ArbInt sum;
  for (unsigned i1 = 0; i1 <= k; ++i1) {
    unsigned i2 = k - i1;
    const unsigned parts[] = {i1, i2};
    sum += multinomial(parts) * pow(ArbInt(static_cast<long>(i1) - static_cast<long>(i2)), n);
  }
  return sum;
}

// sum_{i_1+i_2+i_3 = k} k!/(i_1! i_2! i_3!) (i_1 + i_2 w + i_3 w^2)^n.
Eisenstein<ArbInt> inner_r3(unsigned k, unsigned n) {
  Eisenstein<ArbInt> sum;
  for (unsigned i1 = 0; i1 <= k; ++i1) {
    for (unsigned i2 = 0; i1 + i2 <= k; ++i2) {
      unsigned i3 = k - i1 - i2;
      const unsigned parts[] = {i1, i2, i3};
      // i_1 + i_2 w + i_3 (-1 - w) = (i_1 - i_3) + (i_2 - i_3) w
      Eisenstein<ArbInt> z(ArbInt(static_cast<long>(i1) - static_cast<long>(i3)),
                           ArbInt(static_cast<long>(i2) - static_cast<long>(i3)));
      sum += pow(z, n) * multinomial(parts);
    }
  }
  return sum;
}

}  // namespace

ArbInt w_higher_explicit(unsigned r, unsigned alpha, unsigned n) {
  if (r != 2 && r != 3) throw InvalidInput("explicit formula is evaluated for r in {2, 3} only");
  if (alpha < 1) throw InvalidInput("order alpha must be at least 1");
  EisensteinInt total;
  for (unsigned k = 0; k <= n; ++k) {
    Rat weight = outer_weight(r, alpha, n, k);
    if (r == 2) {
      total += EisensteinInt(weight * Rat(inner_r2(k, n)));
    } else {
      Eisenstein<ArbInt> inner = inner_r3(k, n);
      total += EisensteinInt(Rat(inner.real_part()), Rat(inner.omega_part())) * weight;
    }
  }
  if (!total.is_rational() || !total.real_part().is_integer()) {
    std::ostringstream os;
    os << total;
    throw ConsistencyError("explicit W_{" + std::to_string(r) + "," + std::to_string(n) +
                           "} is not a rational integer: " + os.str());
  }
  return total.real_part().num();
}

ArbInt euler_higher_luo(unsigned alpha, unsigned n) {
  if (alpha < 1) throw InvalidInput("order alpha must be at least 1");
  Rat total;
  for (unsigned k = 0; k <= n; ++k) {
    ArbInt inner;
    for (unsigned j = 0; j <= k; ++j) {
      inner += binomial(k, j) * pow(ArbInt(static_cast<long>(k) - 2L * j), n);
    }
    total += outer_weight(2, alpha, n, k) * Rat(inner);
  }
  if (!total.is_integer()) {
    throw ConsistencyError("Luo E_" + std::to_string(n) + "^(" + std::to_string(alpha) +
                           ") not integral: " + total.str());
  }
  return total.num();
}

}  // namespace lehmer
