#include "lehmer/series.hpp"

#include <algorithm>

#include "lehmer/combinatorics.hpp"
#include "lehmer/error.hpp"

namespace lehmer {

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries p = zero(order);
  if (order > 0) p.c_[0] = Rat(1);
  return p;
}

PowerSeries PowerSeries::exponential(const Rat& scale, std::size_t order) {
  std::vector<Rat> c(order);
  Rat term(1);
  for (std::size_t n = 0; n < order; ++n) {
    c[n] = term;
    term = term * scale / Rat(n + 1);
  }
  return PowerSeries(std::move(c));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rat> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::inverse() const {
  if (c_.empty()) return *this;
  if (c_[0].is_zero()) throw InvalidInput("series inverse: zero constant term");
  Rat inv0 = c_[0].inverse();
  std::vector<Rat> g(c_.size());
  g[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rat acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!c_[k].is_zero()) acc += c_[k] * g[n - k];
    }
    g[n] = -acc * inv0;
  }
  return PowerSeries(std::move(g));
}

PowerSeries PowerSeries::sqrt() const {
  if (c_.empty()) return *this;
  if (c_[0] != Rat(1)) throw InvalidInput("series sqrt: constant term must be 1");
  PowerSeries g = one(order());
  const Rat half(ArbInt(1), ArbInt(2));
  for (;;) {
    PowerSeries next = (g + *this * g.inverse()) * half;
    if (next == g) return g;
    g = std::move(next);
  }
}

PowerSeries PowerSeries::derivative() const {
  std::vector<Rat> d(c_.size());
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(i);
  return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::integral() const {
  std::vector<Rat> d(c_.size());
  for (std::size_t i = 1; i < c_.size(); ++i) d[i] = c_[i - 1] / Rat(i);
  return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::log() const {
  if (c_.empty()) return *this;
  if (c_[0] != Rat(1)) throw InvalidInput("series log: constant term must be 1");
  return (derivative() * inverse()).integral();
}

PowerSeries PowerSeries::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  PowerSeries result = one(order());
  PowerSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

Egf1 Egf1::one(std::size_t order) {
  std::vector<Rat> c(order);
  if (order > 0) c[0] = Rat(1);
  return Egf1(std::move(c));
}

Egf1 operator*(const Egf1& f, const Egf1& g) {
  std::size_t n = std::min(f.truncation_order(), g.truncation_order());
  std::vector<Rat> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = binomial_row(static_cast<unsigned>(i));
    Rat acc;
    for (std::size_t k = 0; k <= i; ++k) {
      if (f.c_[k].is_zero() || g.c_[i - k].is_zero()) continue;
      acc += Rat(row[k]) * f.c_[k] * g.c_[i - k];
    }
    h[i] = std::move(acc);
  }
  return Egf1(std::move(h));
}

Egf1 Egf1::inverse() const {
  if (c_.empty()) return *this;
  if (c_[0].is_zero()) throw InvalidInput("series inverse: zero constant term");
  Rat inv0 = c_[0].inverse();
  std::vector<Rat> g(c_.size());
  g[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    auto row = binomial_row(static_cast<unsigned>(n));
    Rat acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!c_[k].is_zero() && !g[n - k].is_zero()) acc += Rat(row[k]) * c_[k] * g[n - k];
    }
    g[n] = -acc * inv0;
  }
  return Egf1(std::move(g));
}

PowerSeries Egf1::to_ordinary() const {
  std::vector<Rat> c(c_.size());
  for (std::size_t n = 0; n < c_.size(); ++n) {
    c[n] = c_[n] / Rat(factorial(static_cast<unsigned>(n)));
  }
  return PowerSeries(std::move(c));
}

Egf1 Egf1::from_ordinary(const PowerSeries& p) {
  std::vector<Rat> c(p.order());
  for (std::size_t n = 0; n < p.order(); ++n) {
    c[n] = p[n] * Rat(factorial(static_cast<unsigned>(n)));
  }
  return Egf1(std::move(c));
}

Egf1 series_pow(const Egf1& f, long exponent) {
  if (exponent < 0) {
    if (f.truncation_order() > 0 && f[0].is_zero()) {
      throw InvalidInput("series_pow: zero constant term with negative exponent");
    }
    return series_pow(f.inverse(), -exponent);
  }
  Egf1 result = Egf1::one(f.truncation_order());
  Egf1 base = f;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

Egf3 operator*(const Egf3& f, const Egf3& g) {
  std::size_t n = std::min(f.truncation_order(), g.truncation_order());
  std::vector<Rat> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat acc;
    for (std::size_t k = 0; k <= i; ++k) {
      if (f.c_[k].is_zero() || g.c_[i - k].is_zero()) continue;
      acc += Rat(binomial(static_cast<unsigned>(3 * i), static_cast<unsigned>(3 * k))) * f.c_[k] *
             g.c_[i - k];
    }
    h[i] = std::move(acc);
  }
  return Egf3(std::move(h));
}

Egf1 Egf3::to_egf1() const {
  std::vector<Rat> c(c_.empty() ? 0 : 3 * (c_.size() - 1) + 1);
  for (std::size_t l = 0; l < c_.size(); ++l) c[3 * l] = c_[l];
  return Egf1(std::move(c));
}

Egf3 series_invert(const Egf3& f) {
  const auto& c = f.coeffs();
  if (c.empty()) return f;
  if (c[0].is_zero()) throw InvalidInput("series_invert: zero constant term");
  Rat inv0 = c[0].inverse();
  std::vector<Rat> g(c.size());
  g[0] = inv0;
  for (std::size_t n = 1; n < c.size(); ++n) {
    auto row = binomial_row(static_cast<unsigned>(3 * n));
    Rat acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!c[k].is_zero()) acc += Rat(row[3 * k]) * c[k] * g[n - k];
    }
    g[n] = -acc * inv0;
  }
  return Egf3(std::move(g));
}

}  // namespace lehmer
