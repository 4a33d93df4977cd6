#pragma once

// Truncated formal power series over exact rationals, in three bases:
//   PowerSeries  sum a_n x^n               (ordinary)
//   Egf1         sum a_n t^n / n!          (exponential)
//   Egf3         sum c_l t^{3l} / (3l)!    (trisected exponential)
// All operations are exact and truncate to the order of their inputs.

#include <cstddef>
#include <vector>

#include "lehmer/arb.hpp"

namespace lehmer {

class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<Rat>(order)); }
  static PowerSeries one(std::size_t order);
  // exp(scale * x)
  static PowerSeries exponential(const Rat& scale, std::size_t order);

  std::size_t order() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rat& s);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rat& s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  // Throws InvalidInput on a zero constant term.
  PowerSeries inverse() const;
  // Square root with constant term 1 by Newton iteration g <- (g + f/g)/2.
  // Requires f(0) = 1.
  PowerSeries sqrt() const;
  // log f = integral of f'/f. Requires f(0) = 1.
  PowerSeries log() const;
  PowerSeries derivative() const;
  // Antiderivative with zero constant term, same order.
  PowerSeries integral() const;
  // Integer power; negative exponents require a nonzero constant term.
  PowerSeries pow(long exponent) const;

 private:
  std::vector<Rat> c_;
};

class Egf1 {
 public:
  Egf1() = default;
  explicit Egf1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  static Egf1 one(std::size_t order);

  std::size_t truncation_order() const { return c_.size(); }
  const Rat& operator[](std::size_t n) const { return c_[n]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  // Binomial convolution h_n = sum_k binom(n,k) f_k g_{n-k}.
  friend Egf1 operator*(const Egf1& f, const Egf1& g);
  friend bool operator==(const Egf1&, const Egf1&) = default;

  Egf1 inverse() const;

  PowerSeries to_ordinary() const;
  static Egf1 from_ordinary(const PowerSeries& p);

 private:
  std::vector<Rat> c_;
};

// f^exponent, truncated. exponent < 0 requires f_0 != 0.
Egf1 series_pow(const Egf1& f, long exponent);

class Egf3 {
 public:
  Egf3() = default;
  explicit Egf3(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  std::size_t truncation_order() const { return c_.size(); }
  const Rat& operator[](std::size_t l) const { return c_[l]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  // h_n = sum_k binom(3n, 3k) f_k g_{n-k}.
  friend Egf3 operator*(const Egf3& f, const Egf3& g);
  friend bool operator==(const Egf3&, const Egf3&) = default;

  // Expands onto the raw-index basis: entry 3l holds c_l, others zero.
  Egf1 to_egf1() const;

 private:
  std::vector<Rat> c_;
};

// g with f*g = 1 up to the truncation order. Throws InvalidInput when
// f_0 = 0.
Egf3 series_invert(const Egf3& f);

}  // namespace lehmer
