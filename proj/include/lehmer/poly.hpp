#pragma once

// Dense univariate polynomials, coefficients in ascending degree, kept
// without trailing zeros (the zero polynomial has no coefficients).

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "lehmer/arb.hpp"

namespace lehmer {

template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  // x + a
  static Poly linear(T a) { return Poly(std::vector<T>{std::move(a), T(1)}); }
  static Poly monomial(std::size_t degree) {
    std::vector<T> c(degree + 1);
    c[degree] = T(1);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  // Coefficient of x^i, zero beyond the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // p(x + a), by Horner's rule in the shifted variable.
  Poly shift(const T& a) const {
    Poly out;
    const Poly step = linear(a);
    for (std::size_t i = c_.size(); i-- > 0;) out = out * step + constant(c_[i]);
    return out;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (T& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    os << '[';
    for (std::size_t i = 0; i < p.c_.size(); ++i) os << (i ? ", " : "") << p.c_[i];
    return os << ']';
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<ArbInt>;
using RatPoly = Poly<Rat>;

}  // namespace lehmer
