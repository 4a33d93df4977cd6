#pragma once

// a + b*w with w a primitive cube root of unity, w^2 = -1 - w.

#include <ostream>
#include <string>

#include "lehmer/arb.hpp"

namespace lehmer {

template <typename T>
class Eisenstein {
 public:
  Eisenstein() = default;
  Eisenstein(T a, T b = T(0)) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  static Eisenstein omega() { return Eisenstein(T(0), T(1)); }
  static Eisenstein omega_squared() { return Eisenstein(T(-1), T(-1)); }
  // sqrt(-3) = 1 + 2w
  static Eisenstein sqrt_minus_three() { return Eisenstein(T(1), T(2)); }

  const T& real_part() const { return a_; }  // coefficient of 1
  const T& omega_part() const { return b_; }  // coefficient of w
  bool is_rational() const { return b_ == T(0); }

  Eisenstein& operator+=(const Eisenstein& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Eisenstein& operator-=(const Eisenstein& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Eisenstein& operator*=(const Eisenstein& o) {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2 = (ac - bd) + (ad + bc - bd)w
    T bd = b_ * o.b_;
    T a = a_ * o.a_ - bd;
    T b = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Eisenstein& operator*=(const T& s) { a_ *= s; b_ *= s; return *this; }

  friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
  friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
  friend Eisenstein operator*(Eisenstein x, const T& s) { return x *= s; }
  Eisenstein operator-() const { return Eisenstein(-a_, -b_); }
  friend bool operator==(const Eisenstein&, const Eisenstein&) = default;

  // Complex conjugate: w -> w^2.
  Eisenstein conj() const { return Eisenstein(a_ - b_, -b_); }

  friend std::ostream& operator<<(std::ostream& os, const Eisenstein& z) {
    return os << z.a_ << (z.b_.sign() < 0 ? "" : "+") << z.b_ << "w";
  }

 private:
  T a_{};
  T b_{};
};

template <typename T>
Eisenstein<T> pow(Eisenstein<T> base, unsigned long exponent) {
  Eisenstein<T> result(T(1));
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

using EisensteinInt = Eisenstein<Rat>;

}  // namespace lehmer
