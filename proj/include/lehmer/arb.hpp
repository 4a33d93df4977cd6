#pragma once

// Exact integers and rationals. Thin value types over GMP; every Rat is
// kept in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lehmer {

class ArbInt {
 public:
  ArbInt() = default;

  template <std::signed_integral I>
  ArbInt(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral U>
  ArbInt(U v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit ArbInt(mpz_class v) : v_(std::move(v)) {}

  // Parses an optionally signed decimal string; throws InvalidInput.
  static ArbInt parse(std::string_view text);

  const mpz_class& mpz() const { return v_; }
  mpz_class& mpz() { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws InvalidInput when out of range
  std::string str() const { return v_.get_str(); }
  std::size_t bit_length() const;

  // Least non-negative residue, modulus > 0.
  ArbInt mod(const ArbInt& modulus) const;
  std::uint64_t mod_u64(std::uint64_t modulus) const;

  ArbInt abs() const { return ArbInt(mpz_class(::abs(v_))); }

  ArbInt& operator+=(const ArbInt& o) { v_ += o.v_; return *this; }
  ArbInt& operator-=(const ArbInt& o) { v_ -= o.v_; return *this; }
  ArbInt& operator*=(const ArbInt& o) { v_ *= o.v_; return *this; }
  // Truncating division; divisor must be nonzero.
  ArbInt& operator/=(const ArbInt& o);
  ArbInt& operator%=(const ArbInt& o);

  friend ArbInt operator+(ArbInt a, const ArbInt& b) { return a += b; }
  friend ArbInt operator-(ArbInt a, const ArbInt& b) { return a -= b; }
  friend ArbInt operator*(ArbInt a, const ArbInt& b) { return a *= b; }
  friend ArbInt operator/(ArbInt a, const ArbInt& b) { return a /= b; }
  friend ArbInt operator%(ArbInt a, const ArbInt& b) { return a %= b; }
  ArbInt operator-() const { return ArbInt(mpz_class(-v_)); }

  friend bool operator==(const ArbInt& a, const ArbInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ArbInt& a, const ArbInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ArbInt& a);

 private:
  mpz_class v_;
};

ArbInt pow(const ArbInt& base, unsigned long exponent);
ArbInt gcd(const ArbInt& a, const ArbInt& b);
// Exact quotient; throws ConsistencyError when b does not divide a.
ArbInt divexact(const ArbInt& a, const ArbInt& b);

class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I v) : v_(ArbInt(v).mpz()) {}  // NOLINT(google-explicit-constructor)
  Rat(const ArbInt& v) : v_(v.mpz()) {}  // NOLINT(google-explicit-constructor)
  // Throws InvalidInput on a zero denominator.
  Rat(const ArbInt& num, const ArbInt& den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // "p/q" or "p".
  static Rat parse(std::string_view text);

  ArbInt num() const { return ArbInt(v_.get_num()); }
  ArbInt den() const { return ArbInt(v_.get_den()); }
  const mpq_class& mpq() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // Throws ConsistencyError when not integral.
  ArbInt to_integer() const;
  std::string str() const { return v_.get_str(); }
  Rat inverse() const;  // throws InvalidInput on zero

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

Rat pow(const Rat& base, long exponent);

// True when numerator and denominator are coprime and den > 0; used by
// property tests to check that no operation leaks a non-canonical value.
bool is_canonical(const Rat& r);

}  // namespace lehmer
