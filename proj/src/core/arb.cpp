#include "lehmer/arb.hpp"

#include <limits>
#include <ostream>

#include "lehmer/error.hpp"

namespace lehmer {

ArbInt ArbInt::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw InvalidInput("bad integer literal: " + s);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw InvalidInput("bad integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return ArbInt(mpz_class(s, 10));
}

bool ArbInt::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v_ >= lo && v_ <= hi;
}

std::int64_t ArbInt::to_int64() const {
  if (!fits_int64()) throw InvalidInput("integer out of int64 range: " + str());
  static_assert(sizeof(long) == 8, "LP64 assumed");
  return v_.get_si();
}

std::size_t ArbInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

ArbInt ArbInt::mod(const ArbInt& modulus) const {
  if (modulus.sign() <= 0) throw InvalidInput("modulus must be positive");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), modulus.v_.get_mpz_t());
  return ArbInt(std::move(r));
}

std::uint64_t ArbInt::mod_u64(std::uint64_t modulus) const {
  if (modulus == 0) throw InvalidInput("modulus must be positive");
  static_assert(sizeof(unsigned long) == 8, "LP64 assumed");
  return mpz_fdiv_ui(v_.get_mpz_t(), modulus);
}

ArbInt& ArbInt::operator/=(const ArbInt& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

ArbInt& ArbInt::operator%=(const ArbInt& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ArbInt& a) { return os << a.str(); }

ArbInt pow(const ArbInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return ArbInt(std::move(r));
}

ArbInt gcd(const ArbInt& a, const ArbInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return ArbInt(std::move(r));
}

ArbInt divexact(const ArbInt& a, const ArbInt& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  if (mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t()) == 0) {
    throw ConsistencyError(b.str() + " does not divide " + a.str());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return ArbInt(std::move(r));
}

Rat::Rat(const ArbInt& num, const ArbInt& den) {
  if (den.is_zero()) throw InvalidInput("zero denominator");
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(ArbInt::parse(text));
  return Rat(ArbInt::parse(text.substr(0, slash)), ArbInt::parse(text.substr(slash + 1)));
}

ArbInt Rat::to_integer() const {
  if (!is_integer()) throw ConsistencyError("expected an integer, got " + str());
  return num();
}

Rat Rat::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  return Rat(den(), num());
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  auto e = static_cast<unsigned long>(exponent);
  return Rat(pow(base.num(), e), pow(base.den(), e));
}

bool is_canonical(const Rat& r) {
  return r.den().sign() > 0 && gcd(r.num(), r.den()) == ArbInt(1);
}

}  // namespace lehmer
