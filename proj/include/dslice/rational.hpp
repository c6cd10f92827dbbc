#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dslice {

using Integer = mpz_class;

/// Exact fraction num/den, always reduced with den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Integer floor() const;
  Rational reciprocal() const;
  /// The representative of this number mod 1 in [0, 1).
  Rational fractional_part() const;

  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

/// Negative continued fraction [a1, ..., an]^- = a1 - 1/(a2 - 1/(... - 1/an)).
/// Every term is >= 2.
struct NegCF {
  std::vector<Integer> terms;

  friend bool operator==(const NegCF&, const NegCF&) = default;
};

/// The unique expansion of r > 1 with all terms >= 2.
NegCF neg_cf_expand(const Rational& r);
Rational neg_cf_eval(const NegCF& cf);

/// b_1, ..., b_{n+1} with b_{n+1} = 0, b_n = 1 and b_{k-1} = a_k b_k - b_{k+1}.
/// b_1 is the denominator of neg_cf_eval(cf).
std::vector<Integer> denominator_sequence(const NegCF& cf);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& value);

std::string to_string(const Integer& value);

}  // namespace dslice
