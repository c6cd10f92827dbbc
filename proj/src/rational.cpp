#include "dslice/rational.hpp"

#include <stdexcept>
#include <utility>

#include "dslice/errors.hpp"

namespace dslice {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Integer Rational::floor() const {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return result;
}

Rational Rational::reciprocal() const {
  if (value_ == 0) throw PreconditionError("reciprocal of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::fractional_part() const { return *this - Rational(floor()); }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.value_ == 0) throw PreconditionError("division by zero");
  value_ /= other.value_;
  return *this;
}

NegCF neg_cf_expand(const Rational& r) {
  if (r <= Rational(1)) {
    throw PreconditionError("negative continued fraction needs r > 1, got " + r.to_string());
  }
  NegCF cf;
  Integer p = r.num();
  Integer q = r.den();
  // p/q = a - q'/q with a = ceil(p/q); continue with q/q' while q' != 0.
  while (q != 0) {
    Integer a;
    mpz_cdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    cf.terms.push_back(a);
    Integer rest = a * q - p;
    p = q;
    q = rest;
  }
  return cf;
}

Rational neg_cf_eval(const NegCF& cf) {
  if (cf.terms.empty()) throw PreconditionError("empty continued fraction");
  for (const auto& a : cf.terms) {
    if (a < 2) throw PreconditionError("continued fraction term below 2");
  }
  Rational value(cf.terms.back());
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
    value = Rational(*it) - value.reciprocal();
  }
  return value;
}

std::vector<Integer> denominator_sequence(const NegCF& cf) {
  const std::size_t n = cf.terms.size();
  if (n == 0) throw PreconditionError("empty continued fraction");
  std::vector<Integer> b(n + 1);
  b[n] = 0;
  b[n - 1] = 1;
  // 0-based: b[k-2] = a[k-1] * b[k-1] - b[k] for k = n..2
  for (std::size_t k = n; k >= 2; --k) {
    b[k - 2] = cf.terms[k - 1] * b[k - 1] - b[k];
  }
  return b;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer " + value.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(value.get_si());
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace dslice
