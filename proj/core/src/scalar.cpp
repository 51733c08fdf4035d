#include "dmod/scalar.hpp"

namespace dmod {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ScalarDomain ScalarDomain::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("prime field: modulus " + std::to_string(p) + " is not prime");
  return ScalarDomain(Kind::PrimeField, p);
}

ScalarDomain ScalarDomain::field_of_characteristic(std::uint32_t c) {
  return c == 0 ? rational() : prime_field(c);
}

Scalar ScalarDomain::normalize(const Scalar& v) const {
  switch (kind_) {
    case Kind::Boolean:
      return Scalar(sgn(v) != 0 ? 1 : 0);
    case Kind::Rational: {
      Scalar r = v;
      r.canonicalize();
      return r;
    }
    case Kind::PrimeField: {
      mpz_class m(p_), num = v.get_num(), den = v.get_den();
      mpz_class r = num % m;
      if (r < 0) r += m;
      if (den != 1) {
        mpz_class d = den % m, dinv;
        if (d == 0 || mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
          throw DomainError("prime field: denominator divisible by p");
        r = (r * dinv) % m;
      }
      return Scalar(r);
    }
  }
  return v;
}

Scalar ScalarDomain::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Boolean:
      return Scalar((sgn(a) != 0 || sgn(b) != 0) ? 1 : 0);
    case Kind::Rational:
      return a + b;
    case Kind::PrimeField: {
      mpz_class s = a.get_num() + b.get_num();
      if (s >= p_) s -= p_;
      return Scalar(s);
    }
  }
  return a + b;
}

Scalar ScalarDomain::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Boolean:
      return Scalar((sgn(a) != 0 && sgn(b) != 0) ? 1 : 0);
    case Kind::Rational:
      return a * b;
    case Kind::PrimeField:
      return Scalar(mpz_class(a.get_num() * b.get_num()) % p_);
  }
  return a * b;
}

void ScalarDomain::require_field(const char* op) const {
  if (!is_field()) throw UnsupportedDomainError(std::string(op) + ": the Boolean semiring has no additive inverses");
}

Scalar ScalarDomain::sub(const Scalar& a, const Scalar& b) const {
  require_field("sub");
  return add(a, neg(b));
}

Scalar ScalarDomain::neg(const Scalar& a) const {
  require_field("neg");
  if (kind_ == Kind::Rational) return -a;
  return is_zero(a) ? a : Scalar(mpz_class(p_) - a.get_num());
}

Scalar ScalarDomain::inv(const Scalar& a) const {
  require_field("inv");
  if (is_zero(a)) throw DomainError("division by zero");
  if (kind_ == Kind::Rational) return 1 / a;
  mpz_class r, m(p_), x = a.get_num();
  mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

std::string ScalarDomain::name() const {
  switch (kind_) {
    case Kind::Boolean:
      return "bool";
    case Kind::Rational:
      return "Q";
    case Kind::PrimeField:
      return "F" + std::to_string(p_);
  }
  return "?";
}

std::string ScalarDomain::format(const Scalar& a) const {
  if (kind_ == Kind::Boolean) return is_zero(a) ? "0" : "1";
  return a.get_str();
}

}  // namespace dmod
