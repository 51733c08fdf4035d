#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "dmod/errors.hpp"

namespace dmod {

// All scalars are exact rationals; the domain keeps them canonical
// (0/1 for Boolean, residues 0..p-1 for 𝔽_p).
using Scalar = mpq_class;

class ScalarDomain {
 public:
  enum class Kind : std::uint8_t { Boolean, Rational, PrimeField };

  static ScalarDomain boolean() { return ScalarDomain(Kind::Boolean, 0); }
  static ScalarDomain rational() { return ScalarDomain(Kind::Rational, 0); }
  static ScalarDomain prime_field(std::uint32_t p);
  // 0 -> ℚ, prime p -> 𝔽_p.
  static ScalarDomain field_of_characteristic(std::uint32_t c);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != Kind::Boolean; }
  bool is_boolean() const noexcept { return kind_ == Kind::Boolean; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar from_mpz(const mpz_class& v) const { return normalize(Scalar(v)); }

  Scalar normalize(const Scalar& v) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  // Fields only.
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  std::string name() const;
  std::string format(const Scalar& a) const;

  friend bool operator==(const ScalarDomain& a, const ScalarDomain& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  ScalarDomain(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  void require_field(const char* op) const;

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace dmod
