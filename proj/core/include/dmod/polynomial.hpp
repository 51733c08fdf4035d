#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dmod/multiset.hpp"
#include "dmod/scalar.hpp"

namespace dmod {

// Exponent multiset over the variables 1..v.
using Monomial = Multiset<std::uint32_t>;

std::string monomial_to_string(const Monomial& m, std::uint32_t vars);
// (degree, then larger exponent of x1 first, then x2, ...)
bool graded_lex_less(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  Polynomial(ScalarDomain k, std::uint32_t vars);
  static Polynomial constant(ScalarDomain k, std::uint32_t vars, const Scalar& c);
  static Polynomial monomial(ScalarDomain k, std::uint32_t vars, const Monomial& m, const Scalar& c = Scalar(1));
  // x_i, 1 <= i <= vars
  static Polynomial variable(ScalarDomain k, std::uint32_t vars, std::uint32_t i);

  const ScalarDomain& scalars() const noexcept { return k_; }
  std::uint32_t vars() const noexcept { return vars_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  std::uint64_t degree() const;  // 0 for the zero polynomial

  void add_term(const Monomial& m, const Scalar& c);
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.k_ == b.k_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  ScalarDomain k_;
  std::uint32_t vars_;
  std::map<Monomial, Scalar> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
// ∂f/∂x_i
Polynomial partial(const Polynomial& f, std::uint32_t i);

// All order-r mixed partials, indexed by tuples over 1..v; zero entries omitted.
struct DerivativeFamily {
  unsigned order = 0;
  std::map<std::vector<std::uint32_t>, Polynomial> entries;
  bool symmetric() const;
};
DerivativeFamily dstar(const Polynomial& f, unsigned r);

// Σ_r Σ_{|α|=r} (1/α!)·∂^α f(0)·x^α. Rational coefficients only.
Polynomial taylor_reconstruct(const Polynomial& f);

// Whether every order-(r+1) derivative of x^M vanishes: falling(M, β) = 0 in
// k for every β <= M with |β| = r+1.
template <class L>
bool monomial_kernel_predicate(const Multiset<L>& m, unsigned r, const ScalarDomain& k) {
  const auto& e = m.entries();
  std::vector<std::uint32_t> beta(e.size(), 0);
  // Depth-first over β; stops at the first β with a nonzero falling factorial.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> bool {
    if (left == 0) {
      mpz_class f = 1;
      for (std::size_t j = 0; j < e.size(); ++j)
        for (std::uint32_t t = 0; t < beta[j]; ++t) f *= e[j].second - t;
      return ScalarDomain::is_zero(k.from_mpz(f));
    }
    if (i == e.size()) return true;
    for (std::uint32_t c = std::min<std::uint32_t>(left, e[i].second);; --c) {
      beta[i] = c;
      if (!self(self, i + 1, left - c)) return false;
      if (c == 0) break;
    }
    beta[i] = 0;
    return true;
  };
  return rec(rec, 0, r + 1);
}

}  // namespace dmod
