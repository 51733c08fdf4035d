#include "dmod/polynomial.hpp"

#include <functional>

namespace dmod {

std::string monomial_to_string(const Monomial& m, std::uint32_t vars) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [i, c] : m.entries()) {
    if (!out.empty()) out += "*";
    out += vars == 1 ? "x" : "x" + std::to_string(i);
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ea = a.entries(), eb = b.entries();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
    if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
  }
  return false;
}

Polynomial::Polynomial(ScalarDomain k, std::uint32_t vars) : k_(k), vars_(vars) {
  if (!k.is_field()) throw UnsupportedDomainError("polynomials need a field");
}

Polynomial Polynomial::constant(ScalarDomain k, std::uint32_t vars, const Scalar& c) {
  return monomial(k, vars, Monomial{}, c);
}

Polynomial Polynomial::monomial(ScalarDomain k, std::uint32_t vars, const Monomial& m, const Scalar& c) {
  for (const auto& [i, e] : m.entries())
    if (i < 1 || i > vars) throw DomainError("monomial: variable index out of range");
  Polynomial p(k, vars);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(ScalarDomain k, std::uint32_t vars, std::uint32_t i) {
  return monomial(k, vars, Monomial{i});
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  Scalar v = k_.add(coefficient(m), k_.normalize(c));
  if (ScalarDomain::is_zero(v)) {
    terms_.erase(m);
  } else {
    terms_[m] = v;
  }
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Scalar>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return graded_lex_less(b->first, a->first); });
  std::string out;
  for (auto* t : order) {
    const auto& [m, c] = *t;
    if (!out.empty()) out += " + ";
    bool unit = c == 1 && !m.empty();
    if (!unit) out += k_.format(c);
    if (!m.empty()) out += (unit ? "" : "*") + monomial_to_string(m, vars_);
  }
  return out;
}

namespace {

void same_ring(const Polynomial& f, const Polynomial& g) {
  if (!(f.scalars() == g.scalars()) || f.vars() != g.vars()) throw DomainError("polynomials over different rings");
}

}  // namespace

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  same_ring(f, g);
  Polynomial out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c);
  return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  same_ring(f, g);
  const auto& k = f.scalars();
  Polynomial out(k, f.vars());
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) out.add_term(a + b, k.mul(x, y));
  return out;
}

Polynomial partial(const Polynomial& f, std::uint32_t i) {
  if (i < 1 || i > f.vars()) throw DomainError("partial: variable index out of range");
  const auto& k = f.scalars();
  Polynomial out(k, f.vars());
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t e = m.count(i);
    if (e == 0) continue;
    Monomial rest = m;
    rest.remove(i);
    out.add_term(rest, k.mul(c, k.from_int(e)));
  }
  return out;
}

bool DerivativeFamily::symmetric() const {
  for (const auto& [t, p] : entries) {
    auto s = t;
    std::sort(s.begin(), s.end());
    do {
      auto it = entries.find(s);
      if (it == entries.end() || !(it->second == p)) return false;
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return true;
}

DerivativeFamily dstar(const Polynomial& f, unsigned r) {
  DerivativeFamily out;
  out.order = r;
  std::vector<std::uint32_t> t;
  std::function<void(const Polynomial&)> rec = [&](const Polynomial& g) {
    if (g.is_zero()) return;
    if (t.size() == r) {
      out.entries.emplace(t, g);
      return;
    }
    for (std::uint32_t i = 1; i <= f.vars(); ++i) {
      t.push_back(i);
      rec(partial(g, i));
      t.pop_back();
    }
  };
  rec(f);
  return out;
}

Polynomial taylor_reconstruct(const Polynomial& f) {
  const auto& k = f.scalars();
  if (k.kind() != ScalarDomain::Kind::Rational)
    throw UnsupportedDomainError("taylor_reconstruct: requires characteristic 0 (divides by alpha!)");
  Polynomial out(k, f.vars());
  for (unsigned r = 0; r <= f.degree(); ++r) {
    // Each α of size r appears once as the sorted tuple in the family.
    for (const auto& [t, g] : dstar(f, r).entries) {
      if (!std::is_sorted(t.begin(), t.end())) continue;
      Monomial alpha = Monomial::from_items(t);
      Scalar at_zero = g.coefficient(Monomial{});
      if (ScalarDomain::is_zero(at_zero)) continue;
      out.add_term(alpha, k.div(at_zero, k.from_mpz(mfact(alpha))));
    }
  }
  return out;
}

}  // namespace dmod
