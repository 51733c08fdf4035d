#include <doctest.h>

#include <random>

#include "dmod/poly_model.hpp"
#include "dmod/polynomial.hpp"

using namespace dmod;

namespace {

Monomial mono(std::vector<std::uint32_t> exps) {
  Monomial m;
  for (std::uint32_t i = 0; i < exps.size(); ++i)
    if (exps[i]) m.add(i + 1, exps[i]);
  return m;
}

std::vector<Monomial> all_monomials(std::uint32_t v, unsigned D) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(v, 0);
  std::function<void(std::uint32_t, unsigned)> rec = [&](std::uint32_t i, unsigned left) {
    if (i == v) {
      out.push_back(mono(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, D);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

// Every order-(r+1) iterated partial of x^M vanishes, by repeated differentiation.
bool derivatives_vanish(const Monomial& m, std::uint32_t v, unsigned r, const ScalarDomain& k) {
  std::vector<Polynomial> layer{Polynomial::monomial(k, v, m)};
  for (unsigned step = 0; step <= r; ++step) {
    std::vector<Polynomial> next;
    for (const auto& f : layer)
      for (std::uint32_t i = 1; i <= v; ++i) {
        auto g = partial(f, i);
        if (!g.is_zero()) next.push_back(g);
      }
    layer = std::move(next);
  }
  return layer.empty();
}

Polynomial random_poly(std::mt19937_64& rng, std::uint32_t v, unsigned deg) {
  auto q = ScalarDomain::rational();
  Polynomial f(q, v);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4);
  for (const auto& m : all_monomials(v, deg))
    if (rng() % 3 == 0) f.add_term(m, Scalar(coef(rng), den(rng)));
  return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto q = ScalarDomain::rational();
  auto x = Polynomial::variable(q, 1, 1), one = Polynomial::constant(q, 1, 1);
  auto s = poly_add(x, one);
  CHECK(poly_mul(s, one) == s);
  auto sq = poly_mul(s, s);
  CHECK(sq.coefficient(mono({2})) == 1);
  CHECK(sq.coefficient(mono({1})) == 2);
  CHECK(sq.coefficient(mono({0})) == 1);

  auto f2 = ScalarDomain::prime_field(2);
  auto x2 = Polynomial::variable(f2, 1, 1), one2 = Polynomial::constant(f2, 1, 1);
  auto s2 = poly_add(x2, one2);
  CHECK(poly_mul(s2, s2) == poly_add(Polynomial::monomial(f2, 1, mono({2})), one2));

  CHECK(monomial_to_string(mono({5}), 1) == "x^5");
  CHECK(monomial_to_string(mono({1, 2}), 2) == "x1*x2^2");
  CHECK(monomial_to_string(Monomial{}, 3) == "1");
  CHECK_THROWS(Polynomial::variable(q, 2, 3));
}

TEST_CASE("graded lexicographic order") {
  CHECK(graded_lex_less(mono({0, 0}), mono({1, 0})));
  CHECK(graded_lex_less(mono({1, 0}), mono({0, 1})));
  CHECK(graded_lex_less(mono({2, 0}), mono({1, 1})));
  CHECK(graded_lex_less(mono({0, 2}), mono({3, 0})));
  CHECK_FALSE(graded_lex_less(mono({1, 1}), mono({1, 1})));
}

TEST_CASE("partial derivatives") {
  auto q = ScalarDomain::rational();
  CHECK(partial(Polynomial::monomial(q, 1, mono({2})), 1) == Polynomial::monomial(q, 1, mono({1}), 2));
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto k = ScalarDomain::prime_field(p);
    CHECK(partial(Polynomial::monomial(k, 2, mono({p, 0})), 1).is_zero());
  }
  auto m = mono({3, 2, 1});
  for (std::uint32_t i = 1; i <= 3; ++i)
    CHECK(partial(Polynomial::monomial(q, 3, m), i).coefficient(m - mono({i == 1, i == 2, i == 3})) == m.count(i));
  CHECK_THROWS(partial(Polynomial::monomial(q, 2, m), 3));
}

TEST_CASE("derivative families") {
  auto q = ScalarDomain::rational();
  auto f = poly_add(Polynomial::monomial(q, 2, mono({1, 1}), 3), Polynomial::monomial(q, 2, mono({2, 0})));
  auto d0 = dstar(f, 0);
  REQUIRE(d0.entries.size() == 1);
  CHECK(d0.entries.begin()->first.empty());
  CHECK(d0.entries.begin()->second == f);

  auto d2 = dstar(Polynomial::monomial(q, 2, mono({1, 1})), 2);
  CHECK(d2.entries.at({1, 2}) == Polynomial::constant(q, 2, 1));
  CHECK(d2.symmetric());
  CHECK(dstar(f, 3).entries.empty());
}

TEST_CASE("Taylor reconstruction over Q") {
  auto q = ScalarDomain::rational();
  auto c = Polynomial::constant(q, 2, Scalar(7, 3));
  CHECK(taylor_reconstruct(c) == c);
  auto f = poly_add(Polynomial::monomial(q, 1, mono({2})), Polynomial::constant(q, 1, 3));
  CHECK(taylor_reconstruct(f) == f);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    auto g = random_poly(rng, 2, 5);
    CHECK(taylor_reconstruct(g) == g);
  }
  CHECK_THROWS_AS(taylor_reconstruct(Polynomial::constant(ScalarDomain::prime_field(3), 1, 1)), UnsupportedDomainError);
}

TEST_CASE("monomial kernel predicate") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto k = ScalarDomain::prime_field(p);
    for (std::uint32_t i = 0; i * p <= 12; ++i) CHECK(monomial_kernel_predicate(mono({i * p, 0}), 0, k));
  }
  CHECK_FALSE(monomial_kernel_predicate(mono({1, 1, 1}), 2, ScalarDomain::prime_field(2)));

  for (std::uint32_t p : {0u, 2u, 3u}) {
    auto k = ScalarDomain::field_of_characteristic(p);
    for (std::uint32_t v = 1; v <= 2; ++v)
      for (unsigned r = 0; r <= 3; ++r)
        for (const auto& m : all_monomials(v, 7))
          CHECK(monomial_kernel_predicate(m, r, k) == derivatives_vanish(m, v, r, k));
  }
}

TEST_CASE("kernel slices") {
  auto text = [](const std::vector<Monomial>& ms, std::uint32_t v) {
    std::string s;
    for (const auto& m : ms) s += (s.empty() ? "" : " ") + monomial_to_string(m, v);
    return s;
  };
  CHECK(text(kernel_slice(PolyFragment(1, 5, 12), 1), 1) == "1 x x^5 x^6 x^10 x^11");
  CHECK(kernel_slice(PolyFragment(2, 0, 6), 2) == all_monomials(2, 2));
  CHECK(kernel_slice(PolyFragment(3, 0, 5), 2) == all_monomials(3, 2));
  CHECK(kernel_slice(PolyFragment(2, 2, 6), 3) == all_monomials(2, 6));
  CHECK(kernel_slice(PolyFragment(2, 2, 5), 3).size() == 21);
  CHECK(text(kernel_slice(PolyFragment(1, 2, 4), 0), 1) == "1 x^2 x^4");
}

TEST_CASE("polynomial structure matrices") {
  PolyFragment q(2, 0, 3), f2(2, 2, 3);
  auto sq = build_structure(q), s2 = build_structure(f2);
  const Element e1 = Element::atom(0), e2 = Element::atom(1);
  auto bag = [](std::initializer_list<Element> xs) { return Element::bag(Multiset<Element>(xs)); };
  CHECK(sq.d.entry(Element::tuple({bag({e1}), e1}), bag({e1, e1})) == 2);
  CHECK(s2.d.entry(Element::tuple({bag({e1}), e1}), bag({e1, e1})) == 0);
  CHECK(sq.m.entry(bag({e1, e2}), bag({bag({e1}), bag({e2})})) == 1);
  CHECK(sq.u.entry(bag({e1}), e1) == 1);
  CHECK(sq.eta.entry(bag({}), Element::star()) == 1);
  CHECK(sq.nabla.entry(bag({e1, e2}), Element::tuple({bag({e1}), bag({e2})})) == 1);
  for (const auto* m : {&sq.nabla, &sq.eta, &sq.u, &sq.m, &sq.d}) CHECK(m->degree_preserving());
}

TEST_CASE("dn vanishes identically past v(p-1)") {
  for (std::uint32_t p : {2u, 3u})
    for (std::uint32_t v = 1; v <= 2; ++v) {
      PolyFragment frag(v, p, 2 * p * v);
      const auto& win = frag.window(Object::bang(frag.base()));
      for (unsigned n = 0; n <= v * (p - 1) + 1; ++n) {
        bool empty = true;
        auto d = frag.dn(n, frag.base());
        for (const auto& z : win) empty = empty && d.row(z).empty();
        CHECK(empty == frag.dn_vanishes(n));
      }
    }
  CHECK_FALSE(PolyFragment(1, 0, 4).dn_vanishes(4));
}
