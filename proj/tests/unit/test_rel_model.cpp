#include <doctest.h>

#include <functional>
#include <random>

#include "dmod/rel_model.hpp"

using namespace dmod;

namespace {

Element bag(std::initializer_list<Element> items) { return Element::bag(Multiset<Element>(items)); }
const Element a = Element::atom(0);
const Element b = Element::atom(1);

// Bags over `items` with Σ count·max(1, weight) <= budget, by direct count
// enumeration.
std::size_t count_bags(const std::vector<std::uint64_t>& costs, std::size_t i, std::uint64_t budget) {
  if (i == costs.size()) return 1;
  std::size_t total = 0;
  const std::uint64_t c = std::max<std::uint64_t>(1, costs[i]);
  for (std::uint64_t used = 0; used <= budget; used += c) total += count_bags(costs, i + 1, budget - used);
  return total;
}

GradedMatrix random_relation(const OrderedBasis& dom, const OrderedBasis& cod, std::mt19937_64& rng) {
  GradedMatrix m(dom, cod, ScalarDomain::boolean());
  for (std::size_t r = 0; r < cod.size(); ++r)
    for (std::size_t c = 0; c < dom.size(); ++c) m.set(r, c, Scalar(static_cast<int>(rng() % 2)));
  return m;
}

}  // namespace

TEST_CASE("rel windows") {
  RelFragment two(2, 3);
  CHECK(enumerate_basis(two, two.base(), 3).elements() == std::vector<Element>{a, b});
  RelFragment one(1, 2);
  CHECK(enumerate_basis(one, Object::bang(one.base()), 2).elements() ==
        std::vector<Element>{bag({}), bag({a}), bag({a, a})});

  for (unsigned D = 0; D <= 5; ++D) {
    auto inner = enumerate_basis(one, Object::bang(one.base()), D);
    std::vector<std::uint64_t> costs;
    for (const auto& e : inner) costs.push_back(e.weight());
    CHECK(enumerate_basis(one, Object::bang(Object::bang(one.base())), D).size() == count_bags(costs, 0, D));
  }
  for (const auto& e : enumerate_basis(two, Object::bang(Object::bang(two.base())), 3)) CHECK(e.weight() <= 3);
}

TEST_CASE("rel structure relations") {
  RelFragment frag(2, 3);
  auto s = build_structure(frag);
  for (const auto* m : {&s.m, &s.u, &s.delta, &s.eps, &s.d}) {
    CHECK(m->scalars().is_boolean());
    CHECK(m->degree_preserving());
  }
  // u = {([x], x)}
  for (std::size_t r = 0; r < s.u.rows(); ++r)
    for (std::size_t c = 0; c < s.u.cols(); ++c) {
      bool expected = s.u.domain()[c] == bag({s.u.codomain()[r]});
      CHECK((s.u.at(r, c) != 0) == expected);
    }
  // ε = {([], *)}
  for (std::size_t c = 0; c < s.eps.cols(); ++c) CHECK((s.eps.at(0, c) != 0) == (s.eps.domain()[c] == bag({})));
  // Δ at [a,b]: the four splittings
  std::size_t hits = 0;
  auto col = *s.delta.domain().index_of(bag({a, b}));
  for (std::size_t r = 0; r < s.delta.rows(); ++r) hits += s.delta.at(r, col) != 0;
  CHECK(hits == 4);
  for (const auto& [n, p] : std::vector<std::pair<Element, Element>>{
           {bag({}), bag({a, b})}, {bag({a}), bag({b})}, {bag({b}), bag({a})}, {bag({a, b}), bag({})}})
    CHECK(s.delta.entry(Element::tuple({n, p}), bag({a, b})) == 1);
  // ∂ adds one element
  CHECK(s.d.entry(bag({a, a, b}), Element::tuple({bag({a, b}), a})) == 1);
  CHECK(s.d.entry(bag({a, a, b}), Element::tuple({bag({a, a}), a})) == 0);
  // m sends N to ΣN
  CHECK(s.m.entry(Element::bag(Multiset<Element>{bag({a}), bag({a, b})}), bag({a, a, b})) == 1);
}

TEST_CASE("multiset functor") {
  RelFragment frag(2, 3);
  auto X = enumerate_basis(frag, frag.base(), 3);
  auto bool_ = ScalarDomain::boolean();
  CHECK(multiset_functor(mat_identity(X, bool_), 3) == mat_identity(OrderedBasis(bags_up_to(X.elements(), 3)), bool_));

  auto empty = multiset_functor(mat_zero(X, X, bool_), 3);
  for (std::size_t r = 0; r < empty.rows(); ++r)
    for (std::size_t c = 0; c < empty.cols(); ++c)
      CHECK((empty.at(r, c) != 0) == (empty.codomain()[r] == bag({}) && empty.domain()[c] == bag({})));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    auto r = random_relation(X, X, rng), s = random_relation(X, X, rng);
    CHECK(multiset_functor(mat_compose(r, s), 3) == mat_compose(multiset_functor(r, 3), multiset_functor(s, 3)));
  }

  // The lazy functor used by the engine is the same relation.
  for (const auto& f : frag.sample_maps(16, 1)) {
    GradedMatrix dense = materialize(f, X, X);
    auto lazy = materialize(frag.bang(f), OrderedBasis(frag.window(Object::bang(frag.base()))),
                            OrderedBasis(frag.window(Object::bang(frag.base()))));
    CHECK(lazy == multiset_functor(dense, 3));
  }
}

TEST_CASE("relation direction") {
  RelFragment frag(2, 2);
  auto r = relation(frag, {{0, 1}});  // a ~> b
  CHECK(r.entry(b, a) == 1);
  CHECK(r.entry(a, b) == 0);
  CHECK(frag.sample_maps(3, 1).size() == 16);
}

TEST_CASE("iterated derivative") {
  RelFragment frag(2, 4);
  auto win = OrderedBasis(frag.window(Object::bang(frag.base())));
  CHECK(dn(frag, 0) == mat_identity(win, ScalarDomain::boolean()));
  const Object& A = frag.base();
  for (unsigned k = 0; k <= 3; ++k)
    for (unsigned l = 0; k + l <= 3; ++l) {
      auto lhs = frag.dn_inductive(k + l, A);
      auto rhs = (frag.dn_inductive(k, A) * identity(Object::power(A, l), frag.scalars())) >> frag.dn_inductive(l, A);
      CHECK_FALSE(compare_rows(lhs, rhs, frag.window(Object::bang(A))));
    }
  // im ∂^n = {M : |M| >= n}
  for (unsigned n = 0; n <= 4; ++n) {
    auto m = dn(frag, n);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      bool hit = false;
      for (std::size_t c = 0; c < m.cols(); ++c) hit = hit || m.at(r, c) != 0;
      CHECK(hit == (m.codomain()[r].bag_value().size() >= n));
    }
  }
}

TEST_CASE("extraction in Rel") {
  RelFragment frag(2, 3);
  auto e0 = extract(frag, 0);
  CHECK(e0.kept.elements() == std::vector<Element>{bag({})});
  REQUIRE(e0.eps_le);
  CHECK(e0.eps_le->entry(Element::star(), bag({})) == 1);

  for (unsigned n = 0; n <= 2; ++n) {
    auto ex = extract(frag, n);
    for (const auto& M : ex.kept) CHECK(M.bag_value().size() <= n);
    for (const auto& M : frag.window(Object::bang(frag.base())))
      CHECK(ex.kept.contains(M) == (M.bag_value().size() <= n));
    // s_n = {(M, M) | |M| <= n}
    for (std::size_t r = 0; r < ex.s.rows(); ++r)
      for (std::size_t c = 0; c < ex.s.cols(); ++c)
        CHECK((ex.s.at(r, c) != 0) == (ex.s.codomain()[r] == ex.s.domain()[c]));
  }
  auto e1 = extract(frag, 1);
  REQUIRE(e1.u_le);
  CHECK(e1.u_le->entry(a, bag({a})) == 1);

  for (unsigned n = 0; n <= 3; ++n) {
    CHECK(t_matrix(frag, n, n) == mat_identity(OrderedBasis(frag.kept(n, frag.base())), frag.scalars()));
    for (unsigned p = 0; p <= n; ++p)
      for (unsigned q = 0; q <= p; ++q)
        CHECK(mat_compose(t_matrix(frag, n, p), t_matrix(frag, p, q)) == t_matrix(frag, n, q));
  }
}

TEST_CASE("mutations") {
  RelFragment clean(2, 3);
  auto muts = sample_mutations(clean, 20, 7);
  CHECK(muts.size() == 20);
  for (const auto& mu : muts) {
    CHECK(mu.cod.degree() == mu.dom.degree());
    RelFragment bad(2, 3, {mu});
    Morphism f = mu.map == "m" ? bad.m(bad.base()) : mu.map == "delta" ? bad.delta(bad.base()) : bad.d(bad.base());
    Morphism g = mu.map == "m" ? clean.m(clean.base()) : mu.map == "delta" ? clean.delta(clean.base()) : clean.d(clean.base());
    CHECK(f.entry(mu.cod, mu.dom) != g.entry(mu.cod, mu.dom));
  }
  CHECK(sample_mutations(clean, 20, 7).front().cod == muts.front().cod);
}
