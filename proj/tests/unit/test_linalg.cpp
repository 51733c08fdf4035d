#include <doctest.h>

#include <random>

#include "dmod/errors.hpp"
#include "dmod/matrix.hpp"
#include "dmod/morphism.hpp"
#include "dmod/poly_model.hpp"
#include "dmod/rel_model.hpp"

using namespace dmod;

namespace {

OrderedBasis atoms(std::uint32_t n, std::uint32_t offset = 0) {
  std::vector<Element> v;
  for (std::uint32_t i = 0; i < n; ++i) v.push_back(Element::atom(offset + i));
  return OrderedBasis(std::move(v));
}

GradedMatrix random_matrix(const OrderedBasis& dom, const OrderedBasis& cod, const ScalarDomain& k, std::mt19937_64& rng,
                           int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  GradedMatrix m(dom, cod, k);
  for (std::size_t r = 0; r < cod.size(); ++r)
    for (std::size_t c = 0; c < dom.size(); ++c) m.set(r, c, Scalar(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("scalar domains") {
  auto b = ScalarDomain::boolean();
  CHECK(b.add(1, 1) == 1);
  CHECK(b.mul(1, 0) == 0);
  auto f5 = ScalarDomain::prime_field(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.mul(f5.inv(3), 3) == 1);
  CHECK(f5.neg(1) == 4);
  CHECK(f5.normalize(Scalar(-1)) == 4);
  auto q = ScalarDomain::rational();
  CHECK(q.inv(Scalar(2, 3)) == Scalar(3, 2));
  CHECK_THROWS_AS(ScalarDomain::prime_field(4), DomainError);
  CHECK_THROWS(f5.inv(0));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("matrix category laws") {
  std::mt19937_64 rng(11);
  auto q = ScalarDomain::rational();
  auto A = atoms(2), B = atoms(3, 10), C = atoms(2, 20), D = atoms(3, 30);
  auto f = random_matrix(A, B, q, rng), g = random_matrix(B, C, q, rng), h = random_matrix(C, D, q, rng);
  CHECK(mat_compose(f, mat_identity(B, q)) == f);
  CHECK(mat_compose(mat_identity(A, q), f) == f);
  CHECK(mat_compose(mat_compose(f, g), h) == mat_compose(f, mat_compose(g, h)));
  CHECK(mat_add(f, mat_zero(A, B, q)) == f);

  auto f5 = ScalarDomain::prime_field(5);
  auto f1 = random_matrix(A, B, f5, rng), f2 = random_matrix(A, B, f5, rng), g5 = random_matrix(B, C, f5, rng);
  CHECK(mat_compose(mat_add(f1, f2), g5) == mat_add(mat_compose(f1, g5), mat_compose(f2, g5)));

  auto I = OrderedBasis::unit();
  CHECK(mat_kron(f, mat_identity(I, q)).rows() == f.rows());
  CHECK(mat_kron(f, mat_identity(I, q)).is_zero() == f.is_zero());
  auto g2 = random_matrix(C, D, q, rng), h2 = random_matrix(D, A, q, rng);
  auto f3 = random_matrix(A, B, q, rng), k3 = random_matrix(B, C, q, rng);
  CHECK(mat_compose(mat_kron(f3, g2), mat_kron(k3, h2)) == mat_kron(mat_compose(f3, k3), mat_compose(g2, h2)));
  CHECK(mat_kron(mat_zero(A, B, q), f).is_zero());
}

TEST_CASE("composition is diagrammatic") {
  auto q = ScalarDomain::rational();
  auto A = atoms(1), B = atoms(1, 1), C = atoms(1, 2);
  GradedMatrix f(A, B, q), g(B, C, q);
  f.set(0, 0, 2);
  g.set(0, 0, 3);
  CHECK(mat_compose(f, g).at(0, 0) == 6);
  CHECK(mat_compose(f, g).domain() == A);
  CHECK(mat_compose(f, g).codomain() == C);
  CHECK_THROWS_AS(mat_compose(g, f), DomainError);
}

TEST_CASE("permutation matrices") {
  auto q = ScalarDomain::rational();
  std::vector<OrderedBasis> two{atoms(2), atoms(3, 10)};
  auto id = perm_matrix(PositionMap(Permutation::identity(2)), two, q);
  CHECK(id == mat_identity(tensor_basis(two[0], two[1]), q));

  auto swap = PositionMap(Permutation::transposition(2, 1, 2));
  auto there = perm_matrix(swap, two, q);
  auto back = perm_matrix(swap, swap.apply(two), q);
  CHECK(mat_compose(there, back) == mat_identity(tensor_basis(two[0], two[1]), q));

  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<OrderedBasis> f;
    for (std::uint32_t i = 0; i < n; ++i) f.push_back(atoms(i + 1, 10 * i));
    for (const auto& s : all_permutations(n))
      for (const auto& t : all_permutations(n)) {
        PositionMap ps(s), pt(t);
        auto lhs = mat_compose(perm_matrix(ps, f, q), perm_matrix(pt, ps.apply(f), q));
        CHECK(lhs == perm_matrix(PositionMap(perm_compose(s, t)), f, q));
      }
  }
}

TEST_CASE("kernel basis") {
  auto q = ScalarDomain::rational();
  GradedMatrix ones(atoms(2), atoms(1, 5), q);
  ones.set(0, 0, 1);
  ones.set(0, 1, 1);
  auto k = kernel_basis(ones);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Scalar>{Scalar(-1), Scalar(1)});
  CHECK(kernel_basis(mat_identity(atoms(3), q)).empty());
  CHECK(rank(ones) == 1);
  CHECK_THROWS_AS(kernel_basis(GradedMatrix(atoms(1), atoms(1), ScalarDomain::boolean())), UnsupportedDomainError);

  // d/dx on monomials of degree <= 4 over F_2
  auto f2 = ScalarDomain::prime_field(2);
  std::vector<Element> dom, cod;
  for (std::uint32_t e = 0; e <= 4; ++e) dom.push_back(monomial_label(Monomial::from_counts(e ? std::vector<Monomial::entry_type>{{1, e}} : std::vector<Monomial::entry_type>{})));
  cod.assign(dom.begin(), dom.begin() + 4);
  GradedMatrix ddx{OrderedBasis(dom), OrderedBasis(cod), f2};
  for (std::uint32_t e = 1; e <= 4; ++e) ddx.set(e - 1, e, Scalar(e));
  std::vector<std::uint32_t> kept;
  for (const auto& v : kernel_basis(ddx)) {
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!ScalarDomain::is_zero(v[i])) ++nz, at = i;
    CHECK(nz == 1);
    kept.push_back(static_cast<std::uint32_t>(at));
  }
  CHECK(kept == std::vector<std::uint32_t>{0, 2, 4});
}

TEST_CASE("Boolean cokernel") {
  auto b = ScalarDomain::boolean();
  auto zero = bool_cokernel(mat_zero(atoms(2), atoms(3, 5), b));
  CHECK(zero.selector == mat_identity(atoms(3, 5), b));
  GradedMatrix total(atoms(1), atoms(2, 5), b);
  total.set(0, 0, 1);
  total.set(1, 0, 1);
  auto none = bool_cokernel(total);
  CHECK(none.kept.size() == 0);
  CHECK(none.selector.rows() == 0);

  RelFragment frag(1, 2);
  auto ck = bool_cokernel(dn(frag, 1));
  CHECK(ck.kept.elements() == std::vector<Element>{Element::bag(Multiset<Element>{})});
}

TEST_CASE("factor_through") {
  std::mt19937_64 rng(5);
  auto q = ScalarDomain::rational();
  auto A = atoms(3), B = atoms(2, 10);
  auto f = random_matrix(A, B, q, rng);
  CHECK(factor_through(mat_identity(A, q), f) == f);

  // s: A -> S projects away the kernel of [1 1 0]; f = s;g for a known g.
  auto S = atoms(2, 20);
  GradedMatrix s(A, S, q);
  s.set(0, 0, 1);
  s.set(0, 1, 1);
  s.set(1, 2, 1);
  auto g = random_matrix(S, B, q, rng);
  CHECK(factor_through(s, mat_compose(s, g)) == g);
  GradedMatrix bad(A, B, q);
  bad.set(0, 0, 1);
  CHECK_THROWS_AS(factor_through(s, bad), FactorizationError);

  // Boolean: ε restricted along s_0.
  RelFragment frag(2, 3);
  auto ex = extract(frag, 0);
  REQUIRE(ex.eps_le);
  CHECK(ex.eps_le->rows() == 1);
  CHECK(ex.eps_le->cols() == 1);
  CHECK(ex.eps_le->entry(Element::star(), Element::bag(Multiset<Element>{})) == 1);
}

TEST_CASE("lazy morphisms agree with dense matrices") {
  std::mt19937_64 rng(9);
  auto q = ScalarDomain::rational();
  auto A = atoms(2), B = atoms(3, 10), C = atoms(2, 20);
  auto fm = random_matrix(A, B, q, rng), gm = random_matrix(B, C, q, rng);
  auto lift = [&](const GradedMatrix& m, const std::string& dom, const std::string& cod) {
    return Morphism("m", Object::base(dom, static_cast<std::uint32_t>(m.cols())),
                    Object::base(cod, static_cast<std::uint32_t>(m.rows())), q, [m](const Element& z) {
                      Row r;
                      auto i = *m.codomain().index_of(z);
                      for (std::size_t c = 0; c < m.cols(); ++c)
                        if (!ScalarDomain::is_zero(m.at(i, c))) r.emplace_back(m.domain()[c], m.at(i, c));
                      return r;
                    });
  };
  auto f = lift(fm, "A", "B"), g = lift(gm, "B", "C");
  auto dense = mat_compose(fm, gm);
  auto lazy = materialize(f >> g, C, A);
  CHECK(lazy == dense);
  CHECK(materialize(f + f, B, A) == mat_add(fm, fm));
}
