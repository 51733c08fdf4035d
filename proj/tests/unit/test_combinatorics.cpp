#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dmod/multiset.hpp"
#include "dmod/partition.hpp"
#include "dmod/permutation.hpp"

using namespace dmod;

namespace {

std::vector<std::vector<std::uint64_t>> pascal(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

// B_{n+1} = Σ_k C(n,k) B_k
std::vector<std::uint64_t> bell(std::size_t n) {
  auto c = pascal(n);
  std::vector<std::uint64_t> b{1};
  for (std::size_t m = 0; m < n; ++m) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k <= m; ++k) s += c[m][k] * b[k];
    b.push_back(s);
  }
  return b;
}

std::vector<Permutation> brute_unshuffles(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 1u);
  std::vector<Permutation> out;
  do {
    std::vector<std::uint32_t> inv(n + 1);
    for (std::uint32_t i = 1; i <= n; ++i) inv[img[i - 1]] = i;
    bool ok = true;
    for (std::size_t j = 1; j < k && ok; ++j) ok = inv[j] < inv[j + 1];
    for (std::size_t j = k + 1; j < n && ok; ++j) ok = inv[j] < inv[j + 1];
    if (ok) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

SetPartition part(std::size_t n, std::vector<SetPartition::Block> blocks) { return SetPartition(n, std::move(blocks)); }

}  // namespace

TEST_CASE("multiset sum, factorial and falling factorial") {
  using M = Multiset<char>;
  Multiset<M> n;
  n.add(M{'a'});
  n.add(M{'a', 'b'});
  CHECK(msum(n) == M{'a', 'a', 'b'});
  CHECK(msum(Multiset<M>{}) == M{});
  Multiset<M> twice;
  twice.add(M{'a', 'a'}, 2);
  CHECK(msum(twice) == M{'a', 'a', 'a', 'a'});

  CHECK(mfact(M{'a', 'a', 'b'}) == 2);
  CHECK(mfact(M{}) == 1);
  CHECK(mfact(M{'a', 'a', 'a', 'b', 'b'}) == 12);

  M beta{'i', 'i', 'i', 'j', 'j'};
  CHECK(falling(beta, M{'i', 'i', 'j'}) == 12);
  CHECK(falling(beta, M{}) == 1);
  CHECK(falling(M{'i', 'i', 'i', 'i', 'i'}, M{'i', 'i', 'i', 'i', 'i'}) == 120);
  CHECK_THROWS(falling(M{'i'}, M{'i', 'i'}));
}

TEST_CASE("permutation algebra") {
  auto swap = Permutation::transposition(2, 1, 2);
  CHECK(perm_compose(swap, swap).is_identity());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::uint32_t> img{1, 2, 3, 4, 5};
    std::shuffle(img.begin(), img.end(), rng);
    Permutation s(img);
    CHECK(perm_compose(s, perm_invert(s)).is_identity());
  }

  CHECK(perm_tensor(swap, Permutation::identity(1)).images() == std::vector<std::uint32_t>{2, 1, 3});
  CHECK(perm_tensor(Permutation::identity(0), swap) == swap);
  CHECK(perm_tensor(swap, swap).images() == std::vector<std::uint32_t>{2, 1, 4, 3});

  CHECK(gamma_block(1, 2).images() == std::vector<std::uint32_t>{3, 1, 2});
  CHECK(gamma_block(0, 3).is_identity());
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t p = 0; p <= 4; ++p) CHECK(perm_compose(gamma_block(n, p), gamma_block(p, n)).is_identity());

  CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
}

TEST_CASE("gamma images follow k -> k+p on the left block") {
  // γ_{1,2}: 1 -> 3, 2 -> 1, 3 -> 2
  auto g = gamma_block(1, 2);
  CHECK(g(1) == 3);
  CHECK(g(2) == 1);
  CHECK(g(3) == 2);
}

TEST_CASE("rig N[S_n]") {
  auto id = Permutation::identity(2);
  auto swap = Permutation::transposition(2, 1, 2);
  FormalPermSum a(id);
  a.add(swap);
  auto sq = formal_product(a, a);
  CHECK(sq.multiplicity(id) == 2);
  CHECK(sq.multiplicity(swap) == 2);
  CHECK(sq.size() == 4);
  CHECK(formal_product(a, FormalPermSum::one(2)) == a);
  CHECK(formal_product(a, FormalPermSum::zero(2)) == FormalPermSum::zero(2));
}

TEST_CASE("unshuffles agree with a brute-force filter and have binomial size") {
  auto c = pascal(7);
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto u = unshuffles(n, k);
      CHECK(u.size() == c[n][k]);
      auto b = brute_unshuffles(n, k);
      std::sort(u.begin(), u.end());
      std::sort(b.begin(), b.end());
      CHECK(u == b);
    }
  CHECK(unshuffles(2, 1).size() == 2);
  CHECK(unshuffles(4, 0) == std::vector<Permutation>{Permutation::identity(4)});
}

TEST_CASE("unshuffle recursion holds in N[S_{n+1}]") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k + 1 <= n; ++k) {
      auto one = FormalPermSum::one(1);
      auto lhs = unsh(n + 1, k + 1);
      auto shift = FormalPermSum(perm_tensor(Permutation::identity(k), gamma_block(n - k, 1)));
      auto rhs = formal_add(formal_tensor(unsh(n, k + 1), one), formal_then(formal_tensor(unsh(n, k), one), shift));
      CHECK_MESSAGE(lhs == rhs, "n=" << n << " k=" << k);
    }
}

TEST_CASE("set partitions are counted by Bell numbers") {
  auto b = bell(8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(partitions(n).size() == b[n]);
  CHECK(partitions(0) == std::vector<SetPartition>{SetPartition()});
  CHECK(partitions(1) == std::vector<SetPartition>{part(1, {{1}})});
  CHECK(partitions(3).size() == 5);
  CHECK(partitions(5).size() == 52);

  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& pi : partitions(n)) {
      std::vector<std::uint32_t> seen;
      std::uint32_t last_max = 0;
      for (const auto& s : pi.blocks()) {
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(s.back() > last_max);
        last_max = s.back();
        seen.insert(seen.end(), s.begin(), s.end());
      }
      std::sort(seen.begin(), seen.end());
      std::vector<std::uint32_t> all(n);
      std::iota(all.begin(), all.end(), 1u);
      CHECK(seen == all);
    }
}

TEST_CASE("tau_pi") {
  CHECK(tau_pi(part(2, {{1}, {2}})).images() == std::vector<std::uint32_t>{1, 3, 2, 4});
  for (std::size_t n = 1; n <= 5; ++n) {
    SetPartition::Block all(n);
    std::iota(all.begin(), all.end(), 1u);
    CHECK(tau_pi(part(n, {all})).is_identity());
  }
  CHECK(tau_pi(SetPartition()).degree() == 0);

  // Output slots list each block head followed by that block's elements.
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& pi : partitions(n)) {
      auto t = tau_pi(pi);
      REQUIRE(t.degree() == pi.size() + n);
      PositionMap pm(t);
      std::vector<std::uint32_t> order;
      for (std::uint32_t j = 1; j <= t.degree(); ++j) order.push_back(pm.source(j));
      std::vector<std::uint32_t> expected;
      for (std::size_t i = 1; i <= pi.size(); ++i) {
        expected.push_back(static_cast<std::uint32_t>(i));
        for (auto x : pi.block(i)) expected.push_back(static_cast<std::uint32_t>(pi.size() + x));
      }
      CHECK(order == expected);
    }
}

TEST_CASE("rho and chi are inverse bijections") {
  CHECK(rho(SetPartition(), 1) == part(1, {{1}}));
  CHECK(rho(part(1, {{1}}), 2) == part(2, {{1, 2}}));
  CHECK(chi(part(1, {{1}})) == std::make_pair(SetPartition(), std::size_t{1}));

  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t domain = 0;
    std::set<SetPartition> image;
    for (const auto& pi : partitions(n))
      for (std::size_t i = 1; i <= pi.size() + 1; ++i) {
        ++domain;
        auto theta = rho(pi, i);
        CHECK(theta.n() == n + 1);
        CHECK(chi(theta) == std::make_pair(pi, i));
        image.insert(theta);
      }
    CHECK(domain == partitions(n + 1).size());
    CHECK(image.size() == domain);
    for (const auto& theta : partitions(n + 1)) {
      auto [pi, i] = chi(theta);
      CHECK(rho(pi, i) == theta);
    }
  }
}

TEST_CASE("block bookkeeping of rho") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& pi : partitions(n)) {
      auto t1 = rho(pi, 1);
      CHECK(t1.size() == pi.size() + 1);
      CHECK(t1.block(1).size() == 1);
      for (std::size_t r = 2; r <= t1.size(); ++r) CHECK(t1.block(r).size() == pi.block(r - 1).size());
      for (std::size_t i = 2; i <= pi.size() + 1; ++i) {
        auto t = rho(pi, i);
        CHECK(t.size() == pi.size());
        for (std::size_t r = 1; r <= t.size(); ++r)
          if (r != i - 1) CHECK(t.block(r).size() == pi.block(r).size());
        CHECK(t.block(i - 1).size() == pi.block(i - 1).size() + 1);
      }
    }
}

TEST_CASE("position maps compose like their permutations") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& s : all_permutations(n)) {
      CHECK(position_map(Permutation::identity(n), n).permutation().is_identity());
      for (const auto& t : all_permutations(n))
        CHECK(position_then(position_map(s, n), position_map(t, n)) == position_map(perm_compose(s, t), n));
    }
}
