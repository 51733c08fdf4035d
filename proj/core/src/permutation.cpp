#include "dmod/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dmod {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) throw DomainError("permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1u);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, std::uint32_t i, std::uint32_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw DomainError("transposition: index out of range");
  auto im = identity(n).images_;
  std::swap(im[i - 1], im[j - 1]);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < images_.size(); ++k) os << (k ? "," : "") << images_[k];
  os << ']';
  return os.str();
}

Permutation perm_compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw DomainError("perm_compose: degree mismatch");
  std::vector<std::uint32_t> im(sigma.degree());
  for (std::uint32_t k = 1; k <= sigma.degree(); ++k) im[k - 1] = tau(sigma(k));
  return Permutation(std::move(im));
}

Permutation perm_invert(const Permutation& sigma) {
  std::vector<std::uint32_t> im(sigma.degree());
  for (std::uint32_t k = 1; k <= sigma.degree(); ++k) im[sigma(k) - 1] = k;
  return Permutation(std::move(im));
}

Permutation perm_tensor(const Permutation& sigma, const Permutation& tau) {
  auto n = static_cast<std::uint32_t>(sigma.degree());
  std::vector<std::uint32_t> im = sigma.images();
  for (auto v : tau.images()) im.push_back(v + n);
  return Permutation(std::move(im));
}

Permutation gamma_block(std::size_t n, std::size_t p) {
  std::vector<std::uint32_t> im(n + p);
  for (std::size_t k = 1; k <= n + p; ++k)
    im[k - 1] = static_cast<std::uint32_t>(k <= n ? k + p : k - n);
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto im = Permutation::identity(n).images();
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

FormalPermSum::FormalPermSum(const Permutation& sigma, std::uint64_t mult) : degree_(sigma.degree()) {
  add(sigma, mult);
}

std::uint64_t FormalPermSum::multiplicity(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t FormalPermSum::size() const {
  std::uint64_t s = 0;
  for (const auto& [p, m] : terms_) s += m;
  return s;
}

void FormalPermSum::add(const Permutation& sigma, std::uint64_t mult) {
  if (sigma.degree() != degree_) throw DomainError("formal sum: degree mismatch");
  if (mult != 0) terms_[sigma] += mult;
}

FormalPermSum formal_add(const FormalPermSum& a, const FormalPermSum& b) {
  if (a.degree() != b.degree()) throw DomainError("formal_add: degree mismatch");
  FormalPermSum out = a;
  for (const auto& [p, m] : b.terms()) out.add(p, m);
  return out;
}

FormalPermSum formal_product(const FormalPermSum& a, const FormalPermSum& b) {
  if (a.degree() != b.degree()) throw DomainError("formal_product: degree mismatch");
  FormalPermSum out(a.degree());
  for (const auto& [s, ms] : a.terms())
    for (const auto& [t, mt] : b.terms()) out.add(perm_compose(t, s), ms * mt);
  return out;
}

FormalPermSum formal_then(const FormalPermSum& a, const FormalPermSum& b) { return formal_product(b, a); }

FormalPermSum formal_tensor(const FormalPermSum& a, const FormalPermSum& b) {
  FormalPermSum out(a.degree() + b.degree());
  for (const auto& [s, ms] : a.terms())
    for (const auto& [t, mt] : b.terms()) out.add(perm_tensor(s, t), ms * mt);
  return out;
}

std::vector<Permutation> unshuffles(std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("unshuffles: k > n");
  // σ^{-1} lists, in increasing order, which input slots feed outputs 1..k and
  // k+1..n; choosing the k-subset S = σ^{-1}({1..k}) determines σ.
  std::vector<Permutation> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::uint32_t> inv;
    inv.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) inv.push_back(static_cast<std::uint32_t>(i + 1));
    for (std::size_t i = 0; i < n; ++i)
      if (!pick[i]) inv.push_back(static_cast<std::uint32_t>(i + 1));
    out.push_back(perm_invert(Permutation(std::move(inv))));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

FormalPermSum unsh(std::size_t n, std::size_t k) {
  FormalPermSum out(n);
  for (const auto& s : unshuffles(n, k)) out.add(s);
  return out;
}

PositionMap::PositionMap(Permutation sigma) : sigma_(std::move(sigma)), inverse_(perm_invert(sigma_)) {}

PositionMap position_map(const Permutation& sigma, std::size_t n) {
  if (sigma.degree() != n) throw DomainError("position_map: degree mismatch");
  return PositionMap(sigma);
}

PositionMap position_then(const PositionMap& a, const PositionMap& b) {
  return PositionMap(perm_compose(a.permutation(), b.permutation()));
}

PositionMap position_tensor(const PositionMap& a, const PositionMap& b) {
  return PositionMap(perm_tensor(a.permutation(), b.permutation()));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace dmod
