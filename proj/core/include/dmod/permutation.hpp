#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dmod/errors.hpp"

namespace dmod {

// σ ∈ S_n, stored 1-based: images()[k-1] = σ(k).
class Permutation {
 public:
  Permutation() = default;  // the unique element of S_0
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  // (i,j) ∈ S_n
  static Permutation transposition(std::size_t n, std::uint32_t i, std::uint32_t j);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t k) const { return images_.at(k - 1); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

// Diagrammatic order: (σ;τ)(k) = τ(σ(k)).
Permutation perm_compose(const Permutation& sigma, const Permutation& tau);
Permutation perm_invert(const Permutation& sigma);
// Block-diagonal σ⊗τ ∈ S_{n+p}.
Permutation perm_tensor(const Permutation& sigma, const Permutation& tau);
// γ_{n,p}: k -> k+p for k <= n, k -> k-n otherwise.
Permutation gamma_block(std::size_t n, std::size_t p);

// All of S_n in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(std::size_t n);

// Element of the rig ℕ[S_n]: a formal sum with multiplicities.
class FormalPermSum {
 public:
  explicit FormalPermSum(std::size_t degree) : degree_(degree) {}
  explicit FormalPermSum(const Permutation& sigma, std::uint64_t mult = 1);

  static FormalPermSum zero(std::size_t n) { return FormalPermSum(n); }
  static FormalPermSum one(std::size_t n) { return FormalPermSum(Permutation::identity(n)); }

  std::size_t degree() const noexcept { return degree_; }
  const std::map<Permutation, std::uint64_t>& terms() const noexcept { return terms_; }
  std::uint64_t multiplicity(const Permutation& sigma) const;
  // Total number of terms counted with multiplicity.
  std::uint64_t size() const;

  void add(const Permutation& sigma, std::uint64_t mult = 1);

  friend bool operator==(const FormalPermSum&, const FormalPermSum&) = default;

 private:
  std::size_t degree_;
  std::map<Permutation, std::uint64_t> terms_;
};

FormalPermSum formal_add(const FormalPermSum& a, const FormalPermSum& b);
// The rig product (Σσ_i)(Στ_j) = Σ σ_i∘τ_j with (σ∘τ)(k) = σ(τ(k)).
FormalPermSum formal_product(const FormalPermSum& a, const FormalPermSum& b);
// Diagrammatic composite a;b of morphisms of S_+ (equal to formal_product(b, a)).
FormalPermSum formal_then(const FormalPermSum& a, const FormalPermSum& b);
FormalPermSum formal_tensor(const FormalPermSum& a, const FormalPermSum& b);

// Unsh(n,k): σ ∈ S_n with σ^{-1} increasing on {1..k} and on {k+1..n}.
std::vector<Permutation> unshuffles(std::size_t n, std::size_t k);
// unsh(n,k) as an element of ℕ[S_n].
FormalPermSum unsh(std::size_t n, std::size_t k);

// Index-level σ̄: input slot k is sent to output slot σ(k); output slot j
// reads input slot σ^{-1}(j).
class PositionMap {
 public:
  PositionMap() = default;
  explicit PositionMap(Permutation sigma);

  std::size_t arity() const noexcept { return sigma_.degree(); }
  std::uint32_t target(std::uint32_t input_slot) const { return sigma_(input_slot); }
  std::uint32_t source(std::uint32_t output_slot) const { return inverse_(output_slot); }
  const Permutation& permutation() const noexcept { return sigma_; }

  template <class T>
  std::vector<T> apply(const std::vector<T>& slots) const {
    if (slots.size() != arity()) throw DomainError("position map: arity mismatch");
    std::vector<T> out;
    out.reserve(slots.size());
    for (std::uint32_t j = 1; j <= arity(); ++j) out.push_back(slots[source(j) - 1]);
    return out;
  }

  friend bool operator==(const PositionMap& a, const PositionMap& b) { return a.sigma_ == b.sigma_; }

 private:
  Permutation sigma_;
  Permutation inverse_;
};

PositionMap position_map(const Permutation& sigma, std::size_t n);
// Apply a, then b.
PositionMap position_then(const PositionMap& a, const PositionMap& b);
PositionMap position_tensor(const PositionMap& a, const PositionMap& b);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace dmod
