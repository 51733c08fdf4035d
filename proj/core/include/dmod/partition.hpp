#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dmod/permutation.hpp"

namespace dmod {

// Partition of {1..n}; every block is sorted ascending and blocks are sorted
// by their maximum.
class SetPartition {
 public:
  using Block = std::vector<std::uint32_t>;

  SetPartition() = default;  // the empty partition of {1..0}
  SetPartition(std::size_t n, std::vector<Block> blocks);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return blocks_.size(); }  // |π|
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i - 1); }  // s_i, 1-based

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

// 𝓗(n) in a deterministic order (restricted growth strings).
std::vector<SetPartition> partitions(std::size_t n);

// τ_π ∈ S_{|π|+n}.
Permutation tau_pi(const SetPartition& pi);

// ρ(π,i) for 1 <= i <= |π|+1, a partition of {1..n+1}.
SetPartition rho(const SetPartition& pi, std::size_t i);
// χ = ρ^{-1}.
std::pair<SetPartition, std::size_t> chi(const SetPartition& theta);

}  // namespace dmod
