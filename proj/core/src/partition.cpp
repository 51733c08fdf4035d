#include "dmod/partition.hpp"

#include <algorithm>
#include <sstream>

namespace dmod {

namespace {

void canonicalize(std::vector<SetPartition::Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const SetPartition::Block& a, const SetPartition::Block& b) { return a.back() < b.back(); });
}

}  // namespace

SetPartition::SetPartition(std::size_t n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n + 1, false);
  std::size_t total = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition: empty block");
    for (auto x : b) {
      if (x < 1 || x > n || seen[x]) throw DomainError("partition: blocks are not a partition of {1..n}");
      seen[x] = true;
      ++total;
    }
  }
  if (total != n) throw DomainError("partition: blocks do not cover {1..n}");
  canonicalize(blocks_);
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    os << (i ? "," : "") << '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) os << (j ? "," : "") << blocks_[i][j];
    os << '}';
  }
  os << '}';
  return os.str();
}

std::vector<SetPartition> partitions(std::size_t n) {
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // a[k] is the block index of element k+1; a[0] = 0 and a[k] <= 1 + max(a[0..k-1]).
  std::vector<std::uint32_t> a(n, 0), mx(n, 0);
  while (true) {
    std::uint32_t nb = mx[n - 1] + 1;
    std::vector<SetPartition::Block> blocks(nb);
    for (std::size_t k = 0; k < n; ++k) blocks[a[k]].push_back(static_cast<std::uint32_t>(k + 1));
    out.emplace_back(n, std::move(blocks));
    std::size_t k = n - 1;
    while (k > 0 && a[k] == mx[k - 1] + 1) --k;
    if (k == 0) break;
    ++a[k];
    mx[k] = std::max(mx[k - 1], a[k]);
    for (std::size_t j = k + 1; j < n; ++j) {
      a[j] = 0;
      mx[j] = mx[k];
    }
  }
  return out;
}

Permutation tau_pi(const SetPartition& pi) {
  const std::size_t h = pi.size();
  std::vector<std::uint32_t> im(h + pi.n());
  std::uint32_t offset = 0;  // Σ_{j<i} (1 + |s_j|)
  for (std::size_t i = 1; i <= h; ++i) {
    const auto& s = pi.block(i);
    im[i - 1] = offset + 1;
    for (std::size_t j = 1; j <= s.size(); ++j) im[h + s[j - 1] - 1] = offset + 1 + static_cast<std::uint32_t>(j);
    offset += 1 + static_cast<std::uint32_t>(s.size());
  }
  return Permutation(std::move(im));
}

SetPartition rho(const SetPartition& pi, std::size_t i) {
  if (i < 1 || i > pi.size() + 1) throw DomainError("rho: index out of range");
  std::vector<SetPartition::Block> blocks;
  for (const auto& s : pi.blocks()) {
    SetPartition::Block b;
    for (auto x : s) b.push_back(x + 1);
    blocks.push_back(std::move(b));
  }
  if (i == 1) {
    blocks.push_back({1});
  } else {
    blocks[i - 2].insert(blocks[i - 2].begin(), 1);
  }
  return SetPartition(pi.n() + 1, std::move(blocks));
}

std::pair<SetPartition, std::size_t> chi(const SetPartition& theta) {
  if (theta.n() == 0) throw DomainError("chi: requires a partition of {1..n+1}");
  std::size_t j = 0;
  for (std::size_t r = 1; r <= theta.size(); ++r)
    if (theta.block(r).front() == 1) j = r;
  std::vector<SetPartition::Block> blocks;
  std::size_t i = 1;
  for (std::size_t r = 1; r <= theta.size(); ++r) {
    SetPartition::Block b;
    for (auto x : theta.block(r))
      if (x != 1) b.push_back(x - 1);
    if (r == j) {
      if (b.empty()) continue;
      i = j + 1;
    }
    blocks.push_back(std::move(b));
  }
  return {SetPartition(theta.n() - 1, std::move(blocks)), i};
}

}  // namespace dmod
