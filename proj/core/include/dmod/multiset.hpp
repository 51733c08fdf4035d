#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dmod/errors.hpp"

namespace dmod {

// Finitely supported map label -> positive count, stored as a sorted vector of
// (label, count) pairs with no zero counts.
template <class L>
class Multiset {
 public:
  using label_type = L;
  using entry_type = std::pair<L, std::uint32_t>;

  Multiset() = default;

  Multiset(std::initializer_list<L> items) {
    for (const L& x : items) add(x);
  }

  static Multiset from_items(std::span<const L> items) {
    Multiset m;
    for (const L& x : items) m.add(x);
    return m;
  }

  static Multiset from_counts(std::vector<entry_type> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const entry_type& a, const entry_type& b) { return a.first < b.first; });
    Multiset m;
    for (auto& [x, c] : entries) m.add(x, c);
    return m;
  }

  std::uint32_t count(const L& x) const {
    auto it = find(x);
    return it != entries_.end() && it->first == x ? it->second : 0;
  }

  // |M|
  std::uint64_t size() const noexcept { return size_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<entry_type>& entries() const noexcept { return entries_; }

  // Elements listed with repetition, in label order.
  std::vector<L> items() const {
    std::vector<L> out;
    out.reserve(size_);
    for (const auto& [x, c] : entries_) out.insert(out.end(), c, x);
    return out;
  }

  void add(const L& x, std::uint32_t c = 1) {
    if (c == 0) return;
    auto it = find(x);
    if (it != entries_.end() && it->first == x) {
      it->second += c;
    } else {
      entries_.insert(it, entry_type{x, c});
    }
    size_ += c;
  }

  // Removes c copies of x; requires count(x) >= c.
  void remove(const L& x, std::uint32_t c = 1) {
    if (c == 0) return;
    auto it = find(x);
    if (it == entries_.end() || !(it->first == x) || it->second < c)
      throw DomainError("multiset: removing more copies than present");
    it->second -= c;
    if (it->second == 0) entries_.erase(it);
    size_ -= c;
  }

  friend Multiset operator+(const Multiset& a, const Multiset& b) {
    Multiset out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
        out.entries_.push_back(*i++);
      } else if (i == a.entries_.end() || j->first < i->first) {
        out.entries_.push_back(*j++);
      } else {
        out.entries_.push_back({i->first, i->second + j->second});
        ++i;
        ++j;
      }
    }
    out.size_ = a.size_ + b.size_;
    return out;
  }

  // β - α, requires α <= β.
  friend Multiset operator-(const Multiset& b, const Multiset& a) {
    Multiset out = b;
    for (const auto& [x, c] : a.entries_) out.remove(x, c);
    return out;
  }

  // Pointwise order α <= β.
  bool leq(const Multiset& other) const {
    for (const auto& [x, c] : entries_)
      if (other.count(x) < c) return false;
    return true;
  }

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

  // Total order: lexicographic on the sorted entry list.
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    auto n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a.entries_[k];
      const auto& y = b.entries_[k];
      if (x.first < y.first) return std::strong_ordering::less;
      if (y.first < x.first) return std::strong_ordering::greater;
      if (x.second != y.second) return x.second <=> y.second;
    }
    return a.entries_.size() <=> b.entries_.size();
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [x, c] : entries_) {
      h ^= std::hash<L>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  typename std::vector<entry_type>::iterator find(const L& x) {
    return std::lower_bound(entries_.begin(), entries_.end(), x,
                            [](const entry_type& e, const L& v) { return e.first < v; });
  }
  typename std::vector<entry_type>::const_iterator find(const L& x) const {
    return std::lower_bound(entries_.begin(), entries_.end(), x,
                            [](const entry_type& e, const L& v) { return e.first < v; });
  }

  std::vector<entry_type> entries_;
  std::uint64_t size_ = 0;
};

// ΣN
template <class L>
Multiset<L> msum(const Multiset<Multiset<L>>& n) {
  Multiset<L> out;
  for (const auto& [m, k] : n.entries())
    for (const auto& [x, c] : m.entries()) out.add(x, c * k);
  return out;
}

// α! = Π α(i)!
template <class L>
mpz_class mfact(const Multiset<L>& alpha) {
  mpz_class out = 1;
  for (const auto& [x, c] : alpha.entries()) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), c);
    out *= f;
  }
  return out;
}

// β^{α̲} = Π β(i)(β(i)-1)...(β(i)-α(i)+1), requires α <= β.
template <class L>
mpz_class falling(const Multiset<L>& beta, const Multiset<L>& alpha) {
  if (!alpha.leq(beta)) throw DomainError("falling: requires alpha <= beta");
  mpz_class out = 1;
  for (const auto& [x, a] : alpha.entries()) {
    std::uint32_t b = beta.count(x);
    for (std::uint32_t k = 0; k < a; ++k) out *= (b - k);
  }
  return out;
}

}  // namespace dmod

template <class L>
struct std::hash<dmod::Multiset<L>> {
  std::size_t operator()(const dmod::Multiset<L>& m) const { return m.hash(); }
};
