#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dmod/element.hpp"

namespace dmod {

// Formal object term: I, a base set X, !O, !_{<=n}O, or a tensor. Tensors are
// kept flat with I absorbed, so every object is I, a single non-tensor factor,
// or a tensor of at least two non-tensor factors.
class Object {
 public:
  enum class Kind : std::uint8_t { Unit, Base, Bang, BangLeq, Tensor };

  Object();  // I
  static Object unit() { return Object(); }
  static Object base(std::string name, std::uint32_t size);
  static Object bang(const Object& o);
  static Object bang_leq(std::uint32_t n, const Object& o);
  static Object tensor(const std::vector<Object>& factors);
  static Object tensor(const Object& a, const Object& b) { return tensor(std::vector<Object>{a, b}); }
  // o^{⊗k}
  static Object power(const Object& o, std::size_t k);

  Kind kind() const noexcept;
  const std::string& base_name() const;
  std::uint32_t base_size() const;
  std::uint32_t grade() const;  // n of !_{<=n}
  const Object& inner() const;  // O of !O, !_{<=n}O

  // Non-tensor factors (empty for I).
  std::vector<Object> factors() const;
  std::size_t arity() const;

  std::string to_string() const;

  friend bool operator==(const Object& a, const Object& b);
  friend bool operator<(const Object& a, const Object& b) { return a.key_ < b.key_; }

  const std::string& key() const noexcept { return key_; }

 private:
  struct Node;
  explicit Object(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
  std::string key_;
};

}  // namespace dmod
