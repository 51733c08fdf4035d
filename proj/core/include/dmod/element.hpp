#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dmod/multiset.hpp"

namespace dmod {

// Basis label of any object of the fragments: the point * of I, an atom of a
// base set, a multiset of labels, or a tuple (an element of a tensor of two
// or more factors). Immutable and cheap to copy.
class Element {
 public:
  enum class Kind : std::uint8_t { Star, Atom, Bag, Tuple };

  Element();  // *
  static Element star() { return Element(); }
  static Element atom(std::uint32_t id);
  static Element bag(Multiset<Element> m);
  // Tuples of length 0 and 1 collapse to * and the single item.
  static Element tuple(std::vector<Element> items);

  Kind kind() const noexcept;
  std::uint32_t atom_id() const;
  const Multiset<Element>& bag_value() const;
  const std::vector<Element>& items() const;

  // |ΣN| grading: atoms 1, bags Σ count·degree, tuples sum.
  std::uint64_t degree() const noexcept;
  // Truncation weight: like degree but every bag entry costs at least 1.
  std::uint64_t weight() const noexcept;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  struct Node;

 private:
  explicit Element(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Flattened concatenation: the strict tensor of basis elements.
Element join(const Element& a, const Element& b);
// Inverse of join for an object with the given number of tensor factors.
std::vector<Element> components(const Element& z, std::size_t arity);

std::string atom_name(std::uint32_t id);

}  // namespace dmod

template <>
struct std::hash<dmod::Element> {
  std::size_t operator()(const dmod::Element& e) const noexcept { return e.hash(); }
};
