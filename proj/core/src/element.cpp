#include "dmod/element.hpp"

#include <algorithm>

namespace dmod {

struct Element::Node {
  Kind kind = Kind::Star;
  std::uint32_t atom = 0;
  Multiset<Element> bag;
  std::vector<Element> items;
  std::uint64_t degree = 0;
  std::uint64_t weight = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

const std::shared_ptr<const Element::Node>& star_node() {
  static const std::shared_ptr<const Element::Node> node = [] {
    auto n = std::make_shared<Element::Node>();
    n->hash = 0x51ed27;
    return n;
  }();
  return node;
}

}  // namespace

Element::Element() : node_(star_node()) {}

Element Element::atom(std::uint32_t id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = id;
  n->degree = n->weight = 1;
  n->hash = mix(0xa7, id);
  return Element(std::move(n));
}

Element Element::bag(Multiset<Element> m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bag;
  for (const auto& [e, c] : m.entries()) {
    n->degree += c * e.degree();
    n->weight += c * std::max<std::uint64_t>(1, e.weight());
  }
  n->hash = mix(0xb3, m.hash());
  n->bag = std::move(m);
  return Element(std::move(n));
}

Element Element::tuple(std::vector<Element> items) {
  if (items.empty()) return Element();
  if (items.size() == 1) return items.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tuple;
  std::size_t h = 0x7c;
  for (const auto& e : items) {
    n->degree += e.degree();
    n->weight += e.weight();
    h = mix(h, e.hash());
  }
  n->hash = h;
  n->items = std::move(items);
  return Element(std::move(n));
}

Element::Kind Element::kind() const noexcept { return node_->kind; }

std::uint32_t Element::atom_id() const {
  if (node_->kind != Kind::Atom) throw DomainError("element is not an atom");
  return node_->atom;
}

const Multiset<Element>& Element::bag_value() const {
  if (node_->kind != Kind::Bag) throw DomainError("element is not a multiset: " + to_string());
  return node_->bag;
}

const std::vector<Element>& Element::items() const {
  if (node_->kind != Kind::Tuple) throw DomainError("element is not a tuple: " + to_string());
  return node_->items;
}

std::uint64_t Element::degree() const noexcept { return node_->degree; }
std::uint64_t Element::weight() const noexcept { return node_->weight; }
std::size_t Element::hash() const noexcept { return node_->hash; }

std::string atom_name(std::uint32_t id) {
  if (id < 26) return std::string(1, static_cast<char>('a' + id));
  return "a" + std::to_string(id);
}

std::string Element::to_string() const {
  switch (node_->kind) {
    case Kind::Star:
      return "*";
    case Kind::Atom:
      return atom_name(node_->atom);
    case Kind::Bag: {
      std::string s = "[";
      bool first = true;
      for (const auto& [e, c] : node_->bag.entries())
        for (std::uint32_t k = 0; k < c; ++k) {
          if (!first) s += ",";
          s += e.to_string();
          first = false;
        }
      return s + "]";
    }
    case Kind::Tuple: {
      std::string s = "(";
      for (std::size_t i = 0; i < node_->items.size(); ++i) s += (i ? "," : "") + node_->items[i].to_string();
      return s + ")";
    }
  }
  return "?";
}

bool operator==(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return x.kind <=> y.kind;
  switch (x.kind) {
    case Element::Kind::Star:
      return std::strong_ordering::equal;
    case Element::Kind::Atom:
      return x.atom <=> y.atom;
    case Element::Kind::Bag:
      return x.bag <=> y.bag;
    case Element::Kind::Tuple: {
      auto n = std::min(x.items.size(), y.items.size());
      for (std::size_t i = 0; i < n; ++i) {
        auto c = x.items[i] <=> y.items[i];
        if (c != std::strong_ordering::equal) return c;
      }
      return x.items.size() <=> y.items.size();
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void append_parts(const Element& e, std::vector<Element>& out) {
  switch (e.kind()) {
    case Element::Kind::Star:
      return;
    case Element::Kind::Tuple:
      out.insert(out.end(), e.items().begin(), e.items().end());
      return;
    default:
      out.push_back(e);
  }
}

}  // namespace

Element join(const Element& a, const Element& b) {
  if (a.kind() == Element::Kind::Star) return b;
  if (b.kind() == Element::Kind::Star) return a;
  std::vector<Element> parts;
  append_parts(a, parts);
  append_parts(b, parts);
  return Element::tuple(std::move(parts));
}

std::vector<Element> components(const Element& z, std::size_t arity) {
  if (arity == 0) {
    if (z.kind() != Element::Kind::Star) throw DomainError("components: expected *, got " + z.to_string());
    return {};
  }
  if (arity == 1) return {z};
  const auto& it = z.items();
  if (it.size() != arity) throw DomainError("components: arity mismatch for " + z.to_string());
  return it;
}

}  // namespace dmod
