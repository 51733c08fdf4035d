#include "dmod/object.hpp"

#include "dmod/errors.hpp"

namespace dmod {

struct Object::Node {
  Kind kind = Kind::Unit;
  std::string name;
  std::uint32_t size = 0;
  std::uint32_t n = 0;
  std::vector<Object> children;
};

namespace {

std::string text(const Object& o, bool key) { return key ? o.key() : o.to_string(); }

std::string render(Object::Kind kind, const std::string& name, std::uint32_t size, std::uint32_t n,
                   const std::vector<Object>& ch, bool key) {
  switch (kind) {
    case Object::Kind::Unit:
      return "I";
    case Object::Kind::Base:
      return key ? name + "{" + std::to_string(size) + "}" : name;
    case Object::Kind::Bang: {
      const auto& o = ch.front();
      return o.kind() == Object::Kind::Tensor ? "!(" + text(o, key) + ")" : "!" + text(o, key);
    }
    case Object::Kind::BangLeq: {
      const auto& o = ch.front();
      auto inner = o.kind() == Object::Kind::Tensor ? "(" + text(o, key) + ")" : text(o, key);
      return "!<=" + std::to_string(n) + " " + inner;
    }
    case Object::Kind::Tensor: {
      std::string s;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i) s += " x ";
        const auto& c = ch[i];
        s += c.kind() == Object::Kind::BangLeq ? "(" + text(c, key) + ")" : text(c, key);
      }
      return s;
    }
  }
  return "?";
}

}  // namespace

Object::Object() : Object(std::make_shared<const Node>()) {}

Object::Object(std::shared_ptr<const Node> n) : node_(std::move(n)) {
  key_ = render(node_->kind, node_->name, node_->size, node_->n, node_->children, true);
}

Object Object::base(std::string name, std::uint32_t size) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Base;
  n->name = std::move(name);
  n->size = size;
  return Object(std::move(n));
}

Object Object::bang(const Object& o) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bang;
  n->children = {o};
  return Object(std::move(n));
}

Object Object::bang_leq(std::uint32_t grade, const Object& o) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::BangLeq;
  n->n = grade;
  n->children = {o};
  return Object(std::move(n));
}

Object Object::tensor(const std::vector<Object>& factors) {
  std::vector<Object> flat;
  for (const auto& f : factors) {
    auto fs = f.factors();
    flat.insert(flat.end(), fs.begin(), fs.end());
  }
  if (flat.empty()) return Object();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->children = std::move(flat);
  return Object(std::move(n));
}

Object Object::power(const Object& o, std::size_t k) { return tensor(std::vector<Object>(k, o)); }

Object::Kind Object::kind() const noexcept { return node_->kind; }

const std::string& Object::base_name() const {
  if (node_->kind != Kind::Base) throw DomainError("object is not a base set");
  return node_->name;
}

std::uint32_t Object::base_size() const {
  if (node_->kind != Kind::Base) throw DomainError("object is not a base set");
  return node_->size;
}

std::uint32_t Object::grade() const {
  if (node_->kind != Kind::BangLeq) throw DomainError("object is not a truncated modality");
  return node_->n;
}

const Object& Object::inner() const {
  if (node_->kind != Kind::Bang && node_->kind != Kind::BangLeq) throw DomainError("object has no inner object");
  return node_->children.front();
}

std::vector<Object> Object::factors() const {
  switch (node_->kind) {
    case Kind::Unit:
      return {};
    case Kind::Tensor:
      return node_->children;
    default:
      return {*this};
  }
}

std::size_t Object::arity() const {
  switch (node_->kind) {
    case Kind::Unit:
      return 0;
    case Kind::Tensor:
      return node_->children.size();
    default:
      return 1;
  }
}

std::string Object::to_string() const {
  return render(node_->kind, node_->name, node_->size, node_->n, node_->children, false);
}

bool operator==(const Object& a, const Object& b) { return a.key_ == b.key_; }

}  // namespace dmod
