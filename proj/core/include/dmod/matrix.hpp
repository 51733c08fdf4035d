#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmod/element.hpp"
#include "dmod/permutation.hpp"
#include "dmod/scalar.hpp"

namespace dmod {

// Canonically ordered finite set of basis labels. Degrees are those of the
// labels themselves.
class OrderedBasis {
 public:
  OrderedBasis() = default;
  explicit OrderedBasis(std::vector<Element> elements);

  static OrderedBasis unit() { return OrderedBasis({Element::star()}); }

  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::uint64_t degree(std::size_t i) const { return elements_[i].degree(); }
  std::optional<std::size_t> index_of(const Element& e) const;
  bool contains(const Element& e) const { return index_.count(e) != 0; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const OrderedBasis& a, const OrderedBasis& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t> index_;
};

// Lexicographic pairing; labels are joined by the strict tensor.
OrderedBasis tensor_basis(const OrderedBasis& a, const OrderedBasis& b);

// Dense matrix of a morphism dom -> cod; entry(r, c) with r indexing the
// codomain and c the domain. f;g is Mat(g)·Mat(f).
class GradedMatrix {
 public:
  GradedMatrix(OrderedBasis dom, OrderedBasis cod, ScalarDomain scalars);

  const OrderedBasis& domain() const noexcept { return *dom_; }
  const OrderedBasis& codomain() const noexcept { return *cod_; }
  const ScalarDomain& scalars() const noexcept { return scalars_; }
  std::size_t rows() const noexcept { return cod_->size(); }
  std::size_t cols() const noexcept { return dom_->size(); }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { entries_[r * cols() + c] = scalars_.normalize(v); }
  Scalar entry(const Element& cod_elem, const Element& dom_elem) const;
  void set(const Element& cod_elem, const Element& dom_elem, const Scalar& v);

  bool is_zero() const;
  // Every nonzero entry relates labels of equal degree.
  bool degree_preserving() const;

  std::string to_string() const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  std::shared_ptr<const OrderedBasis> dom_, cod_;
  ScalarDomain scalars_;
  std::vector<Scalar> entries_;
};

GradedMatrix mat_zero(const OrderedBasis& dom, const OrderedBasis& cod, const ScalarDomain& k);
GradedMatrix mat_identity(const OrderedBasis& b, const ScalarDomain& k);
// f;g
GradedMatrix mat_compose(const GradedMatrix& f, const GradedMatrix& g);
GradedMatrix mat_add(const GradedMatrix& f, const GradedMatrix& g);
GradedMatrix mat_kron(const GradedMatrix& f, const GradedMatrix& g);
GradedMatrix mat_transpose(const GradedMatrix& f);
// σ̄ on the tensor of single-slot factor bases.
GradedMatrix perm_matrix(const PositionMap& pm, const std::vector<OrderedBasis>& factors, const ScalarDomain& k);

// Null space of Mat(f) (vectors indexed by the domain), over a field, as the
// rows of the reduced echelon form basis, ordered by free column.
std::vector<std::vector<Scalar>> kernel_basis(const GradedMatrix& f);
std::size_t rank(const GradedMatrix& f);

struct Cokernel {
  GradedMatrix selector;  // cod(f) -> kept
  OrderedBasis kept;
};
// Boolean cokernel: restriction to the complement of the image of f.
Cokernel bool_cokernel(const GradedMatrix& f);

// The unique g with s;g = f (s and f share their domain). Throws
// FactorizationError when no solution exists or it is not unique.
GradedMatrix factor_through(const GradedMatrix& s, const GradedMatrix& f);

}  // namespace dmod
