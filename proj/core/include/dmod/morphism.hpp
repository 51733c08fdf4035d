#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmod/matrix.hpp"
#include "dmod/object.hpp"
#include "dmod/permutation.hpp"

namespace dmod {

// Sparse row of a morphism at one codomain label: the domain labels with
// nonzero coefficient, sorted by label.
using Row = std::vector<std::pair<Element, Scalar>>;

// Accumulates a row over a scalar domain.
class RowBuilder {
 public:
  explicit RowBuilder(const ScalarDomain& k) : k_(k) {}
  void add(const Element& x, const Scalar& v);
  Row finish() &&;

 private:
  const ScalarDomain& k_;
  std::map<Element, Scalar> acc_;
};

// A morphism dom -> cod of a fragment, evaluated lazily one codomain label at
// a time. In both models every row is finite, so rows are exact. Rows are
// memoized per node; copies share the cache.
class Morphism {
 public:
  using RowFn = std::function<Row(const Element&)>;

  Morphism(std::string name, Object dom, Object cod, ScalarDomain k, RowFn fn);

  const std::string& name() const noexcept;
  const Object& dom() const noexcept;
  const Object& cod() const noexcept;
  const ScalarDomain& scalars() const noexcept;

  const Row& row(const Element& z) const;
  Scalar entry(const Element& z, const Element& x) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

Morphism identity(const Object& o, const ScalarDomain& k);
Morphism zero(const Object& dom, const Object& cod, const ScalarDomain& k);
// f;g
Morphism then(const Morphism& f, const Morphism& g);
Morphism then(const std::vector<Morphism>& chain);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism tensor(const std::vector<Morphism>& fs, const ScalarDomain& k);
Morphism add(const Morphism& f, const Morphism& g);
Morphism sum(const std::vector<Morphism>& terms, const Object& dom, const Object& cod, const ScalarDomain& k);
// σ̄ on the tensor of the given single-slot factors.
Morphism permute(const Permutation& sigma, const std::vector<Object>& factors, const ScalarDomain& k);
// Σ over the terms of a formal permutation sum, on A^{⊗n}.
Morphism permute_sum(const FormalPermSum& a, const Object& slot, const ScalarDomain& k);

// Precedence mirrors the usual reading: ⊗ binds tighter than ; which binds
// tighter than +; sums must be parenthesized because C++ ranks + above >>.
inline Morphism operator>>(const Morphism& f, const Morphism& g) { return then(f, g); }
inline Morphism operator*(const Morphism& f, const Morphism& g) { return tensor(f, g); }
inline Morphism operator+(const Morphism& f, const Morphism& g) { return add(f, g); }

// Dense restriction to the given codomain labels. If no domain basis is
// given, the support of those rows (sorted by degree, then label) is used.
GradedMatrix materialize(const Morphism& f, const OrderedBasis& cod,
                         const std::optional<OrderedBasis>& dom = std::nullopt);

struct Mismatch {
  Element cod;
  Element dom;
  Scalar lhs;
  Scalar rhs;
};

// First codomain label (in window order) whose rows differ.
std::optional<Mismatch> compare_rows(const Morphism& lhs, const Morphism& rhs, const std::vector<Element>& window);

// Sort labels by (degree, label).
void sort_canonical(std::vector<Element>& v);

}  // namespace dmod
