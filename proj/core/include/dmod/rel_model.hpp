#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmod/model.hpp"

namespace dmod {

// Toggles one entry of m, delta or d at the base object. Test hook only.
struct RelMutation {
  std::string map;  // "m", "delta" or "d"
  Element cod;
  Element dom;
};

// The multiset modality on finite relations over the base set {a, b, ...},
// truncated at weight D.
class RelFragment : public ModelFragment {
 public:
  RelFragment(std::uint32_t size, unsigned bound, std::vector<RelMutation> mutations = {});

  std::string name() const override { return "rel"; }
  std::uint32_t size() const { return base().base_size(); }
  const std::vector<RelMutation>& mutations() const noexcept { return mutations_; }

  // Every relation on the base when it has at most two elements, otherwise
  // `count` random ones.
  std::vector<Morphism> sample_maps(std::size_t count, std::uint64_t seed) const override;

 protected:
  Morphism make_m(const Object& o) const override;
  Morphism make_delta(const Object& o) const override;
  Morphism make_d(const Object& o) const override;
  bool leq_member(unsigned n, const Object& o, const Element& e) const override;
  std::vector<Element> cokernel_kept(unsigned n, const Object& o, const std::vector<Element>& window) const override;

 private:
  Morphism mutate(const std::string& map, const Object& o, Morphism clean) const;
  std::vector<RelMutation> mutations_;
};

// The relation on the base given by (source atom, target atom) pairs.
Morphism relation(const RelFragment& frag, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

OrderedBasis enumerate_basis(const RelFragment& frag, const Object& expr, unsigned D);

struct RelStructure {
  GradedMatrix m, u, delta, eps, d;
};
// Dense matrices of the structure maps at the base, on the fragment windows.
RelStructure build_structure(const RelFragment& frag);

// 𝓜(R) by forward transport enumeration: M is related to N iff the
// occurrences of M can be sent along R so that they land exactly on N.
GradedMatrix multiset_functor(const GradedMatrix& r, unsigned D);

// Closed-form ∂^n, verified against ∂^{n-1}⊗1;∂ on the fragment.
GradedMatrix dn(const RelFragment& frag, unsigned n);

struct RelExtraction {
  OrderedBasis kept;
  GradedMatrix s;
  GradedMatrix d_le;
  std::optional<GradedMatrix> eps_le;  // n = 0
  std::optional<GradedMatrix> u_le;    // n = 1
};
RelExtraction extract(const RelFragment& frag, unsigned n);

GradedMatrix t_matrix(const RelFragment& frag, unsigned n, unsigned p);

// Deterministic single-entry mutations among labels of weight <= max_weight,
// each relating labels of equal degree.
std::vector<RelMutation> sample_mutations(const RelFragment& clean, std::size_t count, std::uint64_t seed,
                                          unsigned max_weight = 3);

}  // namespace dmod
