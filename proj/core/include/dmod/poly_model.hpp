#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmod/model.hpp"
#include "dmod/polynomial.hpp"

namespace dmod {

// The symmetric-algebra modality on Vec_k^op over E = k^v, truncated at
// degree D. Labels of !E are monomials (bags of atoms; atom i-1 is x_i).
class PolyFragment : public ModelFragment {
 public:
  PolyFragment(std::uint32_t vars, std::uint32_t characteristic, unsigned bound);

  std::string name() const override { return "poly"; }
  std::uint32_t vars() const { return base().base_size(); }

  // Random linear maps with entries in -2..2.
  std::vector<Morphism> sample_maps(std::size_t count, std::uint64_t seed) const override;

  // In characteristic p every coefficient of ∂^n is a multiple of some β_i!
  // with β_i >= p once n > v(p-1).
  bool dn_vanishes(unsigned n) const override {
    const auto p = scalars().characteristic();
    return p > 0 && n > vars() * (p - 1);
  }

 protected:
  bool leq_member(unsigned n, const Object& o, const Element& e) const override;
  std::vector<Element> cokernel_kept(unsigned n, const Object& o, const std::vector<Element>& window) const override;
};

Element monomial_label(const Monomial& m);
Monomial label_monomial(const Element& e);

// Monomials x^M with |M| <= D whose order-(r+1) derivatives all vanish,
// sorted by graded_lex_less. Cross-checked against Gaussian elimination on
// the matrix of all order-(r+1) partials.
std::vector<Monomial> kernel_slice(const PolyFragment& frag, unsigned r);

// Vec-direction matrices: ∇: SE⊗SE -> SE, η: k -> SE, u: E -> SE (the
// inclusion), m: SSE -> SE, ∂: SE -> SE⊗E.
struct PolyStructure {
  GradedMatrix nabla, eta, u, m, d;
};
PolyStructure build_structure(const PolyFragment& frag);

// The fragment seen by the checking engine (diagram direction, Vec^op).
inline const ModelFragment& fragment_as_model(const PolyFragment& frag) { return frag; }

}  // namespace dmod
