#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dmod/morphism.hpp"

namespace dmod {

// Direct: morphisms are read as stored (Rel). Opposite: the fragment lives in
// Vec_k^op, so a diagram morphism's row at a label is the image of that label
// under the underlying linear map.
enum class Orientation : std::uint8_t { Direct, Opposite };

// A multiset-style differential modality on a finite fragment: objects are
// formal terms over one base object, morphisms are lazy row-finite maps, and
// every check is restricted to labels of weight <= bound().
class ModelFragment {
 public:
  ModelFragment(Object base, ScalarDomain k, Orientation o, unsigned bound);
  virtual ~ModelFragment() = default;
  ModelFragment(const ModelFragment&) = delete;
  ModelFragment& operator=(const ModelFragment&) = delete;

  virtual std::string name() const = 0;
  const Object& base() const noexcept { return base_; }
  const ScalarDomain& scalars() const noexcept { return k_; }
  Orientation orientation() const noexcept { return orientation_; }
  unsigned bound() const noexcept { return bound_; }

  // Labels of o with weight <= bound, sorted by (degree, label).
  const std::vector<Element>& window(const Object& o) const { return window(o, bound_); }
  const std::vector<Element>& window(const Object& o, unsigned bound) const;
  // Exact membership of a label in an object (no truncation).
  bool contains(const Object& o, const Element& e) const;

  // Structure at object o: the functor on morphisms, m: !o -> !!o, u: !o -> o,
  // Δ: !o -> !o⊗!o, ε: !o -> I, ∂: !o⊗o -> !o.
  // Row at N is the expansion of Π_y (Σ_x f[y,x]·x)^{N(y)}; over the Boolean
  // semiring this is exactly the existence of a transport supported in f.
  virtual Morphism bang(const Morphism& f) const;
  Morphism m(const Object& o) const;
  Morphism u(const Object& o) const;
  Morphism delta(const Object& o) const;
  Morphism eps(const Object& o) const;
  Morphism d(const Object& o) const;
  // ∂^n: !o⊗o^{⊗n} -> !o by the model's closed form.
  Morphism dn(unsigned n, const Object& o) const;
  // ∂^0 = 1, ∂^{n+1} = ∂^n⊗1;∂.
  Morphism dn_inductive(unsigned n, const Object& o) const;
  // Whether ∂^n_base is identically zero (not just on the window).
  virtual bool dn_vanishes(unsigned) const { return false; }
  // Δ^1 = 1, Δ^{n+1} = Δ^n;1⊗Δ.
  Morphism delta_power(unsigned n, const Object& o) const;

  // Deterministic sample of maps base -> base.
  virtual std::vector<Morphism> sample_maps(std::size_t count, std::uint64_t seed) const = 0;

  // Extraction. kept(n, o) is the basis of !_{<=n}o inside the window of !o,
  // computed as the cokernel of ∂^{n+1}_o on that window.
  const std::vector<Element>& kept(unsigned n, const Object& o) const;
  Morphism s(unsigned n, const Object& o) const;
  Morphism bang_leq(unsigned n, const Morphism& f) const;
  Morphism eps_le(const Object& o) const;
  Morphism u_le(const Object& o) const;
  Morphism delta_le(unsigned n, unsigned p, const Object& o) const;
  Morphism m_le(unsigned n, unsigned p, const Object& o) const;
  Morphism d_le(unsigned n, const Object& o) const;
  Morphism t(unsigned n, unsigned p, const Object& o) const;
  // s_n • s_p = !(s_p);s_n(!_{<=p}o)
  Morphism s_bullet(unsigned n, unsigned p, const Object& o) const;

  // Factor F through a monomial epi s (s;g = F) one row at a time.
  Morphism factor_rows(std::string name, const Morphism& s, const Morphism& f) const;

 protected:
  // Both models share the row shape of every structure map; coefficients are
  // multiplicities normalized into the scalar domain.
  virtual Morphism make_m(const Object& o) const;
  virtual Morphism make_u(const Object& o) const;
  virtual Morphism make_delta(const Object& o) const;
  virtual Morphism make_eps(const Object& o) const;
  virtual Morphism make_d(const Object& o) const;
  // Row at M: (M−β, t) for every tuple t whose multiset β ≤ M, with
  // coefficient the falling factorial of M at β.
  virtual Morphism make_dn(unsigned n, const Object& o) const;
  // Whether the row of ∂^{n+1}_o at bag e vanishes (closed-form criterion).
  virtual bool leq_member(unsigned n, const Object& o, const Element& e) const = 0;
  // Kept labels of the cokernel of ∂^{n+1}_o over the given window of !o,
  // computed by linear algebra on the materialized matrix.
  virtual std::vector<Element> cokernel_kept(unsigned n, const Object& o, const std::vector<Element>& window) const = 0;

  Morphism cached(const std::string& key, const std::function<Morphism()>& make) const;

 private:
  std::vector<Element> enumerate(const Object& o, unsigned bound) const;

  Object base_;
  ScalarDomain k_;
  Orientation orientation_;
  unsigned bound_;

  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<std::string, unsigned>, std::vector<Element>> windows_;
  mutable std::map<std::string, Morphism> morphisms_;
  mutable std::map<std::pair<unsigned, std::string>, std::vector<Element>> kept_;
};

// All bags over `atoms` (each with the given weight) of total weight <= bound,
// where an entry of weight w costs max(1, w).
std::vector<Element> bags_up_to(const std::vector<Element>& atoms, unsigned bound);

// Groups of window labels whose rows of f are linked through shared domain
// labels. The restriction of Mat(f) to the window is block diagonal along them.
std::vector<std::vector<Element>> row_blocks(const Morphism& f, const std::vector<Element>& window);

}  // namespace dmod
