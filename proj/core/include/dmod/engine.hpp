#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dmod/model.hpp"
#include "dmod/rel_model.hpp"

namespace dmod {

struct Counterexample {
  std::string row;     // codomain label whose rows differ
  std::string column;  // domain label where they differ
  std::string lhs, rhs;
};

struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, long>> params;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::size_t window = 0;  // number of codomain labels compared
  std::string note;

  std::string label() const;  // name plus "k=v" params
};

// The structure maps of a graded differential modality over one fragment.
// The ungraded modality ignores every index.
class GradedView {
 public:
  explicit GradedView(const ModelFragment& f) : frag_(f) {}
  virtual ~GradedView() = default;

  const ModelFragment& frag() const noexcept { return frag_; }
  virtual bool graded() const = 0;
  virtual Object bang(unsigned r, const Object& o) const = 0;
  virtual Morphism bang_map(unsigned r, const Morphism& f) const = 0;
  // m_{r,s}: !_{rs} -> !_r !_s
  virtual Morphism m(unsigned r, unsigned s, const Object& o) const = 0;
  // u: !_1 -> 1
  virtual Morphism u(const Object& o) const = 0;
  // Δ_{r,s}: !_{r+s} -> !_r ⊗ !_s
  virtual Morphism delta(unsigned r, unsigned s, const Object& o) const = 0;
  // ε: !_0 -> I
  virtual Morphism eps(const Object& o) const = 0;
  // ∂_r: !_r ⊗ 1 -> !_{r+1}
  virtual Morphism d(unsigned r, const Object& o) const = 0;

 private:
  const ModelFragment& frag_;
};

class UngradedView : public GradedView {
 public:
  using GradedView::GradedView;
  bool graded() const override { return false; }
  Object bang(unsigned, const Object& o) const override { return Object::bang(o); }
  Morphism bang_map(unsigned, const Morphism& f) const override { return frag().bang(f); }
  Morphism m(unsigned, unsigned, const Object& o) const override { return frag().m(o); }
  Morphism u(const Object& o) const override { return frag().u(o); }
  Morphism delta(unsigned, unsigned, const Object& o) const override { return frag().delta(o); }
  Morphism eps(const Object& o) const override { return frag().eps(o); }
  Morphism d(unsigned, const Object& o) const override { return frag().d(o); }
};

// The ℕ-graded modality !_{<=n} extracted by cokernels of ∂^{n+1}.
class ExtractedView : public GradedView {
 public:
  using GradedView::GradedView;
  bool graded() const override { return true; }
  Object bang(unsigned r, const Object& o) const override { return Object::bang_leq(r, o); }
  Morphism bang_map(unsigned r, const Morphism& f) const override { return frag().bang_leq(r, f); }
  Morphism m(unsigned r, unsigned s, const Object& o) const override { return frag().m_le(r, s, o); }
  Morphism u(const Object& o) const override { return frag().u_le(o); }
  Morphism delta(unsigned r, unsigned s, const Object& o) const override { return frag().delta_le(r, s, o); }
  Morphism eps(const Object& o) const override { return frag().eps_le(o); }
  Morphism d(unsigned r, const Object& o) const override { return frag().d_le(r, o); }
};

struct CheckOptions {
  unsigned max_n = 2;      // largest grade index
  unsigned max_order = 3;  // largest n in the higher-order families
  std::size_t samples = 16;
  std::uint64_t seed = 1;
};

// Functoriality of ! and naturality of ε, u, Δ, m, ∂ against sampled maps.
std::vector<CheckResult> check_functor_naturality(const GradedView& view, const CheckOptions& opt);
// Coassociativity and both counit triangles of the graded comonad.
std::vector<CheckResult> check_comonad(const GradedView& view, const CheckOptions& opt);
// The comonoid diagrams and the six rules of a graded differential modality.
std::vector<CheckResult> check_comonoid_and_rules(const GradedView& view, const CheckOptions& opt);
// Constant rule, linear rule 2, both higher-order product rules, Faà di Bruno
// and the interchange rule, for n <= max_order.
std::vector<CheckResult> check_higher_order(const ModelFragment& frag, const CheckOptions& opt);
// Closed form against induction for ∂^n, ∂^{k+1} = ∂⊗1;∂^k, ∂^{k+l} = ∂^k⊗1;∂^l
// and both recursions for Δ^n.
std::vector<CheckResult> check_dn_lemmas(const ModelFragment& frag, const CheckOptions& opt);
// Cokernel hypotheses, the 19 identities on the extracted structure, the
// morphism diagrams for s_n and the filtered diagrams for t_{n,p}.
std::vector<CheckResult> check_extraction(const ModelFragment& frag, const CheckOptions& opt);

enum class ModelKind { Rel, Poly };

struct RunConfig {
  ModelKind model = ModelKind::Rel;
  std::uint32_t size = 2;            // base size (rel) or variable count (poly)
  std::uint32_t characteristic = 0;  // poly only
  unsigned max_degree = 3;
  CheckOptions options;
  std::set<std::string> suites;  // empty: all of modality, higher-order, dn, extraction
  std::vector<RelMutation> mutations;
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult* first_failure() const;
};

// Suite names accepted in RunConfig::suites.
const std::vector<std::string>& suite_names();

// Throws UsageError on an invalid configuration.
void validate(const RunConfig& config);
std::unique_ptr<ModelFragment> make_fragment(const RunConfig& config);
Report run_suite(const RunConfig& config);

}  // namespace dmod
