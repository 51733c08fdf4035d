#include "dmod/poly_model.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dmod {

PolyFragment::PolyFragment(std::uint32_t vars, std::uint32_t characteristic, unsigned bound)
    : ModelFragment(Object::base("E", vars), ScalarDomain::field_of_characteristic(characteristic),
                    Orientation::Opposite, bound) {}

std::vector<Morphism> PolyFragment::sample_maps(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<Morphism> out;
  const auto k = scalars();
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Row> rows(vars());
    for (auto& r : rows) {
      for (std::uint32_t j = 0; j < vars(); ++j) {
        Scalar v = k.from_int(coef(rng));
        if (!ScalarDomain::is_zero(v)) r.emplace_back(Element::atom(j), v);
      }
    }
    out.emplace_back("L" + std::to_string(c), base(), base(), k,
                     [rows](const Element& y) { return rows.at(y.atom_id()); });
  }
  return out;
}

bool PolyFragment::leq_member(unsigned n, const Object&, const Element& e) const {
  return e.kind() == Element::Kind::Bag && monomial_kernel_predicate(e.bag_value(), n, scalars());
}

std::vector<Element> PolyFragment::cokernel_kept(unsigned n, const Object& o, const std::vector<Element>& window) const {
  // The cokernel in Vec^op is the kernel of the Vec map e_M -> row(M).
  Morphism f = dn(n + 1, o);
  std::vector<Element> kept;
  for (auto& block : row_blocks(f, window)) {
    auto vec = mat_transpose(materialize(f, OrderedBasis(std::move(block))));
    for (const auto& v : kernel_basis(vec)) {
      std::size_t nonzero = 0, at = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!ScalarDomain::is_zero(v[i])) ++nonzero, at = i;
      if (nonzero != 1) throw InternalConsistencyError("kernel of d^" + std::to_string(n + 1) + " is not monomial");
      kept.push_back(vec.domain()[at]);
    }
  }
  return kept;
}

Element monomial_label(const Monomial& m) {
  std::vector<Multiset<Element>::entry_type> e;
  for (const auto& [i, c] : m.entries()) e.emplace_back(Element::atom(i - 1), c);
  return Element::bag(Multiset<Element>::from_counts(std::move(e)));
}

Monomial label_monomial(const Element& e) {
  Monomial m;
  for (const auto& [x, c] : e.bag_value().entries()) m.add(x.atom_id() + 1, c);
  return m;
}

std::vector<Monomial> kernel_slice(const PolyFragment& frag, unsigned r) {
  const auto& k = frag.scalars();
  const std::uint32_t v = frag.vars();
  std::vector<Monomial> all;
  for (const auto& e : frag.window(Object::bang(frag.base()))) all.push_back(label_monomial(e));
  std::sort(all.begin(), all.end(), graded_lex_less);

  std::vector<Monomial> by_criterion;
  for (const auto& m : all)
    if (monomial_kernel_predicate(m, r, k)) by_criterion.push_back(m);

  // Oracle: one column per monomial, one row per (tuple, output monomial).
  std::vector<Element> cols, rows;
  std::vector<std::vector<std::pair<Element, Scalar>>> images;
  std::set<Element> row_set;
  for (const auto& m : all) {
    cols.push_back(monomial_label(m));
    auto fam = dstar(Polynomial::monomial(k, v, m), r + 1);
    std::vector<std::pair<Element, Scalar>> img;
    for (const auto& [t, p] : fam.entries) {
      std::vector<Element> slots;
      for (auto i : t) slots.push_back(Element::atom(i - 1));
      for (const auto& [mono, c] : p.terms()) {
        Element lbl = join(monomial_label(mono), Element::tuple(slots));
        row_set.insert(lbl);
        img.emplace_back(lbl, c);
      }
    }
    images.push_back(std::move(img));
  }
  rows.assign(row_set.begin(), row_set.end());
  GradedMatrix mat{OrderedBasis(cols), OrderedBasis(rows), k};
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [lbl, val] : images[c]) mat.set(lbl, cols[c], val);

  std::vector<Monomial> by_oracle;
  for (const auto& vec : kernel_basis(mat)) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t i = 0; i < vec.size(); ++i)
      if (!ScalarDomain::is_zero(vec[i])) ++nonzero, at = i;
    if (nonzero != 1) throw InternalConsistencyError("kernel_slice: oracle kernel is not monomially spanned");
    by_oracle.push_back(all[at]);
  }
  std::sort(by_oracle.begin(), by_oracle.end(), graded_lex_less);
  if (by_oracle != by_criterion)
    throw InternalConsistencyError("kernel_slice: monomial criterion disagrees with Gaussian elimination");
  return by_criterion;
}

namespace {

GradedMatrix vec_matrix(const PolyFragment& frag, const Morphism& f) {
  return mat_transpose(materialize(f, OrderedBasis(frag.window(f.cod())), OrderedBasis(frag.window(f.dom()))));
}

}  // namespace

PolyStructure build_structure(const PolyFragment& frag) {
  const Object& e = frag.base();
  return {vec_matrix(frag, frag.delta(e)), vec_matrix(frag, frag.eps(e)), vec_matrix(frag, frag.u(e)),
          vec_matrix(frag, frag.m(e)), vec_matrix(frag, frag.d(e))};
}

}  // namespace dmod
