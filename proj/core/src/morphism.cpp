#include "dmod/morphism.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace dmod {

void RowBuilder::add(const Element& x, const Scalar& v) {
  if (ScalarDomain::is_zero(v)) return;
  auto [it, fresh] = acc_.try_emplace(x, v);
  if (!fresh) it->second = k_.add(it->second, v);
}

Row RowBuilder::finish() && {
  Row out;
  out.reserve(acc_.size());
  for (auto& [x, v] : acc_)
    if (!ScalarDomain::is_zero(v)) out.emplace_back(x, std::move(v));
  return out;
}

struct Morphism::Impl {
  std::string name;
  Object dom, cod;
  ScalarDomain k;
  RowFn fn;
  mutable std::mutex mu;
  mutable std::unordered_map<Element, Row> cache;

  Impl(std::string n, Object d, Object c, ScalarDomain s, RowFn f)
      : name(std::move(n)), dom(std::move(d)), cod(std::move(c)), k(s), fn(std::move(f)) {}
};

Morphism::Morphism(std::string name, Object dom, Object cod, ScalarDomain k, RowFn fn)
    : impl_(std::make_shared<Impl>(std::move(name), std::move(dom), std::move(cod), k, std::move(fn))) {}

const std::string& Morphism::name() const noexcept { return impl_->name; }
const Object& Morphism::dom() const noexcept { return impl_->dom; }
const Object& Morphism::cod() const noexcept { return impl_->cod; }
const ScalarDomain& Morphism::scalars() const noexcept { return impl_->k; }

const Row& Morphism::row(const Element& z) const {
  {
    std::lock_guard lock(impl_->mu);
    auto it = impl_->cache.find(z);
    if (it != impl_->cache.end()) return it->second;
  }
  Row r = impl_->fn(z);
  std::lock_guard lock(impl_->mu);
  return impl_->cache.try_emplace(z, std::move(r)).first->second;
}

Scalar Morphism::entry(const Element& z, const Element& x) const {
  const Row& r = row(z);
  auto it = std::lower_bound(r.begin(), r.end(), x, [](const auto& e, const Element& v) { return e.first < v; });
  return it != r.end() && it->first == x ? it->second : Scalar(0);
}

namespace {

void require_same(const Object& a, const Object& b, const char* what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": object mismatch " + a.to_string() + " vs " + b.to_string());
}

// Split z of cod(f)⊗cod(g) into its two parts.
std::pair<Element, Element> split(const Element& z, std::size_t left, std::size_t right) {
  auto parts = components(z, left + right);
  std::vector<Element> a(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(left));
  std::vector<Element> b(parts.begin() + static_cast<std::ptrdiff_t>(left), parts.end());
  return {Element::tuple(std::move(a)), Element::tuple(std::move(b))};
}

}  // namespace

Morphism identity(const Object& o, const ScalarDomain& k) {
  return Morphism("1", o, o, k, [k](const Element& z) { return Row{{z, k.one()}}; });
}

Morphism zero(const Object& dom, const Object& cod, const ScalarDomain& k) {
  return Morphism("0", dom, cod, k, [](const Element&) { return Row{}; });
}

Morphism then(const Morphism& f, const Morphism& g) {
  require_same(f.cod(), g.dom(), "then");
  const auto& k = f.scalars();
  return Morphism(f.name() + ";" + g.name(), f.dom(), g.cod(), k, [f, g, k](const Element& z) {
    RowBuilder b(k);
    for (const auto& [y, gv] : g.row(z))
      for (const auto& [x, fv] : f.row(y)) b.add(x, k.mul(gv, fv));
    return std::move(b).finish();
  });
}

Morphism then(const std::vector<Morphism>& chain) {
  if (chain.empty()) throw DomainError("then: empty chain");
  Morphism out = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) out = then(out, chain[i]);
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  const auto& k = f.scalars();
  auto af = f.cod().arity(), ag = g.cod().arity();
  return Morphism("(" + f.name() + ")x(" + g.name() + ")", Object::tensor(f.dom(), g.dom()),
                  Object::tensor(f.cod(), g.cod()), k, [f, g, k, af, ag](const Element& z) {
                    auto [zf, zg] = split(z, af, ag);
                    const Row& rf = f.row(zf);
                    const Row& rg = g.row(zg);
                    Row out;
                    out.reserve(rf.size() * rg.size());
                    for (const auto& [x1, v1] : rf)
                      for (const auto& [x2, v2] : rg) out.emplace_back(join(x1, x2), k.mul(v1, v2));
                    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                    std::erase_if(out, [](const auto& e) { return ScalarDomain::is_zero(e.second); });
                    return out;
                  });
}

Morphism tensor(const std::vector<Morphism>& fs, const ScalarDomain& k) {
  if (fs.empty()) return identity(Object::unit(), k);
  Morphism out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = tensor(out, fs[i]);
  return out;
}

Morphism add(const Morphism& f, const Morphism& g) {
  require_same(f.dom(), g.dom(), "add");
  require_same(f.cod(), g.cod(), "add");
  const auto& k = f.scalars();
  return Morphism(f.name() + "+" + g.name(), f.dom(), f.cod(), k, [f, g, k](const Element& z) {
    RowBuilder b(k);
    for (const auto& [x, v] : f.row(z)) b.add(x, v);
    for (const auto& [x, v] : g.row(z)) b.add(x, v);
    return std::move(b).finish();
  });
}

Morphism sum(const std::vector<Morphism>& terms, const Object& dom, const Object& cod, const ScalarDomain& k) {
  for (const auto& t : terms) {
    require_same(t.dom(), dom, "sum");
    require_same(t.cod(), cod, "sum");
  }
  return Morphism("sum", dom, cod, k, [terms, k](const Element& z) {
    RowBuilder b(k);
    for (const auto& t : terms)
      for (const auto& [x, v] : t.row(z)) b.add(x, v);
    return std::move(b).finish();
  });
}

Morphism permute(const Permutation& sigma, const std::vector<Object>& factors, const ScalarDomain& k) {
  if (sigma.degree() != factors.size()) throw DomainError("permute: arity mismatch");
  for (const auto& f : factors)
    if (f.arity() != 1) throw DomainError("permute: factors must be single slots");
  PositionMap pm(sigma);
  std::vector<Object> out_factors = pm.apply(factors);
  const std::size_t n = factors.size();
  return Morphism("perm" + sigma.to_string(), Object::tensor(factors), Object::tensor(out_factors), k,
                  [pm, n, k](const Element& z) {
                    auto outs = components(z, n);
                    std::vector<Element> ins(n);
                    for (std::uint32_t s = 1; s <= n; ++s) ins[s - 1] = outs[pm.target(s) - 1];
                    return Row{{Element::tuple(std::move(ins)), k.one()}};
                  });
}

Morphism permute_sum(const FormalPermSum& a, const Object& slot, const ScalarDomain& k) {
  std::vector<Object> factors(a.degree(), slot);
  Object o = Object::tensor(factors);
  std::vector<Morphism> terms;
  for (const auto& [sigma, mult] : a.terms())
    for (std::uint64_t i = 0; i < mult; ++i) terms.push_back(permute(sigma, factors, k));
  return sum(terms, o, o, k);
}

void sort_canonical(std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [](const Element& a, const Element& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
}

GradedMatrix materialize(const Morphism& f, const OrderedBasis& cod, const std::optional<OrderedBasis>& dom) {
  OrderedBasis d;
  if (dom) {
    d = *dom;
  } else {
    std::set<Element> seen;
    for (const auto& z : cod)
      for (const auto& [x, v] : f.row(z)) seen.insert(x);
    std::vector<Element> v(seen.begin(), seen.end());
    sort_canonical(v);
    d = OrderedBasis(std::move(v));
  }
  GradedMatrix out(d, cod, f.scalars());
  for (const auto& z : cod)
    for (const auto& [x, v] : f.row(z)) out.set(z, x, v);
  return out;
}

std::optional<Mismatch> compare_rows(const Morphism& lhs, const Morphism& rhs, const std::vector<Element>& window) {
  for (const auto& z : window) {
    const Row& a = lhs.row(z);
    const Row& b = rhs.row(z);
    if (a == b) continue;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return Mismatch{z, a[i].first, a[i].second, Scalar(0)};
      if (i == a.size() || b[j].first < a[i].first) return Mismatch{z, b[j].first, Scalar(0), b[j].second};
      if (a[i].second != b[j].second) return Mismatch{z, a[i].first, a[i].second, b[j].second};
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

}  // namespace dmod
