#include "dmod/rel_model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace dmod {

RelFragment::RelFragment(std::uint32_t size, unsigned bound, std::vector<RelMutation> mutations)
    : ModelFragment(Object::base("X", size), ScalarDomain::boolean(), Orientation::Direct, bound),
      mutations_(std::move(mutations)) {
  for (const auto& mu : mutations_)
    if (mu.map != "m" && mu.map != "delta" && mu.map != "d") throw DomainError("mutation: unknown map " + mu.map);
}

Morphism RelFragment::mutate(const std::string& map, const Object& o, Morphism clean) const {
  if (!(o == base())) return clean;
  std::vector<RelMutation> mine;
  for (const auto& mu : mutations_)
    if (mu.map == map) mine.push_back(mu);
  if (mine.empty()) return clean;
  return Morphism(clean.name() + "~", clean.dom(), clean.cod(), scalars(), [clean, mine](const Element& z) {
    Row r = clean.row(z);
    for (const auto& mu : mine) {
      if (!(mu.cod == z)) continue;
      auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == mu.dom; });
      if (it != r.end()) {
        r.erase(it);
      } else {
        r.emplace_back(mu.dom, Scalar(1));
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      }
    }
    return r;
  });
}

Morphism RelFragment::make_m(const Object& o) const { return mutate("m", o, ModelFragment::make_m(o)); }
Morphism RelFragment::make_delta(const Object& o) const { return mutate("delta", o, ModelFragment::make_delta(o)); }
Morphism RelFragment::make_d(const Object& o) const { return mutate("d", o, ModelFragment::make_d(o)); }

bool RelFragment::leq_member(unsigned n, const Object&, const Element& e) const {
  return e.kind() == Element::Kind::Bag && e.bag_value().size() <= n;
}

std::vector<Element> RelFragment::cokernel_kept(unsigned n, const Object& o, const std::vector<Element>& window) const {
  Morphism f = dn(n + 1, o);
  std::vector<Element> kept;
  for (auto& block : row_blocks(f, window)) {
    auto ck = bool_cokernel(materialize(f, OrderedBasis(std::move(block))));
    for (const auto& e : ck.kept) kept.push_back(e);
  }
  return kept;
}

std::vector<Morphism> RelFragment::sample_maps(std::size_t count, std::uint64_t seed) const {
  const std::uint32_t n = size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) all.emplace_back(i, j);
  std::vector<Morphism> out;
  if (n <= 2) {
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      for (std::size_t b = 0; b < all.size(); ++b)
        if (mask >> b & 1u) pairs.push_back(all[b]);
      out.push_back(relation(*this, pairs));
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& p : all)
      if (coin(rng)) pairs.push_back(p);
    out.push_back(relation(*this, pairs));
  }
  return out;
}

Morphism relation(const RelFragment& frag, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> pre;
  std::string name = "R{";
  for (const auto& [a, b] : pairs) {
    if (a >= frag.size() || b >= frag.size()) throw DomainError("relation: atom outside the base");
    pre[b].push_back(a);
    name += atom_name(a) + atom_name(b) + ",";
  }
  if (!pairs.empty()) name.pop_back();
  name += "}";
  return Morphism(name, frag.base(), frag.base(), frag.scalars(), [pre](const Element& y) {
    Row r;
    auto it = pre.find(y.atom_id());
    if (it == pre.end()) return r;
    std::set<std::uint32_t> xs(it->second.begin(), it->second.end());
    for (auto x : xs) r.emplace_back(Element::atom(x), Scalar(1));
    return r;
  });
}

OrderedBasis enumerate_basis(const RelFragment& frag, const Object& expr, unsigned D) {
  return OrderedBasis(frag.window(expr, D));
}

namespace {

GradedMatrix dense(const RelFragment& frag, const Morphism& f) {
  return materialize(f, OrderedBasis(frag.window(f.cod())), OrderedBasis(frag.window(f.dom())));
}

}  // namespace

RelStructure build_structure(const RelFragment& frag) {
  const Object& a = frag.base();
  return {dense(frag, frag.m(a)), dense(frag, frag.u(a)), dense(frag, frag.delta(a)), dense(frag, frag.eps(a)),
          dense(frag, frag.d(a))};
}

GradedMatrix multiset_functor(const GradedMatrix& r, unsigned D) {
  if (!r.scalars().is_boolean()) throw UnsupportedDomainError("multiset_functor: requires a Boolean relation");
  auto bags = [D](const OrderedBasis& b) { return OrderedBasis(bags_up_to(b.elements(), D)); };
  OrderedBasis dom = bags(r.domain()), cod = bags(r.codomain());
  GradedMatrix out(dom, cod, r.scalars());
  for (std::size_t c = 0; c < dom.size(); ++c) {
    std::vector<Element> occ = dom[c].bag_value().items();
    Multiset<Element> target;
    std::function<void(std::size_t)> send = [&](std::size_t i) {
      if (i == occ.size()) {
        out.set(Element::bag(target), dom[c], Scalar(1));
        return;
      }
      auto src = *r.domain().index_of(occ[i]);
      for (std::size_t y = 0; y < r.rows(); ++y) {
        if (ScalarDomain::is_zero(r.at(y, src))) continue;
        target.add(r.codomain()[y]);
        send(i + 1);
        target.remove(r.codomain()[y]);
      }
    };
    send(0);
  }
  return out;
}

GradedMatrix dn(const RelFragment& frag, unsigned n) {
  const Object& a = frag.base();
  const auto& window = frag.window(Object::bang(a));
  if (auto mm = compare_rows(frag.dn(n, a), frag.dn_inductive(n, a), window))
    throw InternalConsistencyError("dn: closed form and induction differ at " + mm->cod.to_string());
  return dense(frag, frag.dn(n, a));
}

RelExtraction extract(const RelFragment& frag, unsigned n) {
  const Object& a = frag.base();
  RelExtraction out{OrderedBasis(frag.kept(n, a)), dense(frag, frag.s(n, a)), dense(frag, frag.d_le(n, a)),
                    std::nullopt, std::nullopt};
  if (n == 0) out.eps_le = dense(frag, frag.eps_le(a));
  if (n == 1) out.u_le = dense(frag, frag.u_le(a));
  return out;
}

GradedMatrix t_matrix(const RelFragment& frag, unsigned n, unsigned p) { return dense(frag, frag.t(n, p, frag.base())); }

std::vector<RelMutation> sample_mutations(const RelFragment& clean, std::size_t count, std::uint64_t seed,
                                          unsigned max_weight) {
  const Object& a = clean.base();
  struct Target {
    std::string name;
    Morphism f;
  };
  std::vector<Target> targets{{"m", clean.m(a)}, {"delta", clean.delta(a)}, {"d", clean.d(a)}};
  auto light = [&](const Object& o) {
    std::vector<Element> out;
    for (const auto& e : clean.window(o))
      if (e.weight() <= max_weight) out.push_back(e);
    return out;
  };
  std::mt19937_64 rng(seed);
  std::vector<RelMutation> out;
  std::set<std::tuple<std::string, Element, Element>> seen;
  for (std::size_t attempts = 0; out.size() < count && attempts < 100 * count + 100; ++attempts) {
    const auto& t = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    auto cods = light(t.f.cod());
    if (cods.empty()) continue;
    const auto& z = cods[std::uniform_int_distribution<std::size_t>(0, cods.size() - 1)(rng)];
    std::vector<Element> doms;
    for (const auto& x : light(t.f.dom()))
      if (x.degree() == z.degree()) doms.push_back(x);
    if (doms.empty()) continue;
    const auto& x = doms[std::uniform_int_distribution<std::size_t>(0, doms.size() - 1)(rng)];
    if (seen.emplace(t.name, z, x).second) out.push_back({t.name, z, x});
  }
  return out;
}

}  // namespace dmod
