#include "dmod/model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <set>

namespace dmod {

namespace {

void bags_rec(const std::vector<Element>& atoms, std::size_t i, unsigned budget,
              std::vector<Multiset<Element>::entry_type>& cur, std::vector<Element>& out) {
  if (i == atoms.size()) {
    out.push_back(Element::bag(Multiset<Element>::from_counts(cur)));
    return;
  }
  bags_rec(atoms, i + 1, budget, cur, out);
  const unsigned cost = static_cast<unsigned>(std::max<std::uint64_t>(1, atoms[i].weight()));
  for (std::uint32_t c = 1; c * cost <= budget; ++c) {
    cur.emplace_back(atoms[i], c);
    bags_rec(atoms, i + 1, budget - c * cost, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Element> bags_up_to(const std::vector<Element>& atoms, unsigned bound) {
  std::vector<Element> out;
  std::vector<Multiset<Element>::entry_type> cur;
  bags_rec(atoms, 0, bound, cur, out);
  sort_canonical(out);
  return out;
}

ModelFragment::ModelFragment(Object base, ScalarDomain k, Orientation o, unsigned bound)
    : base_(std::move(base)), k_(k), orientation_(o), bound_(bound) {}

const std::vector<Element>& ModelFragment::window(const Object& o, unsigned bound) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(o.key(), bound);
  auto it = windows_.find(key);
  if (it != windows_.end()) return it->second;
  auto elems = enumerate(o, bound);
  return windows_.emplace(key, std::move(elems)).first->second;
}

std::vector<Element> ModelFragment::enumerate(const Object& o, unsigned bound) const {
  switch (o.kind()) {
    case Object::Kind::Unit:
      return {Element::star()};
    case Object::Kind::Base: {
      std::vector<Element> out;
      if (bound >= 1)
        for (std::uint32_t i = 0; i < o.base_size(); ++i) out.push_back(Element::atom(i));
      return out;
    }
    case Object::Kind::Bang:
      return bags_up_to(window(o.inner(), bound), bound);
    case Object::Kind::BangLeq: {
      std::vector<Element> out;
      for (const auto& e : window(Object::bang(o.inner()), bound))
        if (leq_member(o.grade(), o.inner(), e)) out.push_back(e);
      return out;
    }
    case Object::Kind::Tensor: {
      std::vector<std::pair<Element, unsigned>> acc{{Element::star(), 0}};
      for (const auto& f : o.factors()) {
        const auto& w = window(f, bound);
        std::vector<std::pair<Element, unsigned>> next;
        for (const auto& [x, used] : acc)
          for (const auto& y : w)
            if (used + y.weight() <= bound) next.emplace_back(join(x, y), used + static_cast<unsigned>(y.weight()));
        acc = std::move(next);
      }
      std::vector<Element> out;
      out.reserve(acc.size());
      for (auto& [x, used] : acc) out.push_back(std::move(x));
      sort_canonical(out);
      return out;
    }
  }
  return {};
}

bool ModelFragment::contains(const Object& o, const Element& e) const {
  switch (o.kind()) {
    case Object::Kind::Unit:
      return e.kind() == Element::Kind::Star;
    case Object::Kind::Base:
      return e.kind() == Element::Kind::Atom && e.atom_id() < o.base_size();
    case Object::Kind::Bang:
    case Object::Kind::BangLeq: {
      if (e.kind() != Element::Kind::Bag) return false;
      for (const auto& [x, c] : e.bag_value().entries())
        if (!contains(o.inner(), x)) return false;
      return o.kind() == Object::Kind::Bang || leq_member(o.grade(), o.inner(), e);
    }
    case Object::Kind::Tensor: {
      auto fs = o.factors();
      if (e.kind() != Element::Kind::Tuple || e.items().size() != fs.size()) return false;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (!contains(fs[i], e.items()[i])) return false;
      return true;
    }
  }
  return false;
}

Morphism ModelFragment::cached(const std::string& key, const std::function<Morphism()>& make) const {
  {
    std::lock_guard lock(mu_);
    auto it = morphisms_.find(key);
    if (it != morphisms_.end()) return it->second;
  }
  Morphism f = make();
  std::lock_guard lock(mu_);
  return morphisms_.emplace(key, f).first->second;
}

namespace {

const Multiset<Element>& bag_of(const Element& e) {
  if (e.kind() != Element::Kind::Bag) throw DomainError("expected a multiset label, got " + e.to_string());
  return e.bag_value();
}

void require_single_slot(const Object& o, const char* what) {
  if (o.arity() != 1) throw DomainError(std::string(what) + ": object must be a single tensor factor");
}

// Every tuple over the support of M whose multiset is <= M, of length n.
void tuples_below(const std::vector<Multiset<Element>::entry_type>& avail, std::size_t n, std::vector<std::uint32_t>& used,
                  std::vector<Element>& cur, const std::function<void(const std::vector<Element>&)>& emit) {
  if (cur.size() == n) {
    emit(cur);
    return;
  }
  for (std::size_t i = 0; i < avail.size(); ++i) {
    if (used[i] == avail[i].second) continue;
    ++used[i];
    cur.push_back(avail[i].first);
    tuples_below(avail, n, used, cur, emit);
    cur.pop_back();
    --used[i];
  }
}

}  // namespace

Morphism ModelFragment::bang(const Morphism& f) const {
  ScalarDomain k = k_;
  return Morphism("!(" + f.name() + ")", Object::bang(f.dom()), Object::bang(f.cod()), k, [f, k](const Element& z) {
    std::map<Multiset<Element>, Scalar> acc{{Multiset<Element>{}, k.one()}};
    for (const auto& [y, c] : bag_of(z).entries()) {
      const Row& fy = f.row(y);
      for (std::uint32_t rep = 0; rep < c; ++rep) {
        std::map<Multiset<Element>, Scalar> next;
        for (const auto& [mm, v] : acc)
          for (const auto& [x, w] : fy) {
            Multiset<Element> grown = mm;
            grown.add(x);
            auto [it, fresh] = next.try_emplace(std::move(grown), k.mul(v, w));
            if (!fresh) it->second = k.add(it->second, k.mul(v, w));
          }
        acc = std::move(next);
      }
    }
    Row out;
    for (auto& [mm, v] : acc)
      if (!ScalarDomain::is_zero(v)) out.emplace_back(Element::bag(mm), v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  });
}

Morphism ModelFragment::make_m(const Object& o) const {
  ScalarDomain k = k_;
  return Morphism("m", Object::bang(o), Object::bang(Object::bang(o)), k, [k](const Element& z) {
    Multiset<Element> total;
    for (const auto& [inner, c] : bag_of(z).entries())
      for (const auto& [x, d] : bag_of(inner).entries()) total.add(x, c * d);
    return Row{{Element::bag(std::move(total)), k.one()}};
  });
}

Morphism ModelFragment::make_u(const Object& o) const {
  ScalarDomain k = k_;
  return Morphism("u", Object::bang(o), o, k, [k](const Element& x) { return Row{{Element::bag({x}), k.one()}}; });
}

Morphism ModelFragment::make_delta(const Object& o) const {
  require_single_slot(o, "delta");
  ScalarDomain k = k_;
  Object b = Object::bang(o);
  return Morphism("delta", b, Object::tensor(b, b), k, [k](const Element& z) {
    auto parts = components(z, 2);
    return Row{{Element::bag(bag_of(parts[0]) + bag_of(parts[1])), k.one()}};
  });
}

Morphism ModelFragment::make_eps(const Object& o) const {
  ScalarDomain k = k_;
  return Morphism("eps", Object::bang(o), Object::unit(), k,
                  [k](const Element&) { return Row{{Element::bag({}), k.one()}}; });
}

Morphism ModelFragment::make_d(const Object& o) const {
  require_single_slot(o, "d");
  ScalarDomain k = k_;
  Object b = Object::bang(o);
  return Morphism("d", Object::tensor(b, o), b, k, [k](const Element& z) {
    const auto& mm = bag_of(z);
    RowBuilder out(k);
    for (const auto& [x, c] : mm.entries()) {
      Multiset<Element> rest = mm;
      rest.remove(x);
      out.add(join(Element::bag(std::move(rest)), x), k.from_int(c));
    }
    return std::move(out).finish();
  });
}

Morphism ModelFragment::make_dn(unsigned n, const Object& o) const {
  require_single_slot(o, "dn");
  ScalarDomain k = k_;
  Object b = Object::bang(o);
  return Morphism("d^" + std::to_string(n), Object::tensor(b, Object::power(o, n)), b, k, [k, n](const Element& z) {
    const auto& mm = bag_of(z);
    RowBuilder out(k);
    std::vector<std::uint32_t> used(mm.support_size(), 0);
    std::vector<Element> cur;
    tuples_below(mm.entries(), n, used, cur, [&](const std::vector<Element>& t) {
      Multiset<Element> beta = Multiset<Element>::from_items(t);
      Element label = join(Element::bag(mm - beta), Element::tuple(t));
      out.add(label, k.from_mpz(falling(mm, beta)));
    });
    return std::move(out).finish();
  });
}

Morphism ModelFragment::m(const Object& o) const {
  return cached("m|" + o.key(), [&] { return make_m(o); });
}
Morphism ModelFragment::u(const Object& o) const {
  return cached("u|" + o.key(), [&] { return make_u(o); });
}
Morphism ModelFragment::delta(const Object& o) const {
  return cached("delta|" + o.key(), [&] { return make_delta(o); });
}
Morphism ModelFragment::eps(const Object& o) const {
  return cached("eps|" + o.key(), [&] { return make_eps(o); });
}
Morphism ModelFragment::d(const Object& o) const {
  return cached("d|" + o.key(), [&] { return make_d(o); });
}
Morphism ModelFragment::dn(unsigned n, const Object& o) const {
  return cached("dn" + std::to_string(n) + "|" + o.key(), [&] { return make_dn(n, o); });
}

Morphism ModelFragment::dn_inductive(unsigned n, const Object& o) const {
  return cached("dnind" + std::to_string(n) + "|" + o.key(), [&] {
    if (n == 0) return identity(Object::bang(o), k_);
    return then(tensor(dn_inductive(n - 1, o), identity(o, k_)), d(o));
  });
}

Morphism ModelFragment::delta_power(unsigned n, const Object& o) const {
  if (n == 0) throw DomainError("delta_power: n >= 1");
  return cached("deltapow" + std::to_string(n) + "|" + o.key(), [&] {
    Object b = Object::bang(o);
    if (n == 1) return identity(b, k_);
    return then(delta_power(n - 1, o), tensor(identity(Object::power(b, n - 2), k_), delta(o)));
  });
}

const std::vector<Element>& ModelFragment::kept(unsigned n, const Object& o) const {
  {
    std::lock_guard lock(mu_);
    auto it = kept_.find({n, o.key()});
    if (it != kept_.end()) return it->second;
  }
  const auto& win = window(Object::bang(o));
  auto ks = cokernel_kept(n, o, win);
  sort_canonical(ks);
  const auto& expected = window(Object::bang_leq(n, o));
  if (ks != expected)
    throw InternalConsistencyError("extraction: cokernel of d^" + std::to_string(n + 1) + " at " + o.to_string() +
                                   " disagrees with the closed-form criterion");
  std::lock_guard lock(mu_);
  return kept_.emplace(std::make_pair(n, o.key()), std::move(ks)).first->second;
}

Morphism ModelFragment::s(unsigned n, const Object& o) const {
  return cached("s" + std::to_string(n) + "|" + o.key(), [&] {
    kept(n, o);
    Object q = Object::bang_leq(n, o);
    ScalarDomain k = k_;
    return Morphism("s" + std::to_string(n), Object::bang(o), q, k, [this, q, k](const Element& z) {
      if (!contains(q, z)) throw DomainError("s_n: " + z.to_string() + " is not a label of " + q.to_string());
      return Row{{z, k.one()}};
    });
  });
}

Morphism ModelFragment::factor_rows(std::string name, const Morphism& s, const Morphism& f) const {
  if (!(s.dom() == f.dom())) throw DomainError("factor_rows: s and f must share their domain");
  Object q = s.cod();
  ScalarDomain k = k_;
  return Morphism(std::move(name), q, f.cod(), k, [this, s, f, q, k](const Element& y) {
    const Row& fy = f.row(y);
    if (fy.empty()) return Row{};
    std::vector<Element> targets;
    std::set<Element> cols;
    for (const auto& [x, v] : fy) {
      cols.insert(x);
      if (contains(q, x)) targets.push_back(x);
    }
    for (const auto& t : targets)
      for (const auto& [x, v] : s.row(t)) cols.insert(x);
    OrderedBasis xs(std::vector<Element>(cols.begin(), cols.end()));
    OrderedBasis ks(targets);
    OrderedBasis ys({y});
    GradedMatrix sl(xs, ks, k), fl(xs, ys, k);
    for (const auto& t : targets)
      for (const auto& [x, v] : s.row(t)) sl.set(t, x, v);
    for (const auto& [x, v] : fy) fl.set(y, x, v);
    GradedMatrix g = factor_through(sl, fl);
    Row out;
    for (std::size_t i = 0; i < ks.size(); ++i)
      if (!ScalarDomain::is_zero(g.at(0, i))) out.emplace_back(ks[i], g.at(0, i));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  });
}

Morphism ModelFragment::bang_leq(unsigned n, const Morphism& f) const {
  return factor_rows("!<=" + std::to_string(n) + "(" + f.name() + ")", s(n, f.dom()), then(bang(f), s(n, f.cod())));
}

Morphism ModelFragment::eps_le(const Object& o) const {
  return cached("epsle|" + o.key(), [&] { return factor_rows("eps<=", s(0, o), eps(o)); });
}

Morphism ModelFragment::u_le(const Object& o) const {
  return cached("ule|" + o.key(), [&] { return factor_rows("u<=", s(1, o), u(o)); });
}

Morphism ModelFragment::delta_le(unsigned n, unsigned p, const Object& o) const {
  return cached("deltale" + std::to_string(n) + "," + std::to_string(p) + "|" + o.key(), [&] {
    return factor_rows("delta<=", s(n + p, o), then(delta(o), tensor(s(n, o), s(p, o))));
  });
}

Morphism ModelFragment::s_bullet(unsigned n, unsigned p, const Object& o) const {
  return cached("sbullet" + std::to_string(n) + "," + std::to_string(p) + "|" + o.key(),
                [&] { return then(bang(s(p, o)), s(n, Object::bang_leq(p, o))); });
}

Morphism ModelFragment::m_le(unsigned n, unsigned p, const Object& o) const {
  return cached("mle" + std::to_string(n) + "," + std::to_string(p) + "|" + o.key(),
                [&] { return factor_rows("m<=", s(n * p, o), then(m(o), s_bullet(n, p, o))); });
}

Morphism ModelFragment::d_le(unsigned n, const Object& o) const {
  return cached("dle" + std::to_string(n) + "|" + o.key(), [&] {
    return factor_rows("d<=", tensor(s(n, o), identity(o, k_)), then(d(o), s(n + 1, o)));
  });
}

Morphism ModelFragment::t(unsigned n, unsigned p, const Object& o) const {
  if (n < p) throw DomainError("t_{n,p}: requires n >= p");
  return cached("t" + std::to_string(n) + "," + std::to_string(p) + "|" + o.key(),
                [&] { return factor_rows("t", s(n, o), s(p, o)); });
}

std::vector<std::vector<Element>> row_blocks(const Morphism& f, const std::vector<Element>& window) {
  std::vector<std::size_t> parent(window.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::unordered_map<Element, std::size_t> owner;
  for (std::size_t i = 0; i < window.size(); ++i)
    for (const auto& [x, v] : f.row(window[i])) {
      auto [it, fresh] = owner.try_emplace(x, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  std::map<std::size_t, std::vector<Element>> groups;
  for (std::size_t i = 0; i < window.size(); ++i) groups[find(i)].push_back(window[i]);
  std::vector<std::vector<Element>> out;
  out.reserve(groups.size());
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

}  // namespace dmod
