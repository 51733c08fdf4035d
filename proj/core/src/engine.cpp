#include "dmod/engine.hpp"

#include <algorithm>
#include <functional>

#include "dmod/partition.hpp"
#include "dmod/poly_model.hpp"

namespace dmod {

std::string CheckResult::label() const {
  std::string out = name;
  for (const auto& [k, v] : params) out += " " + k + "=" + std::to_string(v);
  return out;
}

namespace {

using Params = std::vector<std::pair<std::string, long>>;
using Pair = std::pair<Morphism, Morphism>;

bool degenerate(const ModelFragment& frag) { return frag.base().base_size() == 0 || frag.bound() == 0; }

// Compares lhs and rhs row by row on the codomain window. A check whose window
// is empty, or whose two sides vanish on the whole window, is rejected as
// vacuous unless the identity asserts a zero or the fragment is degenerate.
class Checker {
 public:
  Checker(const ModelFragment& frag, std::string prefix) : frag_(frag), prefix_(std::move(prefix)) {}

  void equal(const std::string& name, Params params, const std::function<Pair()>& build, bool zero = false) {
    many(name, std::move(params), [&] { return std::vector<Pair>{build()}; }, zero);
  }

  void zero(const std::string& name, Params params, const std::function<Morphism()>& build) {
    equal(
        name, std::move(params),
        [&] {
          Morphism f = build();
          return Pair{f, dmod::zero(f.dom(), f.cod(), f.scalars())};
        },
        true);
  }

  // One result for a family of equations (e.g. one per sampled map).
  void many(const std::string& name, Params params, const std::function<std::vector<Pair>()>& build,
            bool zero = false) {
    CheckResult r;
    r.name = prefix_ + name;
    r.params = std::move(params);
    try {
      bool witnessed = false;
      r.passed = true;
      for (const auto& [lhs, rhs] : build()) {
        if (!(lhs.dom() == rhs.dom()) || !(lhs.cod() == rhs.cod())) {
          r.passed = false;
          r.note = "shape mismatch: " + lhs.dom().to_string() + " -> " + lhs.cod().to_string() + " vs " +
                   rhs.dom().to_string() + " -> " + rhs.cod().to_string();
          break;
        }
        const auto& window = frag_.window(lhs.cod());
        r.window += window.size();
        if (auto mm = compare_rows(lhs, rhs, window)) {
          const auto& k = frag_.scalars();
          r.passed = false;
          r.counterexample = Counterexample{mm->cod.to_string(), mm->dom.to_string(), k.format(mm->lhs), k.format(mm->rhs)};
          if (!lhs.name().empty()) r.note = "at " + lhs.name();
          break;
        }
        for (const auto& z : window)
          if (!lhs.row(z).empty()) {
            witnessed = true;
            break;
          }
        if (zero && !window.empty()) witnessed = true;
      }
      if (r.passed && !witnessed && !degenerate(frag_)) {
        r.passed = false;
        r.note = r.window == 0 ? "vacuous: empty window" : "vacuous: both sides vanish on the window";
      }
    } catch (const FactorizationError& e) {
      r.passed = false;
      r.counterexample = Counterexample{e.witness(), "", "", ""};
      r.note = e.what();
    } catch (const std::exception& e) {
      r.passed = false;
      r.note = e.what();
    }
    results_.push_back(std::move(r));
  }

  // A check that passes iff `body` returns without throwing.
  void holds(const std::string& name, Params params, const std::function<std::size_t()>& body) {
    CheckResult r;
    r.name = prefix_ + name;
    r.params = std::move(params);
    try {
      r.window = body();
      r.passed = r.window > 0 || degenerate(frag_);
      if (!r.passed) r.note = "vacuous: empty window";
    } catch (const std::exception& e) {
      r.passed = false;
      r.note = e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() {
    auto out = std::move(results_);
    results_.clear();
    return out;
  }

 private:
  const ModelFragment& frag_;
  std::string prefix_;
  std::vector<CheckResult> results_;
};

std::string prefix(const GradedView& v) { return v.graded() ? "extracted." : ""; }

// Calls f once with all indices 0 for the ungraded view, otherwise once per
// index tuple in [0, max]^names.size() accepted by `keep`.
void for_grades(const GradedView& v, const std::vector<std::string>& names, unsigned max,
                const std::function<void(const std::vector<unsigned>&, Params)>& f,
                const std::function<bool(const std::vector<unsigned>&)>& keep = nullptr) {
  std::vector<unsigned> idx(names.size(), 0);
  if (!v.graded()) {
    f(idx, {});
    return;
  }
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == idx.size()) {
      if (keep && !keep(idx)) return;
      Params p;
      for (std::size_t j = 0; j < idx.size(); ++j) p.emplace_back(names[j], idx[j]);
      f(idx, std::move(p));
      return;
    }
    for (unsigned a = 0; a <= max; ++a) {
      idx[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
}

Morphism gamma(const Object& a, const Object& b, const ScalarDomain& k) {
  return permute(gamma_block(1, 1), {a, b}, k);
}

// Sampled maps paired for the composition law: f_i with f_{(5i+3) mod N}.
std::vector<std::pair<Morphism, Morphism>> sample_pairs(const std::vector<Morphism>& maps) {
  std::vector<std::pair<Morphism, Morphism>> out;
  for (std::size_t i = 0; i < maps.size(); ++i) out.emplace_back(maps[i], maps[(5 * i + 3) % maps.size()]);
  return out;
}

}  // namespace

std::vector<CheckResult> check_functor_naturality(const GradedView& v, const CheckOptions& opt) {
  const auto& frag = v.frag();
  const auto& k = frag.scalars();
  const Object& a = frag.base();
  const auto maps = frag.sample_maps(opt.samples, opt.seed);
  Checker c(frag, prefix(v));
  auto per_map = [&](const std::function<Pair(const Morphism&)>& eq) {
    return [&maps, eq] {
      std::vector<Pair> out;
      for (const auto& f : maps) out.push_back(eq(f));
      return out;
    };
  };

  for_grades(v, {"r"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0];
    c.many("functor.composition", p, [&] {
      std::vector<Pair> out;
      for (const auto& [f, g] : sample_pairs(maps))
        out.emplace_back(v.bang_map(r, f >> g), v.bang_map(r, f) >> v.bang_map(r, g));
      return out;
    });
    c.equal("functor.identity", p, [&] { return Pair{v.bang_map(r, identity(a, k)), identity(v.bang(r, a), k)}; });
  });
  c.many("naturality.eps", {}, per_map([&](const Morphism& f) { return Pair{v.bang_map(0, f) >> v.eps(a), v.eps(a)}; }));
  c.many("naturality.u", {}, per_map([&](const Morphism& f) { return Pair{v.bang_map(1, f) >> v.u(a), v.u(a) >> f}; }));
  for_grades(v, {"r", "s"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0], s = idx[1];
    c.many("naturality.delta", p, per_map([&, r, s](const Morphism& f) {
             return Pair{v.bang_map(r + s, f) >> v.delta(r, s, a), v.delta(r, s, a) >> (v.bang_map(r, f) * v.bang_map(s, f))};
           }));
    c.many("naturality.m", p, per_map([&, r, s](const Morphism& f) {
             return Pair{v.bang_map(r * s, f) >> v.m(r, s, a), v.m(r, s, a) >> v.bang_map(r, v.bang_map(s, f))};
           }));
  });
  for_grades(v, {"r"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0];
    c.many("naturality.d", p, per_map([&, r](const Morphism& f) {
             return Pair{(v.bang_map(r, f) * f) >> v.d(r, a), v.d(r, a) >> v.bang_map(r + 1, f)};
           }));
  });
  return c.take();
}

std::vector<CheckResult> check_comonad(const GradedView& v, const CheckOptions& opt) {
  const auto& frag = v.frag();
  const auto& k = frag.scalars();
  const Object& a = frag.base();
  Checker c(frag, prefix(v));
  for_grades(v, {"n", "p", "q"}, opt.max_n, [&](auto idx, Params par) {
    unsigned n = idx[0], p = idx[1], q = idx[2];
    c.equal("comonad.coassociativity", par, [&] {
      return Pair{v.m(n * p, q, a) >> v.m(n, p, v.bang(q, a)), v.m(n, p * q, a) >> v.bang_map(n, v.m(p, q, a))};
    });
  });
  for_grades(v, {"r"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0];
    c.equal("comonad.counit-right", p, [&] { return Pair{v.m(r, 1, a) >> v.bang_map(r, v.u(a)), identity(v.bang(r, a), k)}; });
    c.equal("comonad.counit-left", p, [&] { return Pair{v.m(1, r, a) >> v.u(v.bang(r, a)), identity(v.bang(r, a), k)}; });
  });
  return c.take();
}

std::vector<CheckResult> check_comonoid_and_rules(const GradedView& v, const CheckOptions& opt) {
  const auto& frag = v.frag();
  const auto& k = frag.scalars();
  const Object& a = frag.base();
  auto id = [&](const Object& o) { return identity(o, k); };
  auto b = [&](unsigned r) { return v.bang(r, a); };
  Checker c(frag, prefix(v));

  for_grades(v, {"r", "s", "t"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0], s = idx[1], t = idx[2];
    c.equal("comonoid.coassociativity", p, [&] {
      return Pair{v.delta(r + s, t, a) >> (v.delta(r, s, a) * id(b(t))),
                  v.delta(r, s + t, a) >> (id(b(r)) * v.delta(s, t, a))};
    });
  });
  c.equal("comonoid.counit", {}, [&] { return Pair{v.delta(0, 0, a) >> (id(b(0)) * v.eps(a)), id(b(0))}; });
  for_grades(v, {"r", "s"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0], s = idx[1];
    c.equal("comonoid.cocommutativity", p, [&] { return Pair{v.delta(r, s, a) >> gamma(b(r), b(s), k), v.delta(s, r, a)}; });
  });
  for_grades(v, {"r", "s", "t"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0], s = idx[1], t = idx[2];
    c.equal("rules.m-preserves-delta", p, [&] {
      return Pair{v.m(r + s, t, a) >> v.delta(r, s, v.bang(t, a)), v.delta(r * t, s * t, a) >> (v.m(r, t, a) * v.m(s, t, a))};
    });
  });
  for_grades(v, {"r"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0];
    c.equal("rules.m-preserves-eps", p, [&] { return Pair{v.m(0, r, a) >> v.eps(v.bang(r, a)), v.eps(a)}; });
  });
  c.equal("rules.linear", {}, [&] { return Pair{v.d(0, a) >> v.u(a), v.eps(a) * id(a)}; });
  for_grades(v, {"r", "s"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0], s = idx[1];
    c.equal("rules.product", p, [&] {
      Morphism lhs = v.d(r + s + 1, a) >> v.delta(r + 1, s + 1, a);
      Morphism left = (v.delta(r + 1, s, a) * id(a)) >> (id(b(r + 1)) * v.d(s, a));
      Morphism right = (v.delta(r, s + 1, a) * id(a)) >> (id(b(r)) * gamma(b(s + 1), a, k)) >> (v.d(r, a) * id(b(s + 1)));
      return Pair{lhs, left + right};
    });
  });
  for_grades(v, {"n", "p"}, opt.max_n, [&](auto idx, Params par) {
    unsigned n = idx[0], p = idx[1];
    c.equal("rules.chain", par, [&] {
      Morphism lhs = v.d(n * p + n + p, a) >> v.m(n + 1, p + 1, a);
      Morphism rhs = (v.delta(n * p + n, p, a) * id(a)) >> (v.m(n, p + 1, a) * v.d(p, a)) >> v.d(n, v.bang(p + 1, a));
      return Pair{lhs, rhs};
    });
  });
  for_grades(v, {"r"}, opt.max_n, [&](auto idx, Params p) {
    unsigned r = idx[0];
    c.equal("rules.symmetry", p, [&] {
      Morphism tail = (v.d(r, a) * id(a)) >> v.d(r + 1, a);
      return Pair{(id(b(r)) * gamma(a, a, k)) >> tail, tail};
    }, v.frag().dn_vanishes(2));
  });
  return c.take();
}

std::vector<CheckResult> check_higher_order(const ModelFragment& frag, const CheckOptions& opt) {
  const auto& k = frag.scalars();
  const Object& a = frag.base();
  const Object ba = Object::bang(a);
  auto id = [&](const Object& o) { return identity(o, k); };
  auto dn = [&](unsigned n) { return frag.dn_inductive(n, a); };
  const unsigned top = std::min(opt.max_order, frag.bound());
  Checker c(frag, "");

  c.zero("higher.constant", {}, [&] { return frag.d(a) >> frag.eps(a); });
  c.zero("higher.linear-2", {}, [&] { return dn(2) >> frag.u(a); });

  for (unsigned n = 0; n <= top; ++n) {
    c.equal("higher.product", {{"n", n}}, [&] {
      std::vector<Morphism> terms;
      for (unsigned kk = 0; kk <= n; ++kk) {
        std::vector<Object> slots{ba, ba};
        slots.insert(slots.end(), n, a);
        Permutation swap = perm_tensor(Permutation::identity(1), perm_tensor(gamma_block(1, kk), Permutation::identity(n - kk)));
        terms.push_back((frag.delta(a) * permute_sum(unsh(n, kk), a, k)) >> permute(swap, slots, k) >>
                        (frag.dn_inductive(kk, a) * frag.dn_inductive(n - kk, a)));
      }
      Morphism lhs = dn(n) >> frag.delta(a);
      return Pair{lhs, sum(terms, lhs.dom(), lhs.cod(), k)};
    }, frag.dn_vanishes(n));
  }
  for (unsigned n = 1; n <= top; ++n) {
    c.equal("higher.product-2", {{"n", n}}, [&] {
      std::vector<Morphism> terms;
      std::vector<Object> slots(n, ba);
      slots.push_back(a);
      for (unsigned i = 1; i <= n; ++i) {
        Permutation move = perm_tensor(Permutation::identity(i), gamma_block(n - i, 1));
        terms.push_back((frag.delta_power(n, a) * id(a)) >> permute(move, slots, k) >>
                        (id(Object::power(ba, i - 1)) * frag.d(a) * id(Object::power(ba, n - i))));
      }
      Morphism lhs = frag.d(a) >> frag.delta_power(n, a);
      return Pair{lhs, sum(terms, lhs.dom(), lhs.cod(), k)};
    });
  }
  for (unsigned n = 0; n <= top; ++n) {
    c.equal("higher.faa-di-bruno", {{"n", n}}, [&] {
      std::vector<Morphism> terms;
      for (const auto& pi : partitions(n)) {
        const std::size_t h = pi.size();
        std::vector<Object> slots(1 + h, ba);
        slots.insert(slots.end(), n, a);
        std::vector<Morphism> parts{frag.m(a)};
        for (std::size_t i = 1; i <= h; ++i) parts.push_back(frag.dn_inductive(pi.block(i).size(), a));
        terms.push_back((frag.delta_power(1 + h, a) * id(Object::power(a, n))) >>
                        permute(perm_tensor(Permutation::identity(1), tau_pi(pi)), slots, k) >> tensor(parts, k) >>
                        frag.dn_inductive(h, ba));
      }
      Morphism lhs = dn(n) >> frag.m(a);
      return Pair{lhs, sum(terms, lhs.dom(), lhs.cod(), k)};
    }, frag.dn_vanishes(n));
  }
  for (unsigned n = 0; n <= top; ++n) {
    auto perms = all_permutations(n);
    for (std::size_t t = 0; t < perms.size(); ++t) {
      c.equal("higher.interchange", {{"n", n}, {"tau", static_cast<long>(t)}}, [&] {
        return Pair{(id(ba) * permute(perms[t], std::vector<Object>(n, a), k)) >> dn(n), dn(n)};
      }, frag.dn_vanishes(n));
    }
  }
  return c.take();
}

std::vector<CheckResult> check_dn_lemmas(const ModelFragment& frag, const CheckOptions& opt) {
  const auto& k = frag.scalars();
  const Object& a = frag.base();
  const Object ba = Object::bang(a);
  auto dn = [&](unsigned n) { return frag.dn_inductive(n, a); };
  const unsigned top = std::min(opt.max_order, frag.bound());
  Checker c(frag, "");
  for (unsigned n = 0; n <= top; ++n)
    c.equal("dn.closed-form", {{"n", n}}, [&] { return Pair{frag.dn(n, a), dn(n)}; }, frag.dn_vanishes(n));
  for (unsigned kk = 0; kk + 1 <= top; ++kk)
    c.equal("dn.reverse-higher", {{"k", kk}}, [&] {
      return Pair{dn(kk + 1), (frag.d(a) * identity(Object::power(a, kk), k)) >> dn(kk)};
    }, frag.dn_vanishes(kk + 1));
  for (unsigned kk = 0; kk <= top; ++kk)
    for (unsigned l = 0; kk + l <= top; ++l)
      c.equal("dn.k-l", {{"k", kk}, {"l", l}}, [&] {
        return Pair{dn(kk + l), (dn(kk) * identity(Object::power(a, l), k)) >> dn(l)};
      }, frag.dn_vanishes(kk + l));
  for (unsigned n = 1; n + 1 <= std::max(top, 2u); ++n)
    c.equal("dn.delta-power", {{"n", n}}, [&] {
      return Pair{frag.delta_power(n + 1, a), frag.delta(a) >> (frag.delta_power(n, a) * identity(ba, k))};
    });
  return c.take();
}

std::vector<CheckResult> check_extraction(const ModelFragment& frag, const CheckOptions& opt) {
  const auto& k = frag.scalars();
  const Object& a = frag.base();
  const unsigned N = opt.max_n;
  auto id = [&](const Object& o) { return identity(o, k); };
  const auto maps = frag.sample_maps(opt.samples, opt.seed);
  Checker c(frag, "extraction.");

  for (unsigned n = 0; n <= N; ++n) {
    c.holds("cokernel.kept", {{"n", n}}, [&] { return frag.kept(n, a).size(); });
    c.zero("cokernel.annihilates", {{"n", n}}, [&] { return frag.dn(n + 1, a) >> frag.s(n, a); });
    c.zero("cokernel.annihilates-tensored", {{"n", n}},
           [&] { return (frag.dn(n + 1, a) * id(a)) >> (frag.s(n, a) * id(a)); });
  }

  std::vector<CheckResult> out = c.take();
  ExtractedView view(frag);
  for (auto part : {check_functor_naturality(view, opt), check_comonad(view, opt), check_comonoid_and_rules(view, opt)})
    out.insert(out.end(), part.begin(), part.end());

  for (unsigned n = 0; n <= N; ++n)
    for (unsigned p = 0; p <= N; ++p) {
      c.equal("s.m", {{"n", n}, {"p", p}},
              [&] { return Pair{frag.m(a) >> frag.s_bullet(n, p, a), frag.s(n * p, a) >> frag.m_le(n, p, a)}; });
      c.equal("s.delta", {{"n", n}, {"p", p}}, [&] {
        return Pair{frag.delta(a) >> (frag.s(n, a) * frag.s(p, a)), frag.s(n + p, a) >> frag.delta_le(n, p, a)};
      });
    }
  c.equal("s.u", {}, [&] { return Pair{frag.s(1, a) >> frag.u_le(a), frag.u(a)}; });
  c.equal("s.eps", {}, [&] { return Pair{frag.s(0, a) >> frag.eps_le(a), frag.eps(a)}; });
  for (unsigned n = 0; n <= N; ++n) {
    c.equal("s.d", {{"n", n}},
            [&] { return Pair{frag.d(a) >> frag.s(n + 1, a), (frag.s(n, a) * id(a)) >> frag.d_le(n, a)}; });
    c.many("s.naturality", {{"n", n}}, [&] {
      std::vector<Pair> eqs;
      for (const auto& f : maps) eqs.emplace_back(frag.bang(f) >> frag.s(n, a), frag.s(n, a) >> frag.bang_leq(n, f));
      return eqs;
    });
  }

  for (unsigned x = 0; x <= N; ++x)
    c.equal("t.identity", {{"n", x}}, [&] { return Pair{frag.t(x, x, a), id(Object::bang_leq(x, a))}; });
  for (unsigned x = 0; x <= N; ++x)
    for (unsigned y = 0; y <= x; ++y)
      for (unsigned z = 0; z <= y; ++z)
        c.equal("t.composition", {{"a", x}, {"b", y}, {"c", z}},
                [&] { return Pair{frag.t(x, y, a) >> frag.t(y, z, a), frag.t(x, z, a)}; });
  for (unsigned p = 0; p <= N; ++p)
    for (unsigned q = 0; q <= N; ++q)
      for (unsigned r = 0; r <= p; ++r)
        for (unsigned s = 0; s <= q; ++s) {
          Params par{{"a", p}, {"b", q}, {"c", r}, {"d", s}};
          c.equal("t.delta", par, [&] {
            return Pair{frag.t(p + q, r + s, a) >> frag.delta_le(r, s, a),
                        frag.delta_le(p, q, a) >> (frag.t(p, r, a) * frag.t(q, s, a))};
          });
          c.equal("t.m", par, [&] {
            Morphism bullet = frag.bang_leq(p, frag.t(q, s, a)) >> frag.t(p, r, Object::bang_leq(s, a));
            return Pair{frag.t(p * q, r * s, a) >> frag.m_le(r, s, a), frag.m_le(p, q, a) >> bullet};
          });
        }
  for (unsigned x = 0; x <= N; ++x)
    for (unsigned y = 0; y <= x; ++y) {
      Params par{{"a", x}, {"b", y}};
      c.equal("t.d", par,
              [&] { return Pair{frag.d_le(x, a) >> frag.t(x + 1, y + 1, a), (frag.t(x, y, a) * id(a)) >> frag.d_le(y, a)}; });
      c.many("t.naturality", par, [&] {
        std::vector<Pair> eqs;
        for (const auto& f : maps) eqs.emplace_back(frag.bang_leq(x, f) >> frag.t(x, y, a), frag.t(x, y, a) >> frag.bang_leq(y, f));
        return eqs;
      });
      c.equal("s-t", {{"n", x}, {"p", y}}, [&] { return Pair{frag.s(x, a) >> frag.t(x, y, a), frag.s(y, a)}; });
    }
  auto rest = c.take();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult* Report::first_failure() const {
  for (const auto& r : checks)
    if (!r.passed) return &r;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"modality", "higher-order", "dn", "extraction"};
  return names;
}

void validate(const RunConfig& config) {
  if (config.model == ModelKind::Poly) {
    if (config.characteristic != 0 && !is_prime(config.characteristic))
      throw UsageError("characteristic must be 0 or a prime, got " + std::to_string(config.characteristic));
  } else if (!config.mutations.empty()) {
    for (const auto& mu : config.mutations)
      if (mu.map != "m" && mu.map != "delta" && mu.map != "d") throw UsageError("unknown mutation target " + mu.map);
  }
  if (config.model == ModelKind::Poly && !config.mutations.empty()) throw UsageError("mutations apply to the rel model only");
  for (const auto& s : config.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("unknown suite " + s);
  if (config.options.samples == 0) throw UsageError("at least one sampled map is required");
}

std::unique_ptr<ModelFragment> make_fragment(const RunConfig& config) {
  validate(config);
  if (config.model == ModelKind::Rel) return std::make_unique<RelFragment>(config.size, config.max_degree, config.mutations);
  return std::make_unique<PolyFragment>(config.size, config.characteristic, config.max_degree);
}

Report run_suite(const RunConfig& config) {
  auto frag = make_fragment(config);
  auto wanted = [&](const std::string& s) { return config.suites.empty() || config.suites.count(s) != 0; };
  Report report{config, {}};
  auto add = [&](std::vector<CheckResult> part) {
    report.checks.insert(report.checks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  };
  const auto& opt = config.options;
  if (wanted("modality")) {
    UngradedView view(*frag);
    add(check_functor_naturality(view, opt));
    add(check_comonad(view, opt));
    add(check_comonoid_and_rules(view, opt));
  }
  if (wanted("higher-order")) add(check_higher_order(*frag, opt));
  if (wanted("dn")) add(check_dn_lemmas(*frag, opt));
  if (wanted("extraction")) add(check_extraction(*frag, opt));
  return report;
}

}  // namespace dmod
