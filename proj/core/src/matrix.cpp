#include "dmod/matrix.hpp"

#include <sstream>

namespace dmod {

OrderedBasis::OrderedBasis(std::vector<Element> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!index_.emplace(elements_[i], i).second)
      throw DomainError("basis: duplicate label " + elements_[i].to_string());
}

std::optional<std::size_t> OrderedBasis::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

OrderedBasis tensor_basis(const OrderedBasis& a, const OrderedBasis& b) {
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(join(x, y));
  return OrderedBasis(std::move(out));
}

GradedMatrix::GradedMatrix(OrderedBasis dom, OrderedBasis cod, ScalarDomain scalars)
    : dom_(std::make_shared<const OrderedBasis>(std::move(dom))),
      cod_(std::make_shared<const OrderedBasis>(std::move(cod))),
      scalars_(scalars),
      entries_(dom_->size() * cod_->size(), Scalar(0)) {}

Scalar GradedMatrix::entry(const Element& cod_elem, const Element& dom_elem) const {
  auto r = cod_->index_of(cod_elem);
  auto c = dom_->index_of(dom_elem);
  if (!r || !c) throw DomainError("matrix entry: label outside the bases");
  return at(*r, *c);
}

void GradedMatrix::set(const Element& cod_elem, const Element& dom_elem, const Scalar& v) {
  auto r = cod_->index_of(cod_elem);
  auto c = dom_->index_of(dom_elem);
  if (!r) throw DomainError("matrix entry: " + cod_elem.to_string() + " is not in the codomain basis");
  if (!c) throw DomainError("matrix entry: " + dom_elem.to_string() + " is not in the domain basis");
  set(*r, *c, v);
}

bool GradedMatrix::is_zero() const {
  for (const auto& v : entries_)
    if (!ScalarDomain::is_zero(v)) return false;
  return true;
}

bool GradedMatrix::degree_preserving() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (!ScalarDomain::is_zero(at(r, c)) && cod_->degree(r) != dom_->degree(c)) return false;
  return true;
}

std::string GradedMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows(); ++r) {
    os << (*cod_)[r].to_string() << " <-";
    for (std::size_t c = 0; c < cols(); ++c)
      if (!ScalarDomain::is_zero(at(r, c))) os << ' ' << scalars_.format(at(r, c)) << '*' << (*dom_)[c].to_string();
    os << '\n';
  }
  return os.str();
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.scalars_ == b.scalars_ && *a.dom_ == *b.dom_ && *a.cod_ == *b.cod_ && a.entries_ == b.entries_;
}

GradedMatrix mat_zero(const OrderedBasis& dom, const OrderedBasis& cod, const ScalarDomain& k) {
  return GradedMatrix(dom, cod, k);
}

GradedMatrix mat_identity(const OrderedBasis& b, const ScalarDomain& k) {
  GradedMatrix out(b, b, k);
  for (std::size_t i = 0; i < b.size(); ++i) out.set(i, i, k.one());
  return out;
}

GradedMatrix mat_compose(const GradedMatrix& f, const GradedMatrix& g) {
  if (!(f.codomain() == g.domain())) throw DomainError("mat_compose: codomain of f differs from domain of g");
  if (!(f.scalars() == g.scalars())) throw DomainError("mat_compose: scalar domain mismatch");
  const auto& k = f.scalars();
  GradedMatrix out(f.domain(), g.codomain(), k);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t m = 0; m < g.cols(); ++m) {
      const Scalar& gv = g.at(r, m);
      if (ScalarDomain::is_zero(gv)) continue;
      for (std::size_t c = 0; c < f.cols(); ++c) {
        const Scalar& fv = f.at(m, c);
        if (ScalarDomain::is_zero(fv)) continue;
        out.set(r, c, k.add(out.at(r, c), k.mul(gv, fv)));
      }
    }
  return out;
}

GradedMatrix mat_add(const GradedMatrix& f, const GradedMatrix& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw DomainError("mat_add: basis mismatch");
  if (!(f.scalars() == g.scalars())) throw DomainError("mat_add: scalar domain mismatch");
  GradedMatrix out = f;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) out.set(r, c, f.scalars().add(f.at(r, c), g.at(r, c)));
  return out;
}

GradedMatrix mat_kron(const GradedMatrix& f, const GradedMatrix& g) {
  if (!(f.scalars() == g.scalars())) throw DomainError("mat_kron: scalar domain mismatch");
  const auto& k = f.scalars();
  GradedMatrix out(tensor_basis(f.domain(), g.domain()), tensor_basis(f.codomain(), g.codomain()), k);
  for (std::size_t r1 = 0; r1 < f.rows(); ++r1)
    for (std::size_t c1 = 0; c1 < f.cols(); ++c1) {
      if (ScalarDomain::is_zero(f.at(r1, c1))) continue;
      for (std::size_t r2 = 0; r2 < g.rows(); ++r2)
        for (std::size_t c2 = 0; c2 < g.cols(); ++c2)
          if (!ScalarDomain::is_zero(g.at(r2, c2)))
            out.set(r1 * g.rows() + r2, c1 * g.cols() + c2, k.mul(f.at(r1, c1), g.at(r2, c2)));
    }
  return out;
}

GradedMatrix mat_transpose(const GradedMatrix& f) {
  GradedMatrix out(f.codomain(), f.domain(), f.scalars());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) out.set(c, r, f.at(r, c));
  return out;
}

GradedMatrix perm_matrix(const PositionMap& pm, const std::vector<OrderedBasis>& factors, const ScalarDomain& k) {
  if (pm.arity() != factors.size()) throw DomainError("perm_matrix: arity mismatch");
  const std::size_t n = factors.size();
  OrderedBasis dom = OrderedBasis::unit();
  for (const auto& f : factors) dom = tensor_basis(dom, f);
  OrderedBasis cod = OrderedBasis::unit();
  for (std::uint32_t j = 1; j <= n; ++j) cod = tensor_basis(cod, factors[pm.source(j) - 1]);
  GradedMatrix out(dom, cod, k);
  for (const auto& x : dom) {
    auto parts = components(x, n);
    auto moved = pm.apply(parts);
    out.set(Element::tuple(std::move(moved)), x, k.one());
  }
  return out;
}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

// In-place reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> rref(Dense& a, std::size_t ncols, const ScalarDomain& k) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && ScalarDomain::is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Scalar inv = k.inv(a[row][c]);
    for (auto& v : a[row]) v = k.mul(v, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || ScalarDomain::is_zero(a[r][c])) continue;
      Scalar factor = a[r][c];
      for (std::size_t j = 0; j < a[r].size(); ++j)
        if (!ScalarDomain::is_zero(a[row][j])) a[r][j] = k.sub(a[r][j], k.mul(factor, a[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Dense to_dense(const GradedMatrix& f) {
  Dense a(f.rows(), std::vector<Scalar>(f.cols()));
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) a[r][c] = f.at(r, c);
  return a;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(const GradedMatrix& f) {
  const auto& k = f.scalars();
  if (!k.is_field()) throw UnsupportedDomainError("kernel_basis: requires a field");
  Dense a = to_dense(f);
  auto pivots = rref(a, f.cols(), k);
  std::vector<bool> is_pivot(f.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(f.cols(), k.zero());
    v[j] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(a[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const GradedMatrix& f) {
  if (!f.scalars().is_field()) throw UnsupportedDomainError("rank: requires a field");
  Dense a = to_dense(f);
  return rref(a, f.cols(), f.scalars()).size();
}

Cokernel bool_cokernel(const GradedMatrix& f) {
  const auto& k = f.scalars();
  if (!k.is_boolean()) throw UnsupportedDomainError("bool_cokernel: requires the Boolean semiring");
  std::vector<Element> kept;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    bool hit = false;
    for (std::size_t c = 0; c < f.cols() && !hit; ++c) hit = !ScalarDomain::is_zero(f.at(r, c));
    if (!hit) kept.push_back(f.codomain()[r]);
  }
  OrderedBasis kb(std::move(kept));
  GradedMatrix sel(f.codomain(), kb, k);
  for (const auto& e : kb) sel.set(e, e, k.one());
  return {std::move(sel), std::move(kb)};
}

GradedMatrix factor_through(const GradedMatrix& s, const GradedMatrix& f) {
  if (!(s.domain() == f.domain())) throw DomainError("factor_through: s and f must share their domain");
  if (!(s.scalars() == f.scalars())) throw DomainError("factor_through: scalar domain mismatch");
  const auto& k = s.scalars();
  GradedMatrix g(s.codomain(), f.codomain(), k);

  if (k.is_boolean()) {
    // Uniqueness: each target label owns a column of s hitting only it.
    for (std::size_t q = 0; q < s.rows(); ++q) {
      bool owned = false;
      for (std::size_t x = 0; x < s.cols() && !owned; ++x) {
        if (ScalarDomain::is_zero(s.at(q, x))) continue;
        owned = true;
        for (std::size_t q2 = 0; q2 < s.rows() && owned; ++q2)
          if (q2 != q && !ScalarDomain::is_zero(s.at(q2, x))) owned = false;
      }
      if (!owned) throw FactorizationError("factor_through: solution not unique", s.codomain()[q].to_string());
    }
    // Greatest solution by residuation, then verify.
    for (std::size_t y = 0; y < f.rows(); ++y)
      for (std::size_t q = 0; q < s.rows(); ++q) {
        bool ok = true;
        for (std::size_t x = 0; x < s.cols() && ok; ++x)
          if (!ScalarDomain::is_zero(s.at(q, x)) && ScalarDomain::is_zero(f.at(y, x))) ok = false;
        if (ok) g.set(y, q, k.one());
      }
    auto check = mat_compose(s, g);
    for (std::size_t y = 0; y < f.rows(); ++y)
      for (std::size_t x = 0; x < f.cols(); ++x)
        if (check.at(y, x) != f.at(y, x))
          throw FactorizationError("factor_through: f does not factor through s", f.domain()[x].to_string());
    return g;
  }

  // G·S = F  <=>  Sᵀ·Gᵀ = Fᵀ; eliminate on [Sᵀ | Fᵀ].
  const std::size_t nq = s.rows(), nx = s.cols(), ny = f.rows();
  Dense a(nx, std::vector<Scalar>(nq + ny));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t q = 0; q < nq; ++q) a[x][q] = s.at(q, x);
    for (std::size_t y = 0; y < ny; ++y) a[x][nq + y] = f.at(y, x);
  }
  auto pivots = rref(a, nq, k);
  if (pivots.size() < nq) {
    std::vector<bool> is_pivot(nq, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t q = 0;
    while (is_pivot[q]) ++q;
    throw FactorizationError("factor_through: solution not unique", s.codomain()[q].to_string());
  }
  for (std::size_t x = nq; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (!ScalarDomain::is_zero(a[x][nq + y]))
        throw FactorizationError("factor_through: f does not factor through s", f.codomain()[y].to_string());
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t y = 0; y < ny; ++y) g.set(y, pivots[i], a[i][nq + y]);
  return g;
}

}  // namespace dmod
