#include "rsol/iwasawa.hpp"

#include <stdexcept>

namespace rsol {

std::optional<std::size_t> RootDatum::find(const Vector& covector) const {
  for (std::size_t r = 0; r < covectors.size(); ++r)
    if (covectors[r] == covector) return r;
  return std::nullopt;
}

std::optional<std::size_t> RootDatum::sum(std::size_t l, std::size_t m) const {
  return find(add(covectors[l], covectors[m]));
}

std::optional<std::size_t> RootDatum::difference(std::size_t l, std::size_t m) const {
  return find(rsol::sub(covectors[l], covectors[m]));
}

Matrix IwasawaAlgebra::to_matrix(std::span<const Rational> x) const {
  Matrix out(n, n);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) out += realization[k] * x[k];
  return out;
}

Vector IwasawaAlgebra::project(const Matrix& x) const {
  Vector c(base.dim());
  for (std::size_t k = 0; k < rank(); ++k) c[k] = b_theta(x, realization[k]) / b_theta(realization[k], realization[k]);
  for (std::size_t r = 0; r < datum.roots.size(); ++r) {
    auto [i, j] = datum.roots[r];
    c[datum.root_space[r]] = x(i, j);
  }
  return c;
}

Vector IwasawaAlgebra::from_matrix(const Matrix& x) const {
  Vector c = project(x);
  if (to_matrix(c) != x) throw std::invalid_argument("matrix is not in 𝔞 ⊕ 𝔫");
  return c;
}

Matrix IwasawaAlgebra::theta(const Matrix& x) { return x.transpose() * Rational(-1); }

Rational IwasawaAlgebra::form(const Matrix& x, const Matrix& y) const { return form_scale * (x * y).trace(); }

Rational IwasawaAlgebra::b_theta(const Matrix& x, const Matrix& y) const { return -form(theta(x), y); }

Vector IwasawaAlgebra::h_root(std::size_t root) const {
  Vector v(base.dim());
  for (std::size_t k = 0; k < rank(); ++k) v[k] = datum.h_of[root][k];
  return v;
}

Vector IwasawaAlgebra::x_root(std::size_t root) const { return basis_vector(base.dim(), datum.root_space[root]); }

Rational IwasawaAlgebra::root_norm2(std::size_t root) const {
  Matrix h = to_matrix(h_root(root));
  return form(h, h);
}

std::vector<Vector> IwasawaAlgebra::a_basis() const {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < rank(); ++k) out.push_back(basis_vector(base.dim(), k));
  return out;
}

namespace {

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix simple_coroot(std::size_t n, std::size_t i) {
  Matrix h(n, n);
  h(i, i) = ratio(1, 2);
  h(i + 1, i + 1) = ratio(-1, 2);
  return h;
}

}  // namespace

IwasawaAlgebra build_sl(std::size_t n) {
  if (n < 2) throw std::invalid_argument("SL(n) needs n ≥ 2");
  const Rational form_scale = 2;
  std::size_t rank = n - 1;
  auto bt = [&](const Matrix& x, const Matrix& y) -> Rational { return form_scale * (x.transpose() * y).trace(); };

  std::vector<Matrix> a;
  for (std::size_t i = 0; i < rank; ++i) {
    Matrix h = simple_coroot(n, i);
    for (const auto& prev : a) h -= prev * (bt(h, prev) / bt(prev, prev));
    a.push_back(h);
  }
  std::vector<Matrix> realization = a;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < rank; ++k) labels.push_back("h" + std::to_string(k + 1));

  RootDatum d;
  d.rank = rank;
  std::vector<Matrix> coroots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t r = d.roots.size();
      d.roots.emplace_back(i, j);
      Vector cov;
      for (const auto& h : a) cov.push_back(h(i, i) - h(j, j));
      d.covectors.push_back(cov);
      if (j == i + 1) d.simple.push_back(r);
      d.root_space.push_back(rank + r);
      realization.push_back(unit_matrix(n, i, j));
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      Matrix h(n, n);
      h(i, i) = ratio(1, 2);
      h(j, j) = ratio(-1, 2);
      coroots.push_back(h);
    }
  std::size_t dim = realization.size(), nr = d.roots.size();

  Matrix gram(dim, dim);
  for (std::size_t k = 0; k < rank; ++k) gram(k, k) = bt(a[k], a[k]);
  for (std::size_t k = rank; k < dim; ++k) gram(k, k) = bt(realization[k], realization[k]) / 2;

  auto coords = [&](const Matrix& x) {
    Vector c(dim);
    for (std::size_t k = 0; k < rank; ++k) c[k] = bt(x, a[k]) / bt(a[k], a[k]);
    for (std::size_t r = 0; r < nr; ++r) c[rank + r] = x(d.roots[r].first, d.roots[r].second);
    return c;
  };
  for (const auto& h : coroots) {
    Vector c = coords(h);
    d.h_of.emplace_back(c.begin(), c.begin() + static_cast<long>(rank));
  }
  d.cartan.assign(nr, std::vector<long>(nr));
  for (std::size_t al = 0; al < nr; ++al)
    for (std::size_t l = 0; l < nr; ++l) {
      Rational v = 2 * (coroots[al] * coroots[l]).trace() / (coroots[al] * coroots[al]).trace();
      if (v.get_den() != 1) throw std::logic_error("non-integral Cartan integer");
      d.cartan[al][l] = v.get_num().get_si();
    }

  std::vector<BracketTriple> triples;
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = p + 1; q < dim; ++q) {
      Matrix br = commutator(realization[p], realization[q]);
      Vector c = coords(br);
      Matrix back(n, n);
      for (std::size_t k = 0; k < dim; ++k)
        if (c[k] != 0) back += realization[k] * c[k];
      if (back != br) throw std::logic_error("bracket leaves 𝔞 ⊕ 𝔫");
      for (std::size_t k = 0; k < dim; ++k)
        if (c[k] != 0) triples.push_back({p, q, k, c[k]});
    }
  return IwasawaAlgebra{n,
                        MetricLieAlgebra(dim, triples, gram, labels),
                        std::move(d),
                        std::move(realization),
                        Rational(static_cast<long>(2 * n)),
                        form_scale,
                        "SL(" + std::to_string(n) + ")"};
}

std::optional<std::string> check_root_datum(const IwasawaAlgebra& g) {
  const RootDatum& d = g.datum;
  for (std::size_t r = 0; r < d.roots.size(); ++r) {
    Matrix hl = g.to_matrix(g.h_root(r));
    for (std::size_t k = 0; k < g.rank(); ++k)
      if (g.form(hl, g.realization[k]) != d.covectors[r][k]) return "B(H_λ, H) ≠ λ(H) for root " + std::to_string(r);
    Matrix x = g.realization[d.root_space[r]];
    for (std::size_t k = 0; k < g.rank(); ++k)
      if (commutator(g.realization[k], x) != x * d.covectors[r][k]) return "root vector is not an eigenvector";
    for (std::size_t l = 0; l < d.roots.size(); ++l) {
      Matrix hm = g.to_matrix(g.h_root(l));
      Rational a = 2 * g.form(hl, hm) / g.form(hl, hl);
      if (a.get_den() != 1 || a != d.cartan[r][l]) return "Cartan integer mismatch";
      Vector br = g.base.bracket(g.x_root(r), g.x_root(l));
      auto s = d.sum(r, l);
      Vector allowed = s ? g.x_root(*s) : zero_vector(g.base.dim());
      if (!in_span(span_basis({allowed}, g.base.dim()), br)) return "[𝔤_λ, 𝔤_μ] ⊄ 𝔤_{λ+μ}";
    }
  }
  return std::nullopt;
}

bool metric_relation_holds(const IwasawaAlgebra& g) {
  std::size_t dim = g.base.dim();
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      Vector ep = basis_vector(dim, p), eq = basis_vector(dim, q);
      Vector pa(dim), qa(dim), pn(dim), qn(dim);
      (p < g.rank() ? pa : pn)[p] = 1;
      (q < g.rank() ? qa : qn)[q] = 1;
      Rational expect = g.b_theta(g.to_matrix(pa), g.to_matrix(qa)) + g.b_theta(g.to_matrix(pn), g.to_matrix(qn)) / 2;
      if (g.base.inner(ep, eq) != expect) return false;
    }
  return true;
}

bool subalgebra_normal_check(const IwasawaAlgebra& g, std::span<const Rational> xi) {
  if (is_zero(xi)) throw std::invalid_argument("normal must be nonzero");
  return orthogonal_complement_closes(g.base, xi);
}

bool normal_has_root_form(const IwasawaAlgebra& g, std::span<const Rational> xi) {
  bool in_a = true;
  for (std::size_t k = g.rank(); k < xi.size(); ++k) in_a = in_a && xi[k] == 0;
  if (in_a) return true;
  for (std::size_t al : g.datum.simple)
    if (in_span(span_basis({g.h_root(al), g.x_root(al)}, g.base.dim()), xi)) return true;
  return false;
}

Vector normal_vector(const IwasawaAlgebra& g, const RootNormal& r) {
  bool simple = false;
  for (std::size_t s : g.datum.simple) simple = simple || s == r.alpha;
  if (!simple) throw std::invalid_argument("α must be a simple root");
  if (r.a * r.a * g.root_norm2(r.alpha) + r.b * r.b != 1) throw std::invalid_argument("a²|α|² + b² must equal 1");
  Vector xi = scaled(r.a, g.h_root(r.alpha));
  axpy(r.b, g.x_root(r.alpha), xi);
  return xi;
}

RootNormal conic_normal(const IwasawaAlgebra& g, std::size_t alpha, const Rational& t) {
  if (g.root_norm2(alpha) != 1) throw std::invalid_argument("conic parametrization needs |α| = 1");
  Rational d = 1 + t * t;
  return {2 * t / d, (1 - t * t) / d, alpha};
}

namespace {

// |α| for the A_{n−1} datum with the chosen form.
Rational root_length(const IwasawaAlgebra& g, std::size_t alpha) {
  Rational n2 = g.root_norm2(alpha);
  if (!is_rational_square(n2)) throw std::invalid_argument("|α| is irrational");
  return rational_sqrt(n2);
}

}  // namespace

Vector companion_u(const IwasawaAlgebra& g, const RootNormal& r) {
  Rational len = root_length(g, r.alpha);
  Vector u = scaled(r.b / len, g.h_root(r.alpha));
  axpy(-r.a * len, g.x_root(r.alpha), u);
  return u;
}

Vector koszul_via_bt(const IwasawaAlgebra& g, std::span<const Rational> x, std::span<const Rational> y) {
  Matrix mx = g.to_matrix(x), my = g.to_matrix(y);
  Matrix m = commutator(mx, my) + commutator(IwasawaAlgebra::theta(mx), my) - commutator(mx, IwasawaAlgebra::theta(my));
  Vector w(g.base.dim());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = g.b_theta(m, g.realization[k]) / 4;
  return g.base.gram_inverse().apply(w);
}

Vector nabla_xi_xi_closed_form(const IwasawaAlgebra& g, const RootNormal& r) {
  Vector v = scaled(r.b * r.b, g.h_root(r.alpha));
  axpy(-r.a * r.b * g.root_norm2(r.alpha), g.x_root(r.alpha), v);
  return v;
}

Vector closed_form_shape(const IwasawaAlgebra& g, const RootNormal& r, std::size_t lambda,
                         std::span<const Rational> y) {
  if (lambda == r.alpha) throw std::invalid_argument("λ must differ from α");
  Matrix my = g.to_matrix(y), xa = g.to_matrix(g.x_root(r.alpha));
  Rational diag = r.a / 2 * g.root_norm2(r.alpha) * g.datum.cartan[r.alpha][lambda];
  Matrix s = my * diag - commutator(my, xa) * (r.b / 2) + commutator(my, IwasawaAlgebra::theta(xa)) * (r.b / 2);
  return g.from_matrix(s);
}

ShapeChain shape_chain(const IwasawaAlgebra& g, const RootNormal& r, std::size_t lambda) {
  const RootDatum& d = g.datum;
  if (lambda == r.alpha || !d.sum(lambda, r.alpha) || d.difference(lambda, r.alpha))
    throw std::invalid_argument("λ + α must be a root and λ − α must not");
  long a_al = d.cartan[r.alpha][lambda];
  Rational ma = -Rational(a_al);
  if (!is_rational_square(ma)) throw std::invalid_argument("√(−A_{α,λ}) is irrational");
  ShapeChain c;
  c.mu = root_length(g, r.alpha) * rational_sqrt(ma);
  c.y = g.x_root(lambda);
  c.y_next = scaled(1 / c.mu, g.base.bracket(c.y, g.x_root(r.alpha)));
  c.y_next2 = scaled(-r.b / 2, g.base.bracket(c.y_next, g.x_root(r.alpha)));
  Rational n2 = g.root_norm2(r.alpha);
  c.shape_y = scaled(r.a / 2 * n2 * a_al, c.y);
  axpy(-r.b / 2 * c.mu, c.y_next, c.shape_y);
  c.shape_y_next = scaled(r.a / 2 * n2 * d.cartan[r.alpha][*d.sum(lambda, r.alpha)], c.y_next);
  c.shape_y_next = add(c.shape_y_next, c.y_next2);
  axpy(-r.b / 2 * c.mu, c.y, c.shape_y_next);
  return c;
}

Rational closed_form_trace(const IwasawaAlgebra& g, const RootNormal& r) {
  Rational s = 0;
  for (std::size_t l = 0; l < g.datum.roots.size(); ++l)
    if (l != r.alpha) s += g.datum.cartan[r.alpha][l];
  return r.a * g.root_norm2(r.alpha) * (1 + s / 2);
}

std::vector<std::pair<Vector, Vector>> closed_form_d_blocks(const IwasawaAlgebra& g, const RootNormal& r,
                                                            const Rational& c) {
  std::vector<std::pair<Vector, Vector>> out;
  Rational tr = closed_form_trace(g, r);
  Vector ha = g.h_root(r.alpha);
  Matrix hrow(1, g.rank());
  Vector gha = g.base.gram().apply(ha);
  for (std::size_t k = 0; k < g.rank(); ++k) hrow(0, k) = gha[k];
  for (const auto& h : nullspace(hrow)) {
    Vector v(g.base.dim());
    std::copy(h.begin(), h.end(), v.begin());
    out.emplace_back(v, scaled(c, v));
  }
  bool found = false;
  for (std::size_t l = 0; l < g.datum.roots.size(); ++l) {
    if (l == r.alpha || !g.datum.sum(l, r.alpha) || g.datum.difference(l, r.alpha)) continue;
    found = true;
    ShapeChain ch = shape_chain(g, r, l);
    Vector dy = scaled(tr, ch.shape_y);
    axpy(c, ch.y, dy);
    Vector dn = scaled(tr, ch.shape_y_next);
    axpy(c, ch.y_next, dn);
    out.emplace_back(ch.y, dy);
    out.emplace_back(ch.y_next, dn);
  }
  if (!found && g.rank() >= 2) throw std::logic_error("no root β with β + α a root and β − α not a root");
  Rational n2 = g.root_norm2(r.alpha);
  Vector u = companion_u(g, r);
  out.emplace_back(u, scaled(tr * r.a * n2 + r.b * r.b * n2 + c, u));
  return out;
}

Vector unit_in_a(const IwasawaAlgebra& g, std::uint64_t seed) {
  auto basis = g.a_basis();
  auto p0 = find_rational_unit(g.base.gram(), basis);
  if (!p0) throw std::logic_error("no rational unit vector in 𝔞");
  if (seed == 0) return *p0;
  Sampler rng(seed);
  return sample_unit_in_span(g.base.gram(), basis, *p0, rng);
}

Matrix horosphere_certificate(const IwasawaAlgebra& g, std::span<const Rational> h, const Subalgebra& s) {
  Matrix ad = g.base.ad(h);
  return s.projection * ad * s.inclusion * ad.trace();
}

MetricLieAlgebra build_real_hyperbolic(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ℝH^n needs n ≥ 2");
  std::vector<BracketTriple> triples;
  std::vector<std::string> labels{"B"};
  for (std::size_t i = 1; i < n; ++i) {
    triples.push_back({0, i, i, 1});
    labels.push_back("x" + std::to_string(i));
  }
  return MetricLieAlgebra(n, triples, Matrix::identity(n), labels);
}

}  // namespace rsol
