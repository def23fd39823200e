#include "rsol/damek_ricci.hpp"

#include <stdexcept>

namespace rsol {

Vector DamekRicciAlgebra::compose(const Rational& a, std::span<const Rational> u, std::span<const Rational> z) const {
  if (u.size() != n() || z.size() != m()) throw std::invalid_argument("component has wrong length");
  Vector x(1 + n() + m());
  x[a_index] = a;
  std::copy(u.begin(), u.end(), x.begin() + 1);
  std::copy(z.begin(), z.end(), x.begin() + 1 + static_cast<long>(n()));
  return x;
}

Vector DamekRicciAlgebra::compose(const Rational& a, std::span<const Rational> u) const {
  return compose(a, u, zero_vector(m()));
}

Rational DamekRicciAlgebra::einstein_constant() const {
  return -(Rational(static_cast<long>(m())) + ratio(static_cast<long>(n()), 4));
}

DamekRicciAlgebra extend(const HTypeAlgebra& h) {
  std::size_t n = h.n(), m = h.m(), dim = 1 + n + m;
  std::vector<BracketTriple> triples;
  for (std::size_t u = 0; u < n; ++u) triples.push_back({0, 1 + u, 1 + u, ratio(1, 2)});
  for (std::size_t k = 0; k < m; ++k) triples.push_back({0, 1 + n + k, 1 + n + k, 1});
  for (const auto& t : h.base.triples()) triples.push_back({t.i + 1, t.j + 1, t.k + 1, t.value});
  std::vector<std::string> labels{"B"};
  labels.insert(labels.end(), h.base.labels().begin(), h.base.labels().end());
  return DamekRicciAlgebra{MetricLieAlgebra(dim, triples, Matrix::identity(dim), labels), h, 0, "A" + h.name};
}

bool admissible_normal(const DamekRicciAlgebra& d, std::span<const Rational> xi) {
  return orthogonal_complement_closes(d.base, xi);
}

bool has_center_component(const DamekRicciAlgebra& d, std::span<const Rational> xi) {
  for (std::size_t k = 0; k < d.m(); ++k)
    if (xi[1 + d.n() + k] != 0) return true;
  return false;
}

DamekRicciClosedForm closed_form_hypersurface(const DamekRicciAlgebra& d, const Rational& a,
                                              std::span<const Rational> u, const Subalgebra& s) {
  std::size_t n = d.n(), m = d.m();
  Rational u2 = dot(u, u);
  if (a * a + u2 != 1) throw std::invalid_argument("a² + |U|² must equal 1");
  Rational mt = d.einstein_constant(), nt = Rational(static_cast<long>(m)) + ratio(static_cast<long>(n), 2);
  Rational a2 = a * a;
  Rational ric_v = (u2 + 4 * mt + 2 * a2 * nt) / 4;
  Rational ric_j = (3 * u2 + 4 * mt + 2 * a2 * nt) / 4;

  auto zvec = [&](std::size_t k) { return d.compose(0, zero_vector(n), basis_vector(m, k)); };
  std::vector<Vector> frame, shape, jacobi, ricci;
  auto push = [&](const Vector& f, Vector sv, Vector jv, Vector rv) {
    frame.push_back(f);
    shape.push_back(std::move(sv));
    jacobi.push_back(std::move(jv));
    ricci.push_back(std::move(rv));
  };
  // Vectors V of the first two blocks.
  auto push_v = [&](const Vector& v) { push(v, scaled(a / 2, v), scaled(ratio(-1, 4), v), scaled(ric_v, v)); };

  if (u2 == 0) {
    for (std::size_t i = 0; i < n; ++i) push_v(d.compose(0, basis_vector(n, i)));
  } else {
    Vector w = d.compose(u2, scaled(-a, u));
    push_v(w);
    std::vector<Vector> rows{Vector(u.begin(), u.end())};
    for (std::size_t k = 0; k < m; ++k) rows.push_back(d.htype.module.generators[k].apply(u));
    for (const auto& v : nullspace(Matrix::from_rows(rows, n))) push_v(d.compose(0, v));
    for (std::size_t k = 0; k < m; ++k) {
      Vector ju = d.compose(0, rows[k + 1]), z = zvec(k);
      Vector sv = scaled(a / 2, ju);
      axpy(u2 / 2, z, sv);
      Vector jv = scaled(-(3 * u2 + 1) / 4, ju);
      axpy(ratio(-3, 4) * a * u2, z, jv);
      Vector rv = scaled(ric_j, ju);
      axpy(nt / 2 * a * u2, z, rv);
      push(ju, sv, jv, rv);
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    Vector z = zvec(k);
    Vector ju = u2 == 0 ? zero_vector(d.base.dim()) : d.compose(0, d.htype.module.generators[k].apply(u));
    Vector sv = scaled(ratio(1, 2), ju);
    axpy(a, z, sv);
    Vector jv = scaled(ratio(-3, 4) * a, ju);
    axpy(ratio(3, 4) * u2 - 1, z, jv);
    Vector rv = scaled(nt / 2 * a, ju);
    axpy(mt + a2 * nt, z, rv);
    push(z, sv, jv, rv);
  }
  return {operator_on_sub(s, frame, shape), a * nt, operator_on_sub(s, frame, jacobi),
          operator_on_sub(s, frame, ricci)};
}

Rational vertical_soliton_constant(const DamekRicciAlgebra& d) { return (1 + 4 * d.einstein_constant()) / 4; }

std::pair<Rational, Vector> mixed_normal(const DamekRicciAlgebra& d, std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    Vector p = unit_sphere_rational_sample(d.n() + 1, s);
    // Negating the last coordinate puts the projection pole at a = 1.
    Rational a = -p.back();
    p.pop_back();
    if (a != 0 && !is_zero(p)) return {a, p};
  }
}

}  // namespace rsol
