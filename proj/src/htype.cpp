#include "rsol/htype.hpp"

#include <stdexcept>

namespace rsol {

Vector HTypeAlgebra::from_v(std::span<const Rational> u) const {
  if (u.size() != n()) throw std::invalid_argument("expected a vector of 𝔳");
  Vector x(n() + m());
  std::copy(u.begin(), u.end(), x.begin());
  return x;
}

Vector HTypeAlgebra::from_z(std::span<const Rational> z) const {
  if (z.size() != m()) throw std::invalid_argument("expected a vector of 𝔷");
  Vector x(n() + m());
  std::copy(z.begin(), z.end(), x.begin() + static_cast<long>(n()));
  return x;
}

HTypeAlgebra build_htype(const CliffordModule& c) {
  std::size_t n = c.n, m = c.m;
  std::vector<BracketTriple> triples;
  // [U_u, U_v] = Σ_k ⟨J_k U_u, U_v⟩ Z_k
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t k = 0; k < m; ++k)
        if (c.generators[k](v, u) != 0) triples.push_back({u, v, n + k, c.generators[k](v, u)});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (std::size_t k = 0; k < m; ++k) labels.push_back("z" + std::to_string(k));
  std::string name = "N(" + std::to_string(m) + ",";
  name += c.parity ? std::to_string(c.parity->first) + "," + std::to_string(c.parity->second) : std::to_string(c.k);
  name += ")";
  return HTypeAlgebra{MetricLieAlgebra(n + m, triples, Matrix::identity(n + m), labels), c, name};
}

XiFrame xi_frame(const HTypeAlgebra& h, std::span<const Rational> xi) {
  std::size_t n = h.n(), m = h.m();
  if (xi.size() != n + m) throw std::invalid_argument("normal has wrong length");
  for (std::size_t k = 0; k < m; ++k)
    if (xi[n + k] != 0) throw std::invalid_argument("normal is not in 𝔳");
  if (dot(xi, xi) != 1) throw std::invalid_argument("normal is not a unit vector");
  XiFrame f;
  f.xi.assign(xi.begin(), xi.end());
  Vector u(xi.begin(), xi.begin() + static_cast<long>(n));
  std::vector<Vector> rows{u};
  for (std::size_t k = 0; k < m; ++k) {
    Vector j = h.module.generators[k].apply(u);
    rows.push_back(j);
    f.j_xi_basis.push_back(h.from_v(j));
  }
  std::vector<Vector> ortho;
  for (auto v : nullspace(Matrix::from_rows(rows, n))) {
    for (const auto& w : ortho) axpy(-dot(v, w) / dot(w, w), w, v);
    ortho.push_back(v);
  }
  for (const auto& v : ortho) f.perp_basis.push_back(h.from_v(v));
  return f;
}

namespace {

bool brackets_vanish(const MetricLieAlgebra& l, const std::vector<Vector>& a, const std::vector<Vector>& b,
                     bool same) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Matrix ad = l.ad(a[i]);
    for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j)
      if (!is_zero(ad.apply(b[j]))) return false;
  }
  return true;
}

}  // namespace

HTypePredicates predicates(const HTypeAlgebra& h, const XiFrame& f) {
  return {brackets_vanish(h.base, f.j_xi_basis, f.j_xi_basis, true),
          brackets_vanish(h.base, f.perp_basis, f.perp_basis, true),
          brackets_vanish(h.base, f.j_xi_basis, f.perp_basis, false)};
}

Matrix htype_closed_form_ricci(const HTypeAlgebra& h) {
  Vector d(h.n() + h.m());
  for (std::size_t i = 0; i < h.n(); ++i) d[i] = Rational(-static_cast<long>(h.m()), 2);
  for (std::size_t k = 0; k < h.m(); ++k) d[h.n() + k] = Rational(static_cast<long>(h.n()), 4);
  for (auto& x : d) x.canonicalize();
  return Matrix::diagonal(d);
}

Matrix nilsoliton_derivation(const HTypeAlgebra& h) {
  Vector d(h.n() + h.m(), Rational(1));
  for (std::size_t k = 0; k < h.m(); ++k) d[h.n() + k] = 2;
  return Matrix::diagonal(d);
}

Matrix hypersurface_ricci_closed_form(const HTypeAlgebra& h, const XiFrame& f, const Subalgebra& s) {
  long n = static_cast<long>(h.n()), m = static_cast<long>(h.m());
  std::vector<Vector> z;
  for (std::size_t k = 0; k < h.m(); ++k) z.push_back(h.from_z(basis_vector(h.m(), k)));
  return operator_from_blocks(s, {f.perp_basis, f.j_xi_basis, z},
                              {ratio(-m, 2), ratio(1 - m, 2), ratio(n - 2, 4)});
}

Vector random_unit_in_v(const HTypeAlgebra& h, std::uint64_t seed) {
  return h.from_v(unit_sphere_rational_sample(h.n(), seed));
}

Vector half_spin_unit(const HTypeAlgebra& h, int sign, std::uint64_t seed) {
  HalfSpinSplit split = half_spin_split(h.module);
  const auto& basis = sign > 0 ? split.delta_plus : split.delta_minus;
  Matrix g = Matrix::identity(h.n());
  auto p0 = find_rational_unit(g, basis);
  if (!p0) throw std::logic_error("no rational unit vector found in the half-spin space");
  if (seed == 0) return h.from_v(*p0);
  Sampler rng(seed);
  return h.from_v(sample_unit_in_span(g, basis, *p0, rng));
}

Vector half_spin_mix(const HTypeAlgebra& h, const Rational& t) {
  Vector plus = half_spin_unit(h, +1, 0), minus = half_spin_unit(h, -1, 0);
  Rational d = 1 + t * t;
  Vector x = scaled((1 - t * t) / d, plus);
  axpy(2 * t / d, minus, x);
  return x;
}

}  // namespace rsol
