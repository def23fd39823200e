#include "rsol/hypersurface.hpp"

namespace rsol {

AmbientGeometry ambient_geometry(const MetricLieAlgebra& l, Exec exec) {
  AmbientGeometry g{levi_civita(l, exec), {}};
  g.ricci = ricci(l, g.connection, exec);
  return g;
}

namespace {

// Column i holds ∇_{e_i} w.
Matrix nabla_into(const Connection& c, std::span<const Rational> w) {
  std::size_t n = c.nabla.size();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector col = c.nabla[i].apply(w);
    for (std::size_t r = 0; r < n; ++r) out(r, i) = col[r];
  }
  return out;
}

}  // namespace

Hypersurface construct(const MetricLieAlgebra& ambient, const AmbientGeometry& geom, std::span<const Rational> xi,
                       Exec exec) {
  if (xi.size() != ambient.dim()) throw std::invalid_argument("normal has wrong length");
  if (ambient.inner(xi, xi) != 1) throw std::invalid_argument("normal is not a unit vector");
  auto sub = orthogonal_complement_subalgebra(ambient, xi, exec);
  if (!sub) throw NotSubalgebraError("the orthogonal complement of the normal is not a subalgebra");
  std::size_t n = ambient.dim();
  const Connection& c = geom.connection;
  // a: y ↦ ∇_y ξ;  nx: y ↦ ∇_ξ y;  b: y ↦ ∇_y(∇_ξ ξ).
  Matrix a = nabla_into(c, xi);
  Matrix nx(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (xi[i] != 0) nx += c.nabla[i] * xi[i];
  Matrix b = nabla_into(c, nx.apply(xi));
  // R(y,ξ)ξ = ∇_y∇_ξξ − ∇_ξ∇_yξ − ∇_[y,ξ]ξ, and [y,ξ] = −ad(ξ)y.
  Matrix r = b - nx * a + a * ambient.ad(xi);
  Matrix shape = (sub->projection * a * sub->inclusion) * Rational(-1);
  Matrix jacobi = sub->projection * r * sub->inclusion;
  Matrix ric = sub->projection * geom.ricci * sub->inclusion;
  return Hypersurface{Vector(xi.begin(), xi.end()), std::move(*sub), std::move(shape), std::move(jacobi),
                      std::move(ric)};
}

Hypersurface construct(const MetricLieAlgebra& ambient, std::span<const Rational> xi, Exec exec) {
  return construct(ambient, ambient_geometry(ambient, exec), xi, exec);
}

Matrix gauss_ricci(const Hypersurface& h) {
  const Matrix& s = h.shape;
  return h.ambient_ricci + s * s.trace() - s * s - h.jacobi;
}

Matrix operator_on_sub(const Subalgebra& s, const std::vector<Vector>& frame, const std::vector<Vector>& images) {
  std::size_t d = s.algebra.dim();
  if (frame.size() != d || images.size() != d) throw std::invalid_argument("frame must have one vector per dimension");
  std::vector<Vector> f, g;
  for (std::size_t i = 0; i < d; ++i) {
    f.push_back(s.projection.apply(frame[i]));
    g.push_back(s.projection.apply(images[i]));
  }
  auto finv = inverse(Matrix::from_columns(f, d));
  if (!finv) throw std::invalid_argument("frame does not span the subspace");
  return Matrix::from_columns(g, d) * *finv;
}

Matrix operator_from_blocks(const Subalgebra& s, const std::vector<std::vector<Vector>>& blocks,
                            const std::vector<Rational>& values) {
  std::vector<Vector> frame, images;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& v : blocks[b]) {
      frame.push_back(v);
      images.push_back(scaled(values.at(b), v));
    }
  return operator_on_sub(s, frame, images);
}

}  // namespace rsol
