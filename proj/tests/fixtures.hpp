#pragma once

#include "rsol/metric_lie.hpp"

namespace fixtures {

using namespace rsol;

inline MetricLieAlgebra heisenberg3() {
  return MetricLieAlgebra(3, {{0, 1, 2, 1}}, Matrix::identity(3), {"U", "V", "Z"});
}

/// [B, X] = X, orthonormal.
inline MetricLieAlgebra hyperbolic_plane() { return MetricLieAlgebra(2, {{0, 1, 1, 1}}, Matrix::identity(2), {"B", "X"}); }

inline MetricLieAlgebra so3() {
  return MetricLieAlgebra(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}}, Matrix::identity(3));
}

/// ad(e0) = diag(1, 2, 3) on e1..e3, [e1, e2] = e3.
inline MetricLieAlgebra solvable4() {
  return MetricLieAlgebra(4, {{0, 1, 1, 1}, {0, 2, 2, 2}, {0, 3, 3, 3}, {1, 2, 3, 1}}, Matrix::identity(4));
}

/// Unimodular integer matrix: product of random elementary shears.
inline Matrix random_unimodular(std::size_t n, Sampler& rng) {
  Matrix p = Matrix::identity(n);
  for (int s = 0; s < 3 * static_cast<int>(n); ++s) {
    std::size_t i = rng.next() % n, j = rng.next() % n;
    if (i == j) continue;
    long f = rng.integer(-2, 2);
    for (std::size_t r = 0; r < n; ++r) p(r, j) += f * p(r, i);
  }
  return p;
}

/// AᵀA + I for a random integer A.
inline Matrix random_gram(std::size_t n, Sampler& rng) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.integer(-2, 2);
  return a.transpose() * a + Matrix::identity(n);
}

/// The same Lie algebra in a skewed basis with an unrelated metric.
inline MetricLieAlgebra scramble(const MetricLieAlgebra& l, Sampler& rng) {
  MetricLieAlgebra c = l.change_basis(random_unimodular(l.dim(), rng));
  std::vector<Vector> constants;
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) constants.push_back(c.structure(i, j));
  return MetricLieAlgebra::from_dense(c.dim(), constants, random_gram(c.dim(), rng));
}

}  // namespace fixtures
