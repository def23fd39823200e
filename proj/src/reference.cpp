#include "rsol/reference.hpp"

namespace rsol::reference {

Connection levi_civita(const MetricLieAlgebra& l) {
  std::size_t n = l.dim();
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  Connection c;
  c.nabla.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lowered(n);
      for (std::size_t k = 0; k < n; ++k) {
        lowered[k] = l.inner(l.bracket(e(i), e(j)), e(k)) - l.inner(l.bracket(e(j), e(k)), e(i)) +
                     l.inner(l.bracket(e(k), e(i)), e(j));
        lowered[k] /= 2;
      }
      Vector col = l.gram_inverse().apply(lowered);
      for (std::size_t k = 0; k < n; ++k) c.nabla[i](k, j) = col[k];
    }
  return c;
}

Matrix ricci(const MetricLieAlgebra& l) {
  std::size_t n = l.dim();
  Connection c = reference::levi_civita(l);
  const Matrix& ginv = l.gram_inverse();
  Matrix ric(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational acc;
      for (std::size_t a = 0; a < n; ++a) {
        Vector r = curvature(l, c, basis_vector(n, a), basis_vector(n, x), basis_vector(n, y));
        for (std::size_t b = 0; b < n; ++b)
          if (ginv(a, b) != 0) acc += ginv(a, b) * l.inner(r, basis_vector(n, b));
      }
      ric(x, y) = acc;
    }
  return ginv * ric;
}

std::vector<Vector> leibniz_defects(const MetricLieAlgebra& l, const Matrix& d) {
  std::size_t n = l.dim();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector x = basis_vector(n, i), y = basis_vector(n, j);
      Vector v = d.apply(l.bracket(x, y));
      v = sub(v, l.bracket(d.apply(x), y));
      v = sub(v, l.bracket(x, d.apply(y)));
      out.push_back(std::move(v));
    }
  return out;
}

bool jacobi_holds(const MetricLieAlgebra& l) {
  std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i), y = basis_vector(n, j), z = basis_vector(n, k);
        Vector s = l.bracket(l.bracket(x, y), z);
        s = add(s, l.bracket(l.bracket(y, z), x));
        s = add(s, l.bracket(l.bracket(z, x), y));
        if (!is_zero(s)) return false;
      }
  return true;
}

}  // namespace rsol::reference
