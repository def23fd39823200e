#include "rsol/metric_lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsol {

namespace {

bool parallel(Exec e) { return e == Exec::parallel; }

void add_scaled_sparse(const Rational& s, const std::vector<Term>& terms, Vector& out) {
  for (const auto& t : terms) out[t.index] += s * t.value;
}

}  // namespace

MetricLieAlgebra::MetricLieAlgebra(std::size_t dim, const std::vector<BracketTriple>& triples, Matrix gram,
                                   std::vector<std::string> labels) {
  dim_ = dim;
  dense_.assign(dim * dim, Vector(dim));
  std::vector<bool> seen(dim * dim * dim, false);
  for (const auto& t : triples) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) throw std::invalid_argument("bracket index out of range");
    if (t.i >= t.j) throw std::invalid_argument("bracket triple must have i < j");
    std::size_t key = (t.i * dim + t.j) * dim + t.k;
    if (seen[key]) throw std::invalid_argument("repeated bracket triple");
    seen[key] = true;
    dense_[t.i * dim + t.j][t.k] = t.value;
    dense_[t.j * dim + t.i][t.k] = -t.value;
  }
  gram_ = std::move(gram);
  labels_ = std::move(labels);
  finish(true);
}

MetricLieAlgebra MetricLieAlgebra::from_dense(std::size_t dim, std::vector<Vector> constants, Matrix gram,
                                              std::vector<std::string> labels, bool check_jacobi) {
  if (constants.size() != dim * dim) throw std::invalid_argument("expected dim² bracket vectors");
  for (const auto& v : constants)
    if (v.size() != dim) throw std::invalid_argument("bracket vector has wrong length");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!is_zero(constants[i * dim + i])) throw std::invalid_argument("[e_i, e_i] must vanish");
    for (std::size_t j = i + 1; j < dim; ++j)
      if (constants[i * dim + j] != scaled(-1, constants[j * dim + i]))
        throw std::invalid_argument("structure constants are not antisymmetric");
  }
  MetricLieAlgebra l;
  l.dim_ = dim;
  l.dense_ = std::move(constants);
  l.gram_ = std::move(gram);
  l.labels_ = std::move(labels);
  l.finish(check_jacobi);
  return l;
}

void MetricLieAlgebra::finish(bool check_jacobi) {
  if (gram_.rows() != dim_ || gram_.cols() != dim_) throw std::invalid_argument("gram has wrong size");
  if (!gram_.is_symmetric()) throw std::invalid_argument("gram is not symmetric");
  if (!is_positive_definite(gram_)) throw std::invalid_argument("gram is not positive definite");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim_) throw std::invalid_argument("label count differs from dim");
  gram_diagonal_ = true;
  for (std::size_t i = 0; i < dim_ && gram_diagonal_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j && gram_(i, j) != 0) {
        gram_diagonal_ = false;
        break;
      }
  if (gram_diagonal_) {
    gram_inv_ = Matrix(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) gram_inv_(i, i) = 1 / gram_(i, i);
  } else {
    gram_inv_ = *inverse(gram_);
  }
  sparse_.assign(dim_ * dim_, {});
  for (std::size_t p = 0; p < dense_.size(); ++p)
    for (std::size_t k = 0; k < dim_; ++k)
      if (dense_[p][k] != 0) sparse_[p].push_back({k, dense_[p][k]});
  if (check_jacobi)
    if (auto bad = jacobi_violation(*this)) {
      auto [i, j, k] = *bad;
      throw std::invalid_argument("Jacobi identity fails on basis triple (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ", " + std::to_string(k) + ")");
    }
}

std::vector<BracketTriple> MetricLieAlgebra::triples() const {
  std::vector<BracketTriple> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& t : sparse(i, j)) out.push_back({i, j, t.index, t.value});
  return out;
}

Rational MetricLieAlgebra::inner(std::span<const Rational> u, std::span<const Rational> v) const {
  if (gram_diagonal_) {
    if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < dim_; ++i)
      if (u[i] != 0 && v[i] != 0) acc += u[i] * gram_(i, i) * v[i];
    return acc;
  }
  return dot(u, gram_.apply(v));
}

Vector MetricLieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      add_scaled_sparse(x[i] * y[j], sparse(i, j), out);
    }
  }
  return out;
}

Vector MetricLieAlgebra::bracket_basis(std::size_t i, std::span<const Rational> y) const {
  if (y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  Vector out(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    if (y[j] != 0) add_scaled_sparse(y[j], sparse(i, j), out);
  return out;
}

Matrix MetricLieAlgebra::ad(std::span<const Rational> x) const {
  if (x.size() != dim_) throw std::invalid_argument("ad: dimension mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b)
      for (const auto& t : sparse(a, b)) m(t.index, b) += x[a] * t.value;
  }
  return m;
}

Matrix MetricLieAlgebra::adjoint(const Matrix& a) const { return gram_inv_ * a.transpose() * gram_; }

bool MetricLieAlgebra::is_self_adjoint(const Matrix& a) const {
  Matrix ga = gram_ * a;
  return ga.is_symmetric();
}

bool MetricLieAlgebra::is_abelian() const {
  return std::all_of(sparse_.begin(), sparse_.end(), [](const auto& s) { return s.empty(); });
}

MetricLieAlgebra MetricLieAlgebra::scaled_metric(const Rational& t) const {
  if (t <= 0) throw std::invalid_argument("metric scale must be positive");
  MetricLieAlgebra l = *this;
  l.gram_ *= t;
  l.gram_inv_ *= 1 / t;
  return l;
}

MetricLieAlgebra MetricLieAlgebra::change_basis(const Matrix& p) const {
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change of basis matrix is singular");
  std::vector<Vector> cols(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols[j] = p.column(j);
  std::vector<Vector> constants(dim_ * dim_, Vector(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vector v = pinv->apply(bracket(cols[i], cols[j]));
      constants[j * dim_ + i] = scaled(-1, v);
      constants[i * dim_ + j] = std::move(v);
    }
  return from_dense(dim_, std::move(constants), p.transpose() * gram_ * p);
}

std::optional<std::array<std::size_t, 3>> jacobi_violation(const MetricLieAlgebra& l, Exec exec) {
  std::size_t n = l.dim();
  std::vector<std::optional<std::array<std::size_t, 3>>> first(n);
  const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel(exec))
  for (long si = 0; si < ln; ++si) {
    std::size_t i = static_cast<std::size_t>(si);
    Vector acc(n);
    for (std::size_t j = i + 1; j < n && !first[i]; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        for (const auto& t : l.sparse(i, j)) add_scaled_sparse(t.value, l.sparse(t.index, k), acc);
        for (const auto& t : l.sparse(j, k)) add_scaled_sparse(t.value, l.sparse(t.index, i), acc);
        for (const auto& t : l.sparse(k, i)) add_scaled_sparse(t.value, l.sparse(t.index, j), acc);
        if (!is_zero(acc)) {
          first[i] = std::array<std::size_t, 3>{i, j, k};
          break;
        }
      }
  }
  for (const auto& f : first)
    if (f) return f;
  return std::nullopt;
}

Vector Connection::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  std::size_t n = nabla.size();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) axpy(x[i], nabla[i].apply(y), out);
  return out;
}

Connection levi_civita(const MetricLieAlgebra& l, Exec exec) {
  std::size_t n = l.dim();
  const Matrix& g = l.gram();
  // low[(i*n + j)*n + k] = <[e_i, e_j], e_k>
  std::vector<Rational> low(n * n * n);
  const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel(exec))
  for (long si = 0; si < ln; ++si) {
    std::size_t i = static_cast<std::size_t>(si);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : l.sparse(i, j)) {
        if (l.gram_is_diagonal()) {
          low[(i * n + j) * n + t.index] += t.value * g(t.index, t.index);
        } else {
          for (std::size_t k = 0; k < n; ++k)
            if (g(t.index, k) != 0) low[(i * n + j) * n + k] += t.value * g(t.index, k);
        }
      }
  }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return low[(i * n + j) * n + k]; };
  Connection c;
  c.nabla.assign(n, Matrix(n, n));
  const Matrix& ginv = l.gram_inverse();
#pragma omp parallel for schedule(dynamic) if (parallel(exec))
  for (long si = 0; si < ln; ++si) {
    std::size_t i = static_cast<std::size_t>(si);
    Matrix& m = c.nabla[i];
    Vector lowered(n);
    for (std::size_t j = 0; j < n; ++j) {
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        lowered[k] = at(i, j, k) - at(j, k, i) + at(k, i, j);
        lowered[k] /= 2;
        any = any || lowered[k] != 0;
      }
      if (!any) continue;
      if (l.gram_is_diagonal()) {
        for (std::size_t k = 0; k < n; ++k)
          if (lowered[k] != 0) m(k, j) = ginv(k, k) * lowered[k];
      } else {
        Vector col = ginv.apply(lowered);
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
      }
    }
  }
  return c;
}

Vector curvature(const MetricLieAlgebra& l, const Connection& c, std::span<const Rational> x,
                 std::span<const Rational> y, std::span<const Rational> z) {
  Vector out = c.apply(x, c.apply(y, z));
  Vector yx = c.apply(y, c.apply(x, z));
  Vector br = c.apply(l.bracket(x, y), z);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= yx[i] + br[i];
  return out;
}

Matrix ricci_form(const MetricLieAlgebra& l, const Connection& c, Exec exec) {
  std::size_t n = l.dim();
  const auto& nb = c.nabla;
  // ric(x,y) = tr(z ↦ R(z,x)y) expanded in connection matrices.
  Vector t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j) t[j] += nb[a](a, j);
  Matrix ric(n, n);
  const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel(exec))
  for (long sx = 0; sx < ln; ++sx) {
    std::size_t x = static_cast<std::size_t>(sx);
    const Matrix& nx = nb[x];
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (t[j] == 0) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (nx(j, y) != 0) row[y] += t[j] * nx(j, y);
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& f = nx(a, j);
        if (f == 0) continue;
        auto r = nb[a].row(j);
        for (std::size_t y = 0; y < n; ++y)
          if (r[y] != 0) row[y] -= f * r[y];
      }
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& term : l.sparse(a, x)) {
        auto r = nb[term.index].row(a);
        for (std::size_t y = 0; y < n; ++y)
          if (r[y] != 0) row[y] -= term.value * r[y];
      }
    for (std::size_t y = 0; y < n; ++y) ric(x, y) = row[y];
  }
  return ric;
}

Matrix ricci(const MetricLieAlgebra& l, const Connection& c, Exec exec) {
  return l.gram_inverse() * ricci_form(l, c, exec);
}

Matrix ricci(const MetricLieAlgebra& l, Exec exec) { return ricci(l, levi_civita(l, exec), exec); }

std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<Vector> leibniz_defects(const MetricLieAlgebra& l, const Matrix& d, Exec exec) {
  std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("endomorphism has wrong size");
  std::vector<Vector> out(n * (n - 1) / 2);
  const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel(exec))
  for (long si = 0; si < ln; ++si) {
    std::size_t i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(n);
      for (const auto& t : l.sparse(i, j))
        for (std::size_t r = 0; r < n; ++r)
          if (d(r, t.index) != 0) v[r] += d(r, t.index) * t.value;
      for (std::size_t a = 0; a < n; ++a) {
        if (d(a, i) != 0)
          for (const auto& t : l.sparse(a, j)) v[t.index] -= d(a, i) * t.value;
        if (d(a, j) != 0)
          for (const auto& t : l.sparse(i, a)) v[t.index] -= d(a, j) * t.value;
      }
      out[pair_index(n, i, j)] = std::move(v);
    }
  }
  return out;
}

bool is_derivation(const MetricLieAlgebra& l, const Matrix& d, Exec exec) {
  auto defects = leibniz_defects(l, d, exec);
  return std::all_of(defects.begin(), defects.end(), [](const Vector& v) { return is_zero(v); });
}

std::vector<Matrix> derivation_algebra(const MetricLieAlgebra& l) {
  std::size_t n = l.dim();
  // Unknown d(r, c) sits at column r*n + c.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        Vector eq(n * n);
        for (const auto& t : l.sparse(i, j)) eq[r * n + t.index] += t.value;
        for (std::size_t a = 0; a < n; ++a) {
          for (const auto& t : l.sparse(a, j))
            if (t.index == r) eq[a * n + i] -= t.value;
          for (const auto& t : l.sparse(i, a))
            if (t.index == r) eq[a * n + j] -= t.value;
        }
        if (!is_zero(eq)) rows.push_back(std::move(eq));
      }
  std::vector<Vector> kernel =
      rows.empty() ? nullspace(Matrix(1, n * n)) : nullspace(Matrix::from_rows(rows, n * n));
  std::vector<Matrix> out;
  for (const auto& v : kernel) {
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Vector> orthogonal_complement_basis(const MetricLieAlgebra& l, std::span<const Rational> xi) {
  if (xi.size() != l.dim()) throw std::invalid_argument("normal has wrong length");
  if (is_zero(xi)) throw std::invalid_argument("normal must be nonzero");
  Vector w = l.gram().apply(xi);
  Matrix row(1, l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) row(0, i) = w[i];
  std::vector<Vector> raw = nullspace(row);
  std::vector<Vector> ortho;
  std::vector<Rational> norms;
  for (auto& v : raw) {
    for (std::size_t i = 0; i < ortho.size(); ++i) {
      Rational f = l.inner(v, ortho[i]);
      if (f != 0) axpy(-f / norms[i], ortho[i], v);
    }
    norms.push_back(l.inner(v, v));
    ortho.push_back(std::move(v));
  }
  return ortho;
}

bool orthogonal_complement_closes(const MetricLieAlgebra& l, std::span<const Rational> xi) {
  std::size_t n = l.dim();
  Vector w = l.gram().apply(xi);
  // A(a,b) = <[e_a, e_b], ξ>; closure means ιᵀAι = 0 on a basis ι of ξ^⊥.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : l.sparse(i, j)) a(i, j) += t.value * w[t.index];
  auto basis = orthogonal_complement_basis(l, xi);
  Matrix iota = Matrix::from_columns(basis, n);
  return (iota.transpose() * a * iota).is_zero();
}

std::optional<Subalgebra> orthogonal_complement_subalgebra(const MetricLieAlgebra& l, std::span<const Rational> xi,
                                                           Exec exec) {
  if (!orthogonal_complement_closes(l, xi)) return std::nullopt;
  std::size_t n = l.dim();
  auto basis = orthogonal_complement_basis(l, xi);
  std::size_t s = basis.size();
  Matrix iota = Matrix::from_columns(basis, n);
  Matrix gram(s, s);
  for (std::size_t i = 0; i < s; ++i) gram(i, i) = l.inner(basis[i], basis[i]);
  Matrix proj = iota.transpose() * l.gram();
  for (std::size_t i = 0; i < s; ++i) {
    Rational f = 1 / gram(i, i);
    for (auto& x : proj.row(i)) x *= f;
  }
  std::vector<Vector> constants(s * s, Vector(s));
  const long ls = static_cast<long>(s);
#pragma omp parallel for schedule(dynamic) if (parallel(exec))
  for (long si = 0; si < ls; ++si) {
    std::size_t i = static_cast<std::size_t>(si);
    Matrix adi = l.ad(basis[i]);
    for (std::size_t j = i + 1; j < s; ++j) {
      Vector v = proj.apply(adi.apply(basis[j]));
      constants[j * s + i] = scaled(-1, v);
      constants[i * s + j] = std::move(v);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t nz = 0, where = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (basis[i][k] != 0) {
        ++nz;
        where = k;
      }
    labels.push_back(nz == 1 && basis[i][where] == 1 ? l.labels()[where] : "s" + std::to_string(i));
  }
  return Subalgebra{MetricLieAlgebra::from_dense(s, std::move(constants), std::move(gram), std::move(labels), false),
                    std::move(iota), std::move(proj)};
}

std::vector<Vector> bracket_span(const MetricLieAlgebra& l, const std::vector<Vector>& left,
                                 const std::vector<Vector>& right) {
  std::vector<Vector> vs;
  for (const auto& x : left) {
    Matrix adx = l.ad(x);
    for (const auto& y : right) {
      Vector v = adx.apply(y);
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  }
  return span_basis(vs, l.dim());
}

std::vector<Vector> derived_subalgebra(const MetricLieAlgebra& l) {
  std::vector<Vector> all;
  for (std::size_t i = 0; i < l.dim(); ++i) all.push_back(basis_vector(l.dim(), i));
  return bracket_span(l, all, all);
}

bool is_nilpotent(const MetricLieAlgebra& l) {
  std::vector<Vector> all;
  for (std::size_t i = 0; i < l.dim(); ++i) all.push_back(basis_vector(l.dim(), i));
  std::vector<Vector> c = all;
  while (!c.empty()) {
    auto next = bracket_span(l, all, c);
    if (next.size() == c.size()) return false;
    c = std::move(next);
  }
  return true;
}

bool is_solvable(const MetricLieAlgebra& l) {
  std::vector<Vector> d;
  for (std::size_t i = 0; i < l.dim(); ++i) d.push_back(basis_vector(l.dim(), i));
  while (!d.empty()) {
    auto next = bracket_span(l, d, d);
    if (next.size() == d.size()) return false;
    d = std::move(next);
  }
  return true;
}

bool is_completely_solvable(const MetricLieAlgebra& l) {
  if (is_nilpotent(l)) return true;
  if (!is_solvable(l)) return false;
  std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!rational_eigenvalues(l.ad(basis_vector(n, i)))) return false;
  Sampler rng(0x5c0117u);
  for (int s = 0; s < 8; ++s) {
    Vector x(n);
    for (auto& v : x) v = rng.small_rational(4);
    if (!rational_eigenvalues(l.ad(x))) return false;
  }
  return true;
}

}  // namespace rsol
