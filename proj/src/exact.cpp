#include "rsol/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsol {

Rational ratio(const Integer& p, const Integer& q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

static void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

Vector add(std::span<const Rational> u, std::span<const Rational> v) {
  require_same_size(u.size(), v.size());
  Vector w(u.begin(), u.end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
  return w;
}

Vector sub(std::span<const Rational> u, std::span<const Rational> v) {
  require_same_size(u.size(), v.size());
  Vector w(u.begin(), u.end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= v[i];
  return w;
}

Vector scaled(const Rational& s, std::span<const Rational> v) {
  Vector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = s * v[i];
  return w;
}

void axpy(const Rational& s, std::span<const Rational> x, std::span<Rational> y) {
  require_same_size(x.size(), y.size());
  if (s == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] += s * x[i];
}

Rational dot(std::span<const Rational> u, std::span<const Rational> v) {
  require_same_size(u.size(), v.size());
  Rational acc;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0 && v[i] != 0) acc += u[i] * v[i];
  return acc;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_size(columns[c].size(), rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  require_same_size(v.size(), cols_);
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (a != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return rsol::is_zero(entries_); }

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Echelon row_reduce(Matrix a) {
  Echelon e;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a(p, j), a(lead, j));
    Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(lead, j) != 0) a(r, j) -= f * a(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::optional<Vector> solve_linear(const Matrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Rational determinant(Matrix a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

bool is_positive_definite(const Matrix& a) {
  if (!a.is_symmetric()) return false;
  // Elimination without pivoting: the pivots are ratios of leading minors.
  Matrix m = a;
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (m(c, c) <= 0) return false;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return true;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Echelon e = row_reduce(Matrix::from_rows(vectors, dim));
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    auto r = e.reduced.row(i);
    basis.emplace_back(r.begin(), r.end());
  }
  return basis;
}

bool in_span(const std::vector<Vector>& basis, std::span<const Rational> v) {
  Vector w(v.begin(), v.end());
  for (const auto& b : basis) {
    auto p = std::find_if(b.begin(), b.end(), [](const Rational& x) { return x != 0; });
    if (p == b.end()) continue;
    std::size_t idx = static_cast<std::size_t>(p - b.begin());
    if (w[idx] != 0) axpy(-w[idx] / b[idx], b, w);
  }
  return is_zero(w);
}

std::optional<Rational> common_ratio(std::span<const VectorPair> pairs) {
  std::optional<Rational> r;
  for (const auto& [u, v] : pairs) {
    require_same_size(u.size(), v.size());
    bool uz = is_zero(u), vz = is_zero(v);
    if (vz) {
      if (!uz) return std::nullopt;
      continue;
    }
    std::size_t i = 0;
    while (v[i] == 0) ++i;
    Rational cand = u[i] / v[i];
    if (r && *r != cand) return std::nullopt;
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j] != cand * v[j]) return std::nullopt;
    r = cand;
  }
  return r.value_or(Rational(0));
}

std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j) == 0) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) swap(h(r, p), h(r, j + 1));
    }
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j) == 0) continue;
      Rational f = h(r, j) / h(j + 1, j);
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= f * h(j + 1, c);
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) += f * h(c, r);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> pk(k + 1);
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] += prev[d];
      pk[d] -= h(k - 1, k - 1) * prev[d];
    }
    Rational prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      Rational f = prod * h(i - 1, k - 1);
      if (f != 0)
        for (std::size_t d = 0; d < p[i - 1].size(); ++d) pk[d] -= f * p[i - 1][d];
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = a[k + b.size() - 1] / b.back();
    q[k] = f;
    if (f != 0)
      for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  trim(p);
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Rational evaluate(const Poly& c, const Rational& x) {
  Rational acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Poly deflate(const Poly& p, const Rational& r) { return divmod(p, Poly{-r, 1}).first; }

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational floor_of(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

// Fraction with the smallest denominator in [lo, hi], lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Rational f = floor_of(lo);
  if (f == lo) return lo;
  if (f + 1 <= hi) return f + 1;
  return f + 1 / simplest_between(1 / (hi - f), 1 / (lo - f));
}

// Rational roots of a squarefree polynomial. Real roots are isolated with a
// Sturm sequence and narrowed below 1/L², L the leading coefficient of the
// primitive integer form; a rational root p/q has q | L, so it is then the
// simplest fraction of its interval.
std::vector<Rational> squarefree_rational_roots(Poly q, const std::vector<Rational>& hints) {
  std::vector<Rational> roots;
  trim(q);
  // Cheap exact candidates first; for triangular matrices they are all roots.
  for (const auto& h : hints) {
    if (q.size() <= 1) break;
    if (evaluate(q, h) != 0) continue;
    roots.push_back(h);
    q = deflate(q, h);
  }
  if (q.size() <= 1) return roots;
  if (q.size() == 2) {
    roots.push_back(-q[0] / q[1]);
    return roots;
  }
  if (q.size() == 3) {
    Rational disc = q[1] * q[1] - 4 * q[0] * q[2];
    if (!is_rational_square(disc)) return roots;
    Rational s = rational_sqrt(disc);
    roots.push_back((-q[1] - s) / (2 * q[2]));
    roots.push_back((-q[1] + s) / (2 * q[2]));
    return roots;
  }
  q = monic(q);
  Integer den = 1;
  for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Rational lead(den), width = 1 / (2 * lead * lead);
  Rational bound = 1;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) bound = std::max(bound, Rational(1 + abs(q[i])));

  std::vector<Poly> seq{q, derivative(q)};
  while (seq.back().size() > 1) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  auto count = [&](const Rational& lo, const Rational& hi) { return sign_changes(seq, lo) - sign_changes(seq, hi); };

  // Intervals (lo, hi] holding one root each.
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}}, isolated;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int c = count(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  for (auto [lo, hi] : isolated) {
    // Move lo off a neighbouring root so the root is a sign change.
    while (evaluate(q, lo) == 0 && evaluate(q, hi) != 0) {
      Rational mid = (lo + hi) / 2;
      if (count(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    if (evaluate(q, hi) == 0) {
      roots.push_back(hi);
      continue;
    }
    int s_hi = sgn(evaluate(q, hi));
    while (hi - lo >= width) {
      Rational mid = (lo + hi) / 2;
      int s = sgn(evaluate(q, mid));
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == s_hi)
        hi = mid;
      else
        lo = mid;
    }
    if (lo == hi) {
      roots.push_back(lo);
      continue;
    }
    Rational r = evaluate(q, hi) == 0 ? hi : simplest_between(lo, hi);
    if (r > lo && evaluate(q, r) == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace

std::optional<std::vector<Eigenvalue>> rational_eigenvalues(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("eigenvalues of non-square matrix");
  Poly cp = characteristic_polynomial(a);
  Poly d = derivative(cp);
  Poly sq = d.empty() ? cp : divmod(cp, gcd(cp, d)).first;
  std::vector<Eigenvalue> out;
  std::size_t total = 0;
  std::vector<Rational> hints;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (std::find(hints.begin(), hints.end(), a(i, i)) == hints.end()) hints.push_back(a(i, i));
  for (const auto& r : squarefree_rational_roots(sq, hints)) {
    std::size_t mult = 0;
    Poly p = cp;
    while (p.size() > 1) {
      auto [q, rem] = divmod(p, Poly{-r, 1});
      if (!rem.empty()) break;
      p = std::move(q);
      ++mult;
    }
    out.push_back({r, mult});
    total += mult;
  }
  if (total != a.rows()) return std::nullopt;
  std::sort(out.begin(), out.end(), [](const Eigenvalue& x, const Eigenvalue& y) { return x.value < y.value; });
  return out;
}

long Sampler::integer(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Sampler::small_rational(long bound) {
  long p = integer(-bound, bound);
  long q = integer(1, bound);
  return ratio(p, q);
}

Vector inverse_stereographic(std::span<const Rational> t) {
  Rational s = dot(t, t);
  Rational denom = 1 + s;
  Vector v(t.size() + 1);
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = 2 * t[i] / denom;
  v[t.size()] = (1 - s) / denom;
  return v;
}

Vector unit_sphere_rational_sample(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("unit sphere of dimension 0");
  Sampler rng(seed);
  if (dim == 1) return {Rational(rng.next() % 2 == 0 ? 1 : -1)};
  Vector t(dim - 1);
  for (auto& x : t) x = rng.small_rational();
  return inverse_stereographic(t);
}

Vector quadric_second_point(const Matrix& g, std::span<const Rational> p0, std::span<const Rational> d) {
  Vector gd = g.apply(d);
  Rational qd = dot(d, gd);
  if (qd == 0) throw std::invalid_argument("degenerate direction");
  Rational s = -2 * dot(p0, gd) / qd;
  Vector x(p0.begin(), p0.end());
  axpy(s, d, x);
  return x;
}

bool is_rational_square(const Rational& q) {
  return q >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q)) throw std::domain_error("not a rational square: " + to_string(q));
  Integer n = sqrt(q.get_num()), d = sqrt(q.get_den());
  return Rational(n, d);
}

std::optional<Vector> find_rational_unit(const Matrix& g, const std::vector<Vector>& basis) {
  if (basis.empty()) return std::nullopt;
  std::size_t dim = g.rows();
  // Gram-Schmidt over the rationals keeps the quadric diagonal.
  std::vector<Vector> ortho;
  std::vector<Rational> norms;
  for (const auto& b : basis) {
    Vector w = b;
    for (std::size_t i = 0; i < ortho.size(); ++i) axpy(-dot(w, g.apply(ortho[i])) / norms[i], ortho[i], w);
    if (is_zero(w)) continue;
    norms.push_back(dot(w, g.apply(w)));
    ortho.push_back(std::move(w));
  }
  std::size_t k = ortho.size();
  auto combine = [&](const std::vector<std::pair<std::size_t, long>>& terms) -> std::optional<Vector> {
    Rational q;
    for (auto [i, c] : terms) q += Rational(c * c) * norms[i];
    if (!is_rational_square(q) || q == 0) return std::nullopt;
    Rational r = rational_sqrt(q);
    Vector x(dim);
    for (auto [i, c] : terms) axpy(Rational(c) / r, ortho[i], x);
    return x;
  };
  for (std::size_t i = 0; i < k; ++i)
    if (auto x = combine({{i, 1}})) return x;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
          if (auto x = combine({{i, a}, {j, b}})) return x;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        for (long a = 1; a <= 3; ++a)
          for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c)
              if (auto x = combine({{i, a}, {j, b}, {l, c}})) return x;
  for (std::size_t i = 0; i + 3 < k; ++i)
    if (auto x = combine({{i, 1}, {i + 1, 1}, {i + 2, 1}, {i + 3, 1}})) return x;
  return std::nullopt;
}

Vector sample_unit_in_span(const Matrix& g, const std::vector<Vector>& basis, std::span<const Rational> p0,
                           Sampler& rng) {
  std::size_t dim = g.rows();
  if (basis.size() <= 1) return Vector(p0.begin(), p0.end());
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector d(dim);
    for (const auto& b : basis) axpy(rng.small_rational(), b, d);
    if (is_zero(d)) continue;
    Vector x = quadric_second_point(g, p0, d);
    if (x != Vector(p0.begin(), p0.end())) return x;
  }
  return Vector(p0.begin(), p0.end());
}

}  // namespace rsol
