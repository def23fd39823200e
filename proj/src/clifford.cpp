#include "rsol/clifford.hpp"

#include <stdexcept>
#include <string>

namespace rsol {

namespace {

using Elem = std::vector<long>;

Elem conj(const Elem& x) {
  Elem y = x;
  if (y.size() == 1) return y;
  std::size_t h = y.size() / 2;
  Elem a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  a = conj(a);
  for (std::size_t i = 0; i < h; ++i) {
    y[i] = a[i];
    y[h + i] = -b[i];
  }
  return y;
}

// Cayley-Dickson doubling: (a,b)(c,d) = (ac - d*b, da + bc*).
Elem mul(const Elem& x, const Elem& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  std::size_t h = x.size() / 2;
  Elem a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  Elem c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Elem p = mul(a, c), q = mul(conj(d), b), r = mul(d, a), s = mul(b, conj(c));
  Elem out(x.size());
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = p[i] - q[i];
    out[h + i] = r[i] + s[i];
  }
  return out;
}

// Left multiplication by the imaginary unit e_u in the algebra of dimension dim.
Matrix left_mult(std::size_t dim, std::size_t u) {
  Matrix m(dim, dim);
  Elem eu(dim, 0);
  eu[u] = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    Elem ej(dim, 0);
    ej[j] = 1;
    Elem col = mul(eu, ej);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return out;
}

// From generators L_1..L_p on ℝ^d: diag(L_i, -L_i) and [[0,-I],[I,0]] on ℝ^{2d}.
std::vector<Matrix> double_up(const std::vector<Matrix>& gens, std::size_t d) {
  std::vector<Matrix> out;
  for (const auto& l : gens) {
    Matrix g(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        g(i, j) = l(i, j);
        g(d + i, d + j) = -l(i, j);
      }
    out.push_back(std::move(g));
  }
  Matrix last(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    last(i, d + i) = -1;
    last(d + i, i) = 1;
  }
  out.push_back(std::move(last));
  return out;
}

std::vector<Matrix> raw_generators(std::size_t m) {
  if (m == 0) return {};
  if (m <= 7) {
    std::size_t dim = m == 1 ? 2 : m <= 3 ? 4 : 8;
    if (m == 4) {
      std::vector<Matrix> q{left_mult(4, 1), left_mult(4, 2), left_mult(4, 3)};
      return double_up(q, 4);
    }
    std::vector<Matrix> out;
    for (std::size_t u = 1; u <= m; ++u) out.push_back(left_mult(dim, u));
    return out;
  }
  std::vector<Matrix> oct;
  for (std::size_t u = 1; u <= 7; ++u) oct.push_back(left_mult(8, u));
  std::vector<Matrix> e8 = double_up(oct, 8);
  if (m == 8) return e8;
  // Periodicity: Cl(m) modules from Cl(8) ⊗ Cl(m-8).
  std::vector<Matrix> rest = build_generators(m - 8);
  std::size_t n = irreducible_dim(m - 8);
  Matrix omega = Matrix::identity(16);
  for (const auto& e : e8) omega = omega * e;
  std::vector<Matrix> out;
  for (const auto& e : e8) out.push_back(kron(e, Matrix::identity(n)));
  for (const auto& k : rest) out.push_back(kron(omega, k));
  return out;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

CliffordModule sum_of(std::size_t m, const std::vector<std::vector<Matrix>>& pieces) {
  CliffordModule c;
  c.m = m;
  for (std::size_t g = 0; g < m; ++g) {
    std::vector<Matrix> blocks;
    for (const auto& p : pieces) blocks.push_back(p[g]);
    c.generators.push_back(block_diag(blocks));
  }
  c.n = c.generators.empty() ? 0 : c.generators[0].rows();
  return c;
}

}  // namespace

Matrix CliffordModule::j_map(std::span<const Rational> z) const {
  if (z.size() != m) throw std::invalid_argument("j_map: expected m coordinates");
  Matrix out(n, n);
  for (std::size_t i = 0; i < m; ++i)
    if (z[i] != 0) out += generators[i] * z[i];
  return out;
}

Matrix CliffordModule::volume_element() const {
  Matrix w = Matrix::identity(n);
  for (const auto& g : generators) w = w * g;
  return w;
}

std::size_t irreducible_dim(std::size_t m) {
  static const std::size_t base[] = {1, 2, 4, 4, 8, 8, 8, 8, 16};
  if (m == 0) throw std::invalid_argument("m must be at least 1");
  if (m <= 8) return base[m];
  return 16 * irreducible_dim(m - 8);
}

std::vector<Matrix> build_generators(std::size_t m) {
  if (m == 0) throw std::invalid_argument("m must be at least 1");
  std::vector<Matrix> gens = raw_generators(m);
  if (m % 4 == 3) {
    std::size_t n = gens[0].rows();
    Matrix w = Matrix::identity(n);
    for (const auto& g : gens) w = w * g;
    if (w != Matrix::identity(n)) {
      if (w != Matrix::identity(n) * Rational(-1)) throw std::logic_error("volume element is not ±I");
      gens.back() *= Rational(-1);
    }
  }
  return gens;
}

CliffordModule assemble(std::size_t m, std::size_t k) {
  if (m % 4 == 3) throw std::invalid_argument("m ≡ 3 mod 4 needs the pair (k+, k-)");
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::vector<std::vector<Matrix>> pieces(k, build_generators(m));
  CliffordModule c = sum_of(m, pieces);
  c.k = k;
  return c;
}

CliffordModule assemble(std::size_t m, std::size_t k_plus, std::size_t k_minus) {
  if (m % 4 != 3) throw std::invalid_argument("the pair (k+, k-) is only meaningful for m ≡ 3 mod 4");
  if (k_plus + k_minus == 0) throw std::invalid_argument("k+ + k- must be at least 1");
  std::vector<Matrix> plus = build_generators(m), minus = plus;
  minus.back() *= Rational(-1);
  std::vector<std::vector<Matrix>> pieces(k_plus, plus);
  pieces.insert(pieces.end(), k_minus, minus);
  CliffordModule c = sum_of(m, pieces);
  c.parity = std::make_pair(k_plus, k_minus);
  return c;
}

HalfSpinSplit half_spin_split(const CliffordModule& c) {
  HalfSpinSplit s;
  s.omega = c.volume_element();
  Matrix id = Matrix::identity(c.n);
  if (s.omega * s.omega != id) throw std::invalid_argument("volume element does not square to I");
  s.delta_plus = nullspace(s.omega - id);
  s.delta_minus = nullspace(s.omega + id);
  if (c.m % 2 == 0) {
    auto plus = span_basis(s.delta_plus, c.n), minus = span_basis(s.delta_minus, c.n);
    for (const auto& g : c.generators) {
      for (const auto& v : s.delta_plus)
        if (!in_span(minus, g.apply(v))) throw std::logic_error("generator does not map Δ+ into Δ-");
      for (const auto& v : s.delta_minus)
        if (!in_span(plus, g.apply(v))) throw std::logic_error("generator does not map Δ- into Δ+");
    }
  }
  return s;
}

std::optional<std::string> check_invariants(const CliffordModule& c) {
  if (c.generators.size() != c.m) return "generator count differs from m";
  Matrix id = Matrix::identity(c.n);
  for (std::size_t i = 0; i < c.m; ++i) {
    const Matrix& a = c.generators[i];
    if (a.rows() != c.n || a.cols() != c.n) return "generator " + std::to_string(i) + " has wrong size";
    for (const auto& x : a.entries())
      if (x != 0 && x != 1 && x != -1) return "generator entries must be 0 or ±1";
    if (a * a != id * Rational(-1)) return "J" + std::to_string(i + 1) + "² ≠ -I";
    if (a.transpose() * a != id) return "J" + std::to_string(i + 1) + " is not orthogonal";
    for (std::size_t j = i + 1; j < c.m; ++j) {
      const Matrix& b = c.generators[j];
      if (!(a * b + b * a).is_zero())
        return "J" + std::to_string(i + 1) + " and J" + std::to_string(j + 1) + " do not anticommute";
    }
  }
  std::size_t copies = c.parity ? c.parity->first + c.parity->second : c.k;
  if (c.n != copies * irreducible_dim(c.m)) return "module dimension does not match the multiplicity";
  if (c.parity) {
    Matrix w = c.volume_element();
    std::size_t d = irreducible_dim(c.m), off = 0;
    for (std::size_t b = 0; b < copies; ++b, off += d) {
      Rational sign = b < c.parity->first ? 1 : -1;
      if (w.block(off, off, d, d) != Matrix::identity(d) * sign) return "volume element is not ±I on a summand";
    }
  }
  return std::nullopt;
}

}  // namespace rsol
