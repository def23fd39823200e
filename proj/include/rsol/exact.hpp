#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsol {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// p/q in lowest terms; throws std::invalid_argument when q = 0.
Rational ratio(const Integer& p, const Integer& q);
/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
Vector add(std::span<const Rational> u, std::span<const Rational> v);
Vector sub(std::span<const Rational> u, std::span<const Rational> v);
Vector scaled(const Rational& s, std::span<const Rational> v);
/// y += s * x
void axpy(const Rational& s, std::span<const Rational> x, std::span<Rational> y);
Rational dot(std::span<const Rational> u, std::span<const Rational> v);
bool is_zero(std::span<const Rational> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix diagonal(std::span<const Rational> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const std::vector<Rational>& entries() const { return entries_; }

  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;
  Rational trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  /// Sub-block of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// a·b - b·a
Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
Echelon row_reduce(Matrix a);
std::size_t rank(const Matrix& a);
/// Free variables are set to zero. Throws std::invalid_argument on size mismatch.
std::optional<Vector> solve_linear(const Matrix& a, std::span<const Rational> b);
/// One basis vector per free column, with a 1 in that column.
std::vector<Vector> nullspace(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Rational determinant(Matrix a);
bool is_positive_definite(const Matrix& a);
/// Reduced basis of the span of the given vectors (rows of the RREF).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
/// True iff v lies in the span of the basis returned by span_basis.
bool in_span(const std::vector<Vector>& basis, std::span<const Rational> v);

using VectorPair = std::pair<Vector, Vector>;
/// r with u = r·v for every pair; (0,0) pairs are skipped, all-(0,0) gives 0.
std::optional<Rational> common_ratio(std::span<const VectorPair> pairs);

/// Coefficients low to high, monic.
std::vector<Rational> characteristic_polynomial(const Matrix& a);

struct Eigenvalue {
  Rational value;
  std::size_t multiplicity;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};
/// All eigenvalues with algebraic multiplicity when the characteristic
/// polynomial splits over the rationals, sorted ascending; none otherwise.
std::optional<std::vector<Eigenvalue>> rational_eigenvalues(const Matrix& a);

/// Deterministic generator; values are taken from raw engine output only.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational small_rational(long bound = 7);

 private:
  std::mt19937_64 engine_;
};

/// (2t, 1 - |t|²) / (1 + |t|²); length t.size() + 1, unit norm.
Vector inverse_stereographic(std::span<const Rational> t);
Vector unit_sphere_rational_sample(std::size_t dim, std::uint64_t seed);

/// Second intersection of the line p0 + s·d with {x : xᵀ g x = xᵀ g p0}.
/// Requires dᵀ g d ≠ 0.
Vector quadric_second_point(const Matrix& g, std::span<const Rational> p0, std::span<const Rational> d);

/// Some rational x on the given subspace with xᵀ g x = 1, built from small
/// combinations of the basis; none if the search finds nothing.
std::optional<Vector> find_rational_unit(const Matrix& g, const std::vector<Vector>& basis);
/// Unit vector in span(basis) drawn on the rational quadric through p0.
Vector sample_unit_in_span(const Matrix& g, const std::vector<Vector>& basis, std::span<const Rational> p0,
                           Sampler& rng);

bool is_rational_square(const Rational& q);
/// Nonnegative root of a rational square.
Rational rational_sqrt(const Rational& q);

}  // namespace rsol
