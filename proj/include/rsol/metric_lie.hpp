#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rsol/exact.hpp"

namespace rsol {

/// Kernel execution policy. `parallel` uses OpenMP when it is compiled in.
enum class Exec { serial, parallel };

struct Term {
  std::size_t index;
  Rational value;
};

/// [e_i, e_j] has coefficient `value` at e_k.
struct BracketTriple {
  std::size_t i, j, k;
  Rational value;
};

class MetricLieAlgebra {
 public:
  /// Triples are the nonzero constants for i < j; j < i entries are implied
  /// by antisymmetry. Throws std::invalid_argument on a repeated or diagonal
  /// triple, a Jacobi failure, or a gram that is not positive definite.
  MetricLieAlgebra(std::size_t dim, const std::vector<BracketTriple>& triples, Matrix gram,
                   std::vector<std::string> labels = {});

  /// Dense constants, entry i*dim+j holding [e_i, e_j]. Antisymmetry, gram
  /// and (unless `check_jacobi` is false) Jacobi are validated.
  static MetricLieAlgebra from_dense(std::size_t dim, std::vector<Vector> constants, Matrix gram,
                                     std::vector<std::string> labels = {}, bool check_jacobi = true);

  std::size_t dim() const { return dim_; }
  const Vector& structure(std::size_t i, std::size_t j) const { return dense_[i * dim_ + j]; }
  /// Nonzero entries of [e_i, e_j].
  const std::vector<Term>& sparse(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }
  /// Nonzero constants with i < j, ordered by (i, j, k).
  std::vector<BracketTriple> triples() const;
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  bool gram_is_diagonal() const { return gram_diagonal_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Rational inner(std::span<const Rational> u, std::span<const Rational> v) const;
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  Vector bracket_basis(std::size_t i, std::span<const Rational> y) const;
  /// Matrix of ad(x) on basis coordinates.
  Matrix ad(std::span<const Rational> x) const;
  /// Gram adjoint Aᵗ = G⁻¹AᵀG.
  Matrix adjoint(const Matrix& a) const;
  bool is_self_adjoint(const Matrix& a) const;
  bool is_abelian() const;

  /// Same algebra with gram scaled by t > 0.
  MetricLieAlgebra scaled_metric(const Rational& t) const;
  /// Algebra in the basis f_j = Σ_i p_ij e_i for invertible p.
  MetricLieAlgebra change_basis(const Matrix& p) const;

  friend bool operator==(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    return a.dim_ == b.dim_ && a.dense_ == b.dense_ && a.gram_ == b.gram_ && a.labels_ == b.labels_;
  }

 private:
  MetricLieAlgebra() = default;
  void finish(bool check_jacobi);

  std::size_t dim_ = 0;
  std::vector<Vector> dense_;
  std::vector<std::vector<Term>> sparse_;
  Matrix gram_;
  Matrix gram_inv_;
  bool gram_diagonal_ = false;
  std::vector<std::string> labels_;
};

/// First basis triple violating Jacobi, if any.
std::optional<std::array<std::size_t, 3>> jacobi_violation(const MetricLieAlgebra& l, Exec exec = Exec::parallel);

/// nabla[i] has column j equal to ∇_{e_i} e_j.
struct Connection {
  std::vector<Matrix> nabla;
  Vector apply(std::span<const Rational> x, std::span<const Rational> y) const;
};

Connection levi_civita(const MetricLieAlgebra& l, Exec exec = Exec::parallel);
/// R(x,y)z = ∇_x∇_y z − ∇_y∇_x z − ∇_[x,y] z
Vector curvature(const MetricLieAlgebra& l, const Connection& c, std::span<const Rational> x,
                 std::span<const Rational> y, std::span<const Rational> z);
/// Ricci bilinear form on basis vectors.
Matrix ricci_form(const MetricLieAlgebra& l, const Connection& c, Exec exec = Exec::parallel);
/// Ricci operator G⁻¹·ric.
Matrix ricci(const MetricLieAlgebra& l, const Connection& c, Exec exec = Exec::parallel);
Matrix ricci(const MetricLieAlgebra& l, Exec exec = Exec::parallel);

/// F(D)(e_i, e_j) = D[e_i,e_j] − [De_i,e_j] − [e_i,De_j] for i < j, in
/// lexicographic pair order.
std::vector<Vector> leibniz_defects(const MetricLieAlgebra& l, const Matrix& d, Exec exec = Exec::parallel);
bool is_derivation(const MetricLieAlgebra& l, const Matrix& d, Exec exec = Exec::parallel);
/// Index of pair (i, j), i < j, in leibniz_defects order.
std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j);

/// Basis of Der(L) as matrices, from the nullspace of the full Leibniz system.
std::vector<Matrix> derivation_algebra(const MetricLieAlgebra& l);

struct Subalgebra {
  MetricLieAlgebra algebra;
  /// Columns are the chosen basis of the subspace in ambient coordinates.
  Matrix inclusion;
  /// Gram-orthogonal projection onto the subspace, in sub coordinates.
  Matrix projection;
};

/// Gram-orthogonal basis of ξ^⊥ and, if it closes under the bracket, the
/// induced metric Lie algebra.
std::optional<Subalgebra> orthogonal_complement_subalgebra(const MetricLieAlgebra& l, std::span<const Rational> xi,
                                                           Exec exec = Exec::parallel);
/// Closure test only.
bool orthogonal_complement_closes(const MetricLieAlgebra& l, std::span<const Rational> xi);
/// Gram-orthogonal basis of ξ^⊥.
std::vector<Vector> orthogonal_complement_basis(const MetricLieAlgebra& l, std::span<const Rational> xi);

/// Span basis of [x, y] over x in `left`, y in `right`.
std::vector<Vector> bracket_span(const MetricLieAlgebra& l, const std::vector<Vector>& left,
                                 const std::vector<Vector>& right);
std::vector<Vector> derived_subalgebra(const MetricLieAlgebra& l);
bool is_nilpotent(const MetricLieAlgebra& l);
bool is_solvable(const MetricLieAlgebra& l);
/// Solvable and ad(x) has rational spectrum for every basis x and for eight
/// seeded random x. A semi-decision: true for every triangular algebra.
bool is_completely_solvable(const MetricLieAlgebra& l);

}  // namespace rsol
