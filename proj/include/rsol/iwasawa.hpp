#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsol/hypersurface.hpp"
#include "rsol/metric_lie.hpp"

namespace rsol {

/// Positive roots λ_i − λ_j (i < j) of 𝔰𝔩(n); every root space is ℝE_ij.
struct RootDatum {
  std::size_t rank = 0;
  /// (i, j) with λ = λ_i − λ_j.
  std::vector<std::pair<std::size_t, std::size_t>> roots;
  /// Values λ(h_k) on the 𝔞 basis.
  std::vector<Vector> covectors;
  /// Indices of the simple roots (j = i + 1).
  std::vector<std::size_t> simple;
  /// Basis index of the root vector spanning 𝔤_λ.
  std::vector<std::size_t> root_space;
  /// H_λ in 𝔞-basis coordinates.
  std::vector<Vector> h_of;
  /// cartan[α][λ] = 2⟨α,λ⟩/|α|².
  std::vector<std::vector<long>> cartan;

  std::optional<std::size_t> find(const Vector& covector) const;
  /// λ + μ as a root index, if it is a root.
  std::optional<std::size_t> sum(std::size_t l, std::size_t m) const;
  std::optional<std::size_t> difference(std::size_t l, std::size_t m) const;
};

/// Solvable Iwasawa algebra 𝔞 ⊕ 𝔫 of SL(n,ℝ)/SO(n). The invariant form is
/// B(X,Y) = 2·tr(XY), a positive multiple of the Killing form 2n·tr(XY),
/// so that |α| = 1 and every E_ij is a unit vector.
struct IwasawaAlgebra {
  std::size_t n = 0;
  MetricLieAlgebra base;
  RootDatum datum;
  /// n×n realization of each basis vector: the 𝔞 basis, then E_ij.
  std::vector<Matrix> realization;
  Rational killing_scale;
  Rational form_scale;
  std::string name;

  std::size_t rank() const { return datum.rank; }
  Matrix to_matrix(std::span<const Rational> x) const;
  /// Coordinates of the B_θ-orthogonal projection of X onto 𝔞 ⊕ 𝔫.
  Vector project(const Matrix& x) const;
  /// Like project, but throws std::invalid_argument unless X ∈ 𝔞 ⊕ 𝔫.
  Vector from_matrix(const Matrix& x) const;
  /// θX = −Xᵀ
  static Matrix theta(const Matrix& x);
  Rational form(const Matrix& x, const Matrix& y) const;
  /// ⟨X,Y⟩_{B_θ} = −B(θX, Y)
  Rational b_theta(const Matrix& x, const Matrix& y) const;
  /// H_λ and the unit root vector X_λ in ambient coordinates.
  Vector h_root(std::size_t root) const;
  Vector x_root(std::size_t root) const;
  /// |λ|² = B(H_λ, H_λ)
  Rational root_norm2(std::size_t root) const;
  /// Ambient 𝔞 basis vectors.
  std::vector<Vector> a_basis() const;
};

IwasawaAlgebra build_sl(std::size_t n);

/// Checks B(H_λ,H) = λ(H), integrality of the Cartan integers and
/// [𝔤_λ,𝔤_μ] ⊆ 𝔤_{λ+μ}; returns the first failure.
std::optional<std::string> check_root_datum(const IwasawaAlgebra& g);
/// ⟨X,Y⟩ = ⟨X_𝔞,Y_𝔞⟩_{B_θ} + ½⟨X_𝔫,Y_𝔫⟩_{B_θ} on all basis pairs.
bool metric_relation_holds(const IwasawaAlgebra& g);

/// Whether (𝔞 ⊕ 𝔫) ⊖ ℝξ closes under the bracket.
bool subalgebra_normal_check(const IwasawaAlgebra& g, std::span<const Rational> xi);
/// ξ ∈ 𝔞, or ξ ∈ ℝH_α ⊕ 𝔤_α for a simple root α.
bool normal_has_root_form(const IwasawaAlgebra& g, std::span<const Rational> xi);

/// ξ = aH_α + bX_α for simple root `alpha` (a datum root index).
struct RootNormal {
  Rational a, b;
  std::size_t alpha;
};
/// Throws std::invalid_argument unless α is simple and a²|α|² + b² = 1.
Vector normal_vector(const IwasawaAlgebra& g, const RootNormal& r);
/// (a, b) = (2t, 1 − t²)/(1 + t²), the conic through (0, 1); needs |α| = 1.
RootNormal conic_normal(const IwasawaAlgebra& g, std::size_t alpha, const Rational& t);
/// U = b|α|⁻¹H_α − a|α|X_α
Vector companion_u(const IwasawaAlgebra& g, const RootNormal& r);

/// ¼⟨[X,Y] + [θX,Y] − [X,θY], ·⟩_{B_θ} solved against the metric.
Vector koszul_via_bt(const IwasawaAlgebra& g, std::span<const Rational> x, std::span<const Rational> y);
/// ∇_ξξ = b²H_α − ab|α|²X_α
Vector nabla_xi_xi_closed_form(const IwasawaAlgebra& g, const RootNormal& r);

/// S_ξY_λ = (a/2)|α|²A_{α,λ}Y_λ − (b/2)[Y_λ,X_α] + (b/2)[Y_λ,θX_α] for λ ≠ α
/// and Y_λ ∈ 𝔤_λ.
Vector closed_form_shape(const IwasawaAlgebra& g, const RootNormal& r, std::size_t lambda,
                         std::span<const Rational> y);

/// When λ + α is a root and λ − α is not: Y_{λ+α} = [Y_λ,X_α]/(|α|√(−A_{α,λ}))
/// and the shape operator on Y_λ, Y_{λ+α} from the specialized formulas.
struct ShapeChain {
  Vector y, y_next, y_next2;
  Vector shape_y, shape_y_next;
  Rational mu;
};
ShapeChain shape_chain(const IwasawaAlgebra& g, const RootNormal& r, std::size_t lambda);

/// a|α|²(1 + ½ Σ_{λ ≠ α} A_{α,λ}), summing over positive roots.
Rational closed_form_trace(const IwasawaAlgebra& g, const RootNormal& r);

/// (v, Dv) pairs for D = tr(S)S − (R_ξ + S²) + c·id on 𝔞 ⊖ ℝH_α, on
/// 𝔤_β ⊕ 𝔤_{β+α} for every β with β + α a root and β − α not, and on U.
/// Throws std::logic_error if no such β exists at rank ≥ 2.
std::vector<std::pair<Vector, Vector>> closed_form_d_blocks(const IwasawaAlgebra& g, const RootNormal& r,
                                                            const Rational& c);

/// Rational unit vector in 𝔞 on the quadric of the metric.
Vector unit_in_a(const IwasawaAlgebra& g, std::uint64_t seed);
/// tr(ad H)·ad(H) restricted to the sub basis.
Matrix horosphere_certificate(const IwasawaAlgebra& g, std::span<const Rational> h, const Subalgebra& s);

/// ℝH^n as 𝔞 ⊕ ℝ^{n−1} with [B,X] = X; orthonormal, B at index 0.
MetricLieAlgebra build_real_hyperbolic(std::size_t n);

}  // namespace rsol
