#pragma once

#include <stdexcept>
#include <vector>

#include "rsol/metric_lie.hpp"

namespace rsol {

/// ξ^⊥ is not closed under the bracket.
class NotSubalgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AmbientGeometry {
  Connection connection;
  Matrix ricci;
};

AmbientGeometry ambient_geometry(const MetricLieAlgebra& l, Exec exec = Exec::parallel);

struct Hypersurface {
  Vector xi;
  Subalgebra sub;
  /// Operators on the sub basis coordinates.
  Matrix shape;
  Matrix jacobi;
  /// (Ric^M restricted to the tangent space)ᵀ.
  Matrix ambient_ricci;
};

/// Throws std::invalid_argument if ξ is not a unit vector and
/// NotSubalgebraError if ξ^⊥ does not close.
Hypersurface construct(const MetricLieAlgebra& ambient, const AmbientGeometry& geom, std::span<const Rational> xi,
                       Exec exec = Exec::parallel);
Hypersurface construct(const MetricLieAlgebra& ambient, std::span<const Rational> xi, Exec exec = Exec::parallel);

/// Ric = (Ric^M|TS)ᵀ + tr(S)S − S² − R_ξ
Matrix gauss_ricci(const Hypersurface& h);

/// Operator on the sub basis sending each ambient frame vector to the
/// matching image. Frames must span the subspace.
Matrix operator_on_sub(const Subalgebra& s, const std::vector<Vector>& frame, const std::vector<Vector>& images);
/// Operator acting by the scalar `values[b]` on span(blocks[b]).
Matrix operator_from_blocks(const Subalgebra& s, const std::vector<std::vector<Vector>>& blocks,
                            const std::vector<Rational>& values);

}  // namespace rsol
