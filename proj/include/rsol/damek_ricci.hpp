#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsol/htype.hpp"
#include "rsol/hypersurface.hpp"

namespace rsol {

/// Orthonormal basis: B at a_index = 0, 𝔳 at [1, n + 1), 𝔷 after that.
struct DamekRicciAlgebra {
  MetricLieAlgebra base;
  HTypeAlgebra htype;
  std::size_t a_index = 0;
  std::string name;

  std::size_t n() const { return htype.n(); }
  std::size_t m() const { return htype.m(); }
  /// aB + U + Z in ambient coordinates.
  Vector compose(const Rational& a, std::span<const Rational> u, std::span<const Rational> z) const;
  Vector compose(const Rational& a, std::span<const Rational> u) const;
  /// −(m + n/4)
  Rational einstein_constant() const;
};

/// [B,U] = ½U on 𝔳 and [B,Z] = Z on 𝔷.
DamekRicciAlgebra extend(const HTypeAlgebra& h);

/// Whether the orthogonal complement of ξ closes under the bracket.
bool admissible_normal(const DamekRicciAlgebra& d, std::span<const Rational> xi);
/// Whether ξ has a nonzero 𝔷-component.
bool has_center_component(const DamekRicciAlgebra& d, std::span<const Rational> xi);

struct DamekRicciClosedForm {
  Matrix shape;
  Rational trace;
  Matrix jacobi;
  Matrix ricci;
};

/// Block formulas for ξ = aB + U on the frame ℝ(|U|²B − aU) ⊕ (𝔍U)^⊥ ⊕ 𝔍U ⊕ 𝔷,
/// written in the coordinates of `s`. Throws std::invalid_argument unless
/// a² + |U|² = 1.
DamekRicciClosedForm closed_form_hypersurface(const DamekRicciAlgebra& d, const Rational& a,
                                              std::span<const Rational> u, const Subalgebra& s);

/// (1 + 4m̃)/4 with m̃ = −m − n/4.
Rational vertical_soliton_constant(const DamekRicciAlgebra& d);

/// Rational (a, U) on a² + |U|² = 1 by stereographic projection from (1, 0).
/// Seeds whose point has a = 0 or U = 0 are skipped, so both parts are nonzero.
std::pair<Rational, Vector> mixed_normal(const DamekRicciAlgebra& d, std::uint64_t seed);

}  // namespace rsol
