#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsol/clifford.hpp"
#include "rsol/hypersurface.hpp"
#include "rsol/metric_lie.hpp"

namespace rsol {

/// Orthonormal basis: 𝔳 at indices [0, n), 𝔷 at [n, n + m).
struct HTypeAlgebra {
  MetricLieAlgebra base;
  CliffordModule module;
  std::string name;

  std::size_t n() const { return module.n; }
  std::size_t m() const { return module.m; }
  /// Embeds a 𝔳-vector (length n) into the algebra.
  Vector from_v(std::span<const Rational> u) const;
  /// Embeds a 𝔷-vector (length m) into the algebra.
  Vector from_z(std::span<const Rational> z) const;
};

struct XiFrame {
  Vector xi;
  /// J_{Z_k} ξ for k = 1..m; orthonormal.
  std::vector<Vector> j_xi_basis;
  /// Gram-orthogonal basis of 𝔳 ⊖ (ℝξ ⊕ 𝔍ξ).
  std::vector<Vector> perp_basis;
};

struct HTypePredicates {
  bool jxi_abelian;
  bool perp_abelian;
  bool cross_bracket_zero;
  int count() const { return int(jxi_abelian) + int(perp_abelian) + int(cross_bracket_zero); }
};

HTypeAlgebra build_htype(const CliffordModule& c);
/// Throws std::invalid_argument unless ξ is a unit vector in 𝔳.
XiFrame xi_frame(const HTypeAlgebra& h, std::span<const Rational> xi);
HTypePredicates predicates(const HTypeAlgebra& h, const XiFrame& f);

/// −(m/2) on 𝔳 and n/4 on 𝔷.
Matrix htype_closed_form_ricci(const HTypeAlgebra& h);
/// id on 𝔳, 2·id on 𝔷.
Matrix nilsoliton_derivation(const HTypeAlgebra& h);
/// −(m/2) on (𝔍ξ)^⊥, (1−m)/2 on 𝔍ξ and (n−2)/4 on 𝔷, in the sub basis.
Matrix hypersurface_ricci_closed_form(const HTypeAlgebra& h, const XiFrame& f, const Subalgebra& s);

/// Random unit vector in 𝔳 (stereographic).
Vector random_unit_in_v(const HTypeAlgebra& h, std::uint64_t seed);
/// Unit vector in Δ₊ (sign > 0) or Δ₋; seed 0 gives the first one found.
Vector half_spin_unit(const HTypeAlgebra& h, int sign, std::uint64_t seed);
/// ((1−t²)ξ₊ + 2tξ₋)/(1+t²).
Vector half_spin_mix(const HTypeAlgebra& h, const Rational& t);

}  // namespace rsol
