#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rsol/exact.hpp"

namespace rsol {

struct CliffordModule {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Matrix> generators;
  /// Set when m ≡ 3 mod 4.
  std::optional<std::pair<std::size_t, std::size_t>> parity;
  /// Multiplicity when m is not 3 mod 4.
  std::size_t k = 0;

  /// J_Z = Σ z_i J_i.
  Matrix j_map(std::span<const Rational> z) const;
  /// J_1 ⋯ J_m.
  Matrix volume_element() const;
};

struct HalfSpinSplit {
  Matrix omega;
  std::vector<Vector> delta_plus;
  std::vector<Vector> delta_minus;
};

/// Real dimension of the irreducible module over Cl(m).
std::size_t irreducible_dim(std::size_t m);
/// Irreducible generators with entries in {0, ±1}; for m ≡ 3 mod 4 the
/// volume element is +I.
std::vector<Matrix> build_generators(std::size_t m);
/// k copies of the irreducible module. Throws for m ≡ 3 mod 4.
CliffordModule assemble(std::size_t m, std::size_t k);
/// k₊ copies of 𝔡₊ followed by k₋ copies of 𝔡₋. Throws unless m ≡ 3 mod 4.
CliffordModule assemble(std::size_t m, std::size_t k_plus, std::size_t k_minus);
/// Throws std::invalid_argument when ω² ≠ I or a generator fails to swap Δ±
/// (m even).
HalfSpinSplit half_spin_split(const CliffordModule& c);
/// Empty when every invariant holds, else a description of the first failure.
std::optional<std::string> check_invariants(const CliffordModule& c);

}  // namespace rsol
