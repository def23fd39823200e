#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsol/htype.hpp"
#include "rsol/metric_lie.hpp"

namespace rsol {

inline constexpr const char* kSolitonAssumption = "alg-soliton ⟺ soliton requires complete solvability";

using BasisPair = std::pair<std::size_t, std::size_t>;

struct SolitonVerdict {
  bool is_soliton = false;
  std::optional<Rational> c;
  /// D = Ric − c·id.
  std::optional<Matrix> derivation;
  bool einstein = false;
  /// A pair whose Leibniz condition no c satisfies, or the second pair of
  /// two with conflicting ratios (the first is witness_partner).
  std::optional<BasisPair> witness;
  std::optional<BasisPair> witness_partner;
  /// F(Ric)(e_i, e_j) at the witness.
  Vector witness_defect;
  /// Spectrum of D when it splits over the rationals.
  std::optional<std::vector<Eigenvalue>> eigenvalues;
  bool completely_solvable = false;
};

/// Solves F(Ric)(e_i,e_j) = c·(−[e_i,e_j]) for a single c over all i < j.
SolitonVerdict decide(const MetricLieAlgebra& l, Exec exec = Exec::parallel);
SolitonVerdict decide(const MetricLieAlgebra& l, const Matrix& ric, Exec exec = Exec::parallel);
/// Re-checks a certificate or witness with the serial reference kernels.
bool verify_verdict(const MetricLieAlgebra& l, const SolitonVerdict& v);
std::optional<Rational> decide_einstein(const MetricLieAlgebra& l);
/// decide(𝔰) agrees with "at least two of the three predicates hold".
bool theorem_predicate_crosscheck(const HTypeAlgebra& h, const XiFrame& f);

}  // namespace rsol
