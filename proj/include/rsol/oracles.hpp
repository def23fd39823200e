#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsol/damek_ricci.hpp"
#include "rsol/htype.hpp"
#include "rsol/iwasawa.hpp"

/// Cross-checks of the closed-form formulas against the generic
/// connection/curvature machinery, and soundness checks of the decision.
namespace rsol {

struct OracleResult {
  std::string check;
  std::string space;
  std::string subject;
  std::size_t instances = 0;
  /// First failing instance, if any.
  std::optional<std::string> failure;

  bool pass() const { return !failure; }
};

/// The H-type spaces of the sweeps, N(1,1) through N(9,1).
std::vector<std::string> htype_sweep_spaces();
/// The Damek-Ricci spaces checked against the closed forms.
std::vector<std::string> damek_ricci_sweep_spaces();

/// J_Z² = −|Z|²I, ⟨J_ZU,J_ZV⟩ = |Z|²⟨U,V⟩, ⟨J_ZU,V⟩ = ⟨[U,V],Z⟩ and
/// [U,J_XU] = |U|²X on `trials` seeded random rational inputs.
OracleResult htype_identities(const HTypeAlgebra& h, std::uint64_t seed, int trials = 20);
/// Ric = −(m/2)id on 𝔳, (n/4)id on 𝔷.
OracleResult htype_ricci_closed_form(const HTypeAlgebra& h);
/// Ric = −(m + n/4)id.
OracleResult damek_ricci_einstein(const DamekRicciAlgebra& d);

/// Gauss-equation Ricci equals the intrinsic Ricci of ξ^⊥ for every normal
/// spec given (grammar of parse_normal).
OracleResult gauss_identity(const std::string& space, const std::vector<std::string>& normals);
/// gauss_identity over H-type, Damek-Ricci, SL(2..4) and RH(4) normals.
std::vector<OracleResult> master_identity_suite(std::uint64_t seed);

/// Shape, trace, Jacobi and Ricci block formulas for ξ = aB + U.
OracleResult damek_ricci_closed_form(const DamekRicciAlgebra& d, std::uint64_t seed);

/// Closed-form connection, shape, chain and D-block formulas against the
/// generic computation, on degenerate and conic normals of every simple root.
std::vector<OracleResult> iwasawa_closed_form_suite(const IwasawaAlgebra& g);
/// ξ^⊥ closes iff ξ is in 𝔞 or ℝH_α ⊕ 𝔤_α with α simple, on random ξ.
OracleResult iwasawa_subalgebra_lemma(const IwasawaAlgebra& g, std::uint64_t seed, int trials = 100);
/// Horospheres: S = ad H, the verdict is a soliton with c = k and
/// D = tr(ad H)·ad H.
OracleResult horosphere_certificates(const IwasawaAlgebra& g, std::uint64_t seed, int samples = 10);

/// Certificate re-verification, basis-change invariance and metric-scaling
/// invariance on the fixed five-instance set.
std::vector<OracleResult> soundness_suite(std::uint64_t seed);

/// Every suite above at the given seed.
std::vector<OracleResult> all_oracles(std::uint64_t seed);

/// Product of random integer shears.
Matrix random_unimodular(std::size_t n, Sampler& rng);

}  // namespace rsol
