#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsol/io.hpp"
#include "rsol/soliton.hpp"

namespace rsol {

#ifdef RSOL_VERSION
inline constexpr const char* kVersion = RSOL_VERSION;
#else
inline constexpr const char* kVersion = "unknown";
#endif

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitGrammar = 2;
inline constexpr int kExitNotSubalgebra = 3;
inline constexpr int kExitIo = 4;

/// {is_soliton, c, einstein, D_eigenvalues, witness, witness_partner,
/// completely_solvable, assumption}; D_eigenvalues is omitted when D does
/// not split over the rationals.
Json verdict_json(const SolitonVerdict& v);

struct CheckOutcome {
  int exit_code = kExitOk;
  /// The verdict with its inputs, or {"error": ...}.
  Json report;
};

/// Grammar errors and non-closing complements are reported through the
/// exit code, not thrown.
CheckOutcome run_check(std::string_view space, std::string_view xi);

/// One sweep row with its transcribed expectation.
struct SweepCase {
  std::string space;
  std::string xi_spec;
  bool expected = false;
  std::optional<bool> expected_einstein;
  std::optional<Rational> expected_c;
  std::optional<std::vector<Eigenvalue>> expected_spectrum;
};

/// thm1, thm2, thm3, oracles.
const std::vector<std::string>& suite_names();
/// Throws GrammarError for an unknown suite; empty for "oracles".
std::vector<SweepCase> suite_cases(std::string_view suite, std::uint64_t seed);
/// Decides the case and re-verifies the result with the serial kernels.
Json evaluate_case(const SweepCase& c);

/// Rows execute concurrently; the report is assembled in case order.
Json run_sweep(std::string_view suite, std::uint64_t seed, bool timestamp = false);
bool sweep_passed(const Json& report);
/// Fixed-width table of the rows and the summary line.
std::string render_table(const Json& report);

/// Regenerates every suite at the seed stored in `dir`/<suite>.json and
/// compares byte-for-byte, ignoring "generated_at". One message per
/// mismatch or missing file.
std::vector<std::string> verify_goldens(const std::filesystem::path& dir);

}  // namespace rsol
