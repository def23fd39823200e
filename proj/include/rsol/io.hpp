#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "rsol/clifford.hpp"
#include "rsol/metric_lie.hpp"

namespace rsol {

using Json = nlohmann::ordered_json;

/// A document that does not follow its schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q" string.
Json rational_json(const Rational& q);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
Json vector_json(std::span<const Rational> v);
Json matrix_json(const Matrix& m);

/// {format: "mla-v1", dim, labels, gram: [["p/q", ...]], brackets: [[i, j, k, "p/q"]]}
/// with one bracket triple per nonzero constant, i < j.
Json export_mla(const MetricLieAlgebra& l);
/// Throws FormatError on schema violations; algebra validation throws
/// std::invalid_argument.
MetricLieAlgebra import_mla(const Json& j);

/// {format: "cliff-v1", m, n, k or [k+, k-], generators: integer matrices}
Json export_cliff(const CliffordModule& c);
/// Throws FormatError on schema violations or failed Clifford relations.
CliffordModule import_cliff(const Json& j);

std::string dump(const Json& j, bool pretty);
Json read_json_file(const std::filesystem::path& path);
/// Writes a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rsol
