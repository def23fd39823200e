#include "rsol/io.hpp"

#include <fstream>
#include <unistd.h>

namespace rsol {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw FormatError(std::string("bad ") + what);
  return j.get<std::size_t>();
}

void check_format(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("document is not an object");
  if (j.contains("format") && j.at("format") != name)
    throw FormatError(std::string("expected format ") + name);
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw FormatError("expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json export_mla(const MetricLieAlgebra& l) {
  Json j;
  j["format"] = "mla-v1";
  j["dim"] = l.dim();
  j["labels"] = l.labels();
  j["gram"] = matrix_json(l.gram());
  Json brackets = Json::array();
  for (const auto& t : l.triples()) brackets.push_back(Json::array({t.i, t.j, t.k, rational_json(t.value)}));
  j["brackets"] = std::move(brackets);
  return j;
}

MetricLieAlgebra import_mla(const Json& j) {
  check_format(j, "mla-v1");
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) throw FormatError("dim must be a positive integer");
  std::size_t dim = dim_j.get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = j.at("labels");
    if (!lj.is_array() || lj.size() != dim) throw FormatError("labels must list one name per basis vector");
    for (const auto& s : lj) {
      if (!s.is_string()) throw FormatError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  const Json& gj = field(j, "gram");
  if (!gj.is_array() || gj.size() != dim) throw FormatError("gram must be a dim × dim array");
  Matrix gram(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!gj[r].is_array() || gj[r].size() != dim) throw FormatError("gram must be a dim × dim array");
    for (std::size_t c = 0; c < dim; ++c) gram(r, c) = rational_from_json(gj[r][c]);
  }
  std::vector<BracketTriple> triples;
  const Json& bj = field(j, "brackets");
  if (!bj.is_array()) throw FormatError("brackets must be an array");
  for (const auto& t : bj) {
    if (!t.is_array() || t.size() != 4) throw FormatError("bracket entries are [i, j, k, \"p/q\"]");
    std::size_t a = index_from_json(t[0], dim, "bracket index"), b = index_from_json(t[1], dim, "bracket index"),
                k = index_from_json(t[2], dim, "bracket index");
    if (a >= b) throw FormatError("bracket entries need i < j");
    triples.push_back({a, b, k, rational_from_json(t[3])});
  }
  return MetricLieAlgebra(dim, triples, std::move(gram), std::move(labels));
}

Json export_cliff(const CliffordModule& c) {
  Json j;
  j["format"] = "cliff-v1";
  j["m"] = c.m;
  j["n"] = c.n;
  if (c.parity)
    j["k"] = Json::array({c.parity->first, c.parity->second});
  else
    j["k"] = c.k;
  Json gens = Json::array();
  for (const auto& g : c.generators) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      Json row = Json::array();
      for (const auto& x : g.row(r)) {
        if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw std::logic_error("generator entry is not a small integer");
        row.push_back(x.get_num().get_si());
      }
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  j["generators"] = std::move(gens);
  return j;
}

CliffordModule import_cliff(const Json& j) {
  check_format(j, "cliff-v1");
  CliffordModule c;
  const Json& mj = field(j, "m");
  const Json& nj = field(j, "n");
  if (!mj.is_number_integer() || !nj.is_number_integer() || mj.get<long long>() < 1 || nj.get<long long>() < 1)
    throw FormatError("m and n must be positive integers");
  c.m = mj.get<std::size_t>();
  c.n = nj.get<std::size_t>();
  const Json& kj = field(j, "k");
  if (kj.is_array()) {
    if (kj.size() != 2 || !kj[0].is_number_integer() || !kj[1].is_number_integer())
      throw FormatError("k must be an integer or [k+, k-]");
    c.parity.emplace(kj[0].get<std::size_t>(), kj[1].get<std::size_t>());
  } else if (kj.is_number_integer()) {
    c.k = kj.get<std::size_t>();
  } else {
    throw FormatError("k must be an integer or [k+, k-]");
  }
  const Json& gj = field(j, "generators");
  if (!gj.is_array() || gj.size() != c.m) throw FormatError("expected m generators");
  for (const auto& g : gj) {
    if (!g.is_array() || g.size() != c.n) throw FormatError("generators must be n × n");
    Matrix mat(c.n, c.n);
    for (std::size_t r = 0; r < c.n; ++r) {
      if (!g[r].is_array() || g[r].size() != c.n) throw FormatError("generators must be n × n");
      for (std::size_t s = 0; s < c.n; ++s) {
        if (!g[r][s].is_number_integer()) throw FormatError("generator entries must be integers");
        mat(r, s) = Rational(Integer(std::to_string(g[r][s].get<long long>())));
      }
    }
    c.generators.push_back(std::move(mat));
  }
  if (auto failure = check_invariants(c)) throw FormatError("Clifford relations fail: " + *failure);
  return c;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump() + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace rsol
