#include "rsol/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "rsol/hypersurface.hpp"
#include "rsol/oracles.hpp"
#include "rsol/spaces.hpp"

namespace rsol {

namespace {

Json pair_json(const std::optional<BasisPair>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

Json spectrum_json(const std::vector<Eigenvalue>& ev) {
  Json out = Json::array();
  for (const auto& e : ev) out.push_back(Json::array({rational_json(e.value), e.multiplicity}));
  return out;
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string seeded(const std::string& kind, std::uint64_t seed) { return kind + ":rand:" + std::to_string(seed); }

SweepCase row(std::string space, std::string xi, bool expected) { return {std::move(space), std::move(xi), expected, {}, {}, {}}; }

SweepCase einstein_row(std::string space, std::string xi) {
  SweepCase c = row(std::move(space), std::move(xi), true);
  c.expected_einstein = true;
  return c;
}

std::vector<SweepCase> thm2_cases(std::uint64_t s) {
  std::string v = seeded("v", s), dp = "v:delta+:" + std::to_string(s), dm = "v:delta-:" + std::to_string(s);
  return {einstein_row("N(1,1)", v),
          row("N(1,2)", v, true),
          row("N(2,1)", v, true),
          row("N(3,1,0)", v, true),
          row("N(3,1,1)", v, false),
          row("N(4,1)", dp, true),
          row("N(4,1)", dm, true),
          row("N(4,1)", "v:mix:1/2", false),
          row("N(5,1)", v, false),
          row("N(6,1)", v, false),
          row("N(7,1,0)", v, true),
          row("N(7,1,1)", v, false),
          row("N(8,1)", dp, true),
          row("N(8,1)", "v:mix:1/2", false),
          row("N(9,1)", v, false),
          row("N(2,1)", "raw:[3/5,0,0,0,4/5,0]", false)};
}

std::vector<SweepCase> thm3_cases(std::uint64_t s) {
  std::string a = seeded("a", s), v = seeded("v", s), av = seeded("av", s);
  SweepCase lohnherr = row("AN(1,1)", "v:basis:0", true);
  lohnherr.expected_c = ratio(-5, 4);
  lohnherr.expected_spectrum = std::vector<Eigenvalue>{{ratio(-1, 4), 1}, {0, 1}, {ratio(1, 2), 1}};
  SweepCase lohnherr_rand = row("AN(1,1)", v, true);
  lohnherr_rand.expected_c = ratio(-5, 4);
  return {row("AN(1,1)", a, true),     lohnherr,
          lohnherr_rand,               row("AN(1,2)", a, true),
          row("AN(1,2)", v, false),    row("AN(2,1)", a, true),
          row("AN(2,1)", v, false),    row("AN(3,1,0)", a, true),
          row("AN(3,1,0)", v, false),  row("AN(7,1,0)", a, true),
          row("AN(7,1,0)", v, false),  row("AN(1,1)", av, false),
          row("AN(2,1)", av, false),   row("AN(3,1,0)", av, false),
          row("AN(1,1)", "raw:[0,0,0,1]", false)};
}

std::vector<SweepCase> thm1_cases(std::uint64_t s) {
  return {einstein_row("SL(2)", seeded("any", s)),
          einstein_row("SL(2)", seeded("any", s + 1)),
          einstein_row("SL(2)", seeded("a", s)),
          einstein_row("SL(2)", "aHX:a=3/5"),
          einstein_row("RH(4)", seeded("any", s)),
          einstein_row("RH(4)", seeded("av", s + 1)),
          row("SL(3)", seeded("a", s), true),
          row("SL(3)", seeded("a", s + 1), true),
          row("SL(3)", "aHX:a=1", true),
          row("SL(3)", "aHX:a=1/3", false),
          row("SL(3)", "aHX:a=1/2@1", false),
          row("SL(3)", "aHX:a=0", false),
          row("SL(4)", seeded("a", s), true),
          row("SL(4)", seeded("a", s + 1), true),
          row("SL(4)", "aHX:a=1/3@1", false),
          row("SL(4)", "aHX:a=2/3@2", false),
          row("SL(4)", "aHX:a=0", false),
          row("SL(3)", "raw:[0,0,0,1,0]", false)};
}

Json oracle_row(const OracleResult& r) {
  Json j;
  j["space"] = r.space;
  j["xi_spec"] = r.subject;
  j["check"] = r.check;
  j["instances"] = r.instances;
  j["expected"] = true;
  j["verdict"] = r.pass();
  j["c"] = nullptr;
  if (r.failure) j["failure"] = *r.failure;
  j["agree"] = r.pass();
  return j;
}

std::string first_difference(const std::string& a, const std::string& b) {
  std::istringstream x(a), y(b);
  std::string lx, ly;
  for (std::size_t line = 1;; ++line) {
    bool gx = static_cast<bool>(std::getline(x, lx)), gy = static_cast<bool>(std::getline(y, ly));
    if (!gx && !gy) return "no difference";
    if (!gx) lx = "<end of file>";
    if (!gy) ly = "<end of file>";
    if (!gx || !gy || lx != ly)
      return "line " + std::to_string(line) + ": golden `" + lx + "` vs regenerated `" + ly + "`";
  }
}

}  // namespace

Json verdict_json(const SolitonVerdict& v) {
  Json j;
  j["is_soliton"] = v.is_soliton;
  j["c"] = v.c ? Json(rational_json(*v.c)) : Json(nullptr);
  j["einstein"] = v.einstein;
  if (v.eigenvalues) j["D_eigenvalues"] = spectrum_json(*v.eigenvalues);
  j["witness"] = pair_json(v.witness);
  j["witness_partner"] = pair_json(v.witness_partner);
  j["completely_solvable"] = v.completely_solvable;
  j["assumption"] = kSolitonAssumption;
  return j;
}

CheckOutcome run_check(std::string_view space_spec, std::string_view xi_spec) {
  CheckOutcome out;
  try {
    Space space = parse_space(space_spec);
    Normal nm = parse_normal(space, xi_spec);
    const auto& l = space.algebra();
    auto hs = construct(l, nm.xi);
    SolitonVerdict v = decide(hs.sub.algebra, gauss_ricci(hs));
    out.report = verdict_json(v);
    out.report["space"] = space.spec;
    out.report["xi_spec"] = nm.spec;
    if (!nm.detail.empty()) out.report["normal"] = nm.detail;
    out.report["xi"] = vector_json(nm.xi);
    out.report["dim"] = hs.sub.algebra.dim();
    out.report["verified"] = verify_verdict(hs.sub.algebra, v);
  } catch (const GrammarError& e) {
    out.exit_code = kExitGrammar;
    out.report = Json{{"error", e.what()}};
  } catch (const NotSubalgebraError& e) {
    out.exit_code = kExitNotSubalgebra;
    out.report = Json{{"error", e.what()}};
  } catch (const std::invalid_argument& e) {
    out.exit_code = kExitGrammar;
    out.report = Json{{"error", e.what()}};
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1", "thm2", "thm3", "oracles"};
  return names;
}

std::vector<SweepCase> suite_cases(std::string_view suite, std::uint64_t seed) {
  if (suite == "thm1") return thm1_cases(seed);
  if (suite == "thm2") return thm2_cases(seed);
  if (suite == "thm3") return thm3_cases(seed);
  if (suite == "oracles") return {};
  throw GrammarError("unknown suite \"" + std::string(suite) + "\"; expected thm1, thm2, thm3 or oracles");
}

Json evaluate_case(const SweepCase& c) {
  Json j;
  j["space"] = c.space;
  j["xi_spec"] = c.xi_spec;
  Space space = parse_space(c.space);
  Normal nm = parse_normal(space, c.xi_spec);
  if (!nm.detail.empty()) j["normal"] = nm.detail;
  j["expected"] = c.expected;
  if (c.expected_einstein) j["expected_einstein"] = *c.expected_einstein;
  if (c.expected_c) j["expected_c"] = rational_json(*c.expected_c);
  if (c.expected_spectrum) j["expected_D_eigenvalues"] = spectrum_json(*c.expected_spectrum);
  const auto& l = space.algebra();
  if (!orthogonal_complement_closes(l, nm.xi)) {
    j["subalgebra"] = false;
    j["verdict"] = false;
    j["c"] = nullptr;
    j["verified"] = !orthogonal_complement_subalgebra(l, nm.xi, Exec::serial).has_value();
    j["agree"] = !c.expected;
    return j;
  }
  auto hs = construct(l, nm.xi);
  const auto& sub = hs.sub.algebra;
  Matrix intrinsic = ricci(sub);
  SolitonVerdict v = decide(sub, intrinsic);
  j["subalgebra"] = true;
  j["verdict"] = v.is_soliton;
  j["c"] = v.c ? Json(rational_json(*v.c)) : Json(nullptr);
  j["einstein"] = v.einstein;
  if (v.eigenvalues) j["D_eigenvalues"] = spectrum_json(*v.eigenvalues);
  j["witness"] = pair_json(v.witness);
  j["witness_partner"] = pair_json(v.witness_partner);
  j["completely_solvable"] = v.completely_solvable;
  j["gauss_matches_intrinsic"] = gauss_ricci(hs) == intrinsic;
  j["verified"] = verify_verdict(sub, v);
  bool agree = v.is_soliton == c.expected;
  if (c.expected_einstein) agree = agree && v.einstein == *c.expected_einstein;
  if (c.expected_c) agree = agree && v.c == *c.expected_c;
  if (c.expected_spectrum) agree = agree && v.eigenvalues == *c.expected_spectrum;
  j["agree"] = agree;
  return j;
}

Json run_sweep(std::string_view suite, std::uint64_t seed, bool timestamp) {
  auto cases = suite_cases(suite, seed);
  Json rows = Json::array();
  if (suite == "oracles") {
    for (const auto& r : all_oracles(seed)) rows.push_back(oracle_row(r));
  } else {
    std::vector<Json> results(cases.size());
    long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      const auto& c = cases[static_cast<std::size_t>(i)];
      try {
        results[static_cast<std::size_t>(i)] = evaluate_case(c);
      } catch (const std::exception& e) {
        Json j;
        j["space"] = c.space;
        j["xi_spec"] = c.xi_spec;
        j["expected"] = c.expected;
        j["error"] = e.what();
        j["agree"] = false;
        results[static_cast<std::size_t>(i)] = std::move(j);
      }
    }
    for (auto& r : results) rows.push_back(std::move(r));
  }
  std::size_t agree = 0, unverified = 0;
  for (const auto& r : rows) {
    agree += r.at("agree").get<bool>();
    if (r.contains("verified") && !r.at("verified").get<bool>()) ++unverified;
    if (r.contains("gauss_matches_intrinsic") && !r.at("gauss_matches_intrinsic").get<bool>()) ++unverified;
  }
  Json report;
  report["format"] = "rsol-sweep-v1";
  report["suite"] = std::string(suite);
  report["seed"] = seed;
  report["version"] = kVersion;
  if (timestamp) report["generated_at"] = utc_now();
  report["assumption"] = kSolitonAssumption;
  report["rows"] = std::move(rows);
  Json summary;
  summary["rows"] = report["rows"].size();
  summary["agree"] = agree;
  summary["disagree"] = report["rows"].size() - agree;
  summary["unverified"] = unverified;
  summary["passed"] = agree == report["rows"].size() && unverified == 0;
  report["summary"] = std::move(summary);
  return report;
}

bool sweep_passed(const Json& report) { return report.at("summary").at("passed").get<bool>(); }

std::string render_table(const Json& report) {
  std::ostringstream os;
  os << "suite " << report.at("suite").get<std::string>() << " (seed " << report.at("seed").get<std::uint64_t>()
     << ")\n";
  os << std::left << std::setw(11) << "space" << std::setw(26) << "xi" << std::setw(10) << "expected"
     << std::setw(10) << "verdict" << std::setw(14) << "c" << "agree\n";
  for (const auto& r : report.at("rows")) {
    std::string xi = r.at("xi_spec").get<std::string>();
    if (r.contains("check")) xi = r.at("check").get<std::string>();
    std::string verdict = r.contains("verdict") ? (r.at("verdict").get<bool>() ? "true" : "false") : "error";
    if (r.contains("subalgebra") && !r.at("subalgebra").get<bool>()) verdict = "no-sub";
    std::string c = r.contains("c") && r.at("c").is_string() ? r.at("c").get<std::string>() : "-";
    os << std::setw(11) << r.at("space").get<std::string>() << std::setw(26) << xi << std::setw(10)
       << (r.at("expected").get<bool>() ? "true" : "false") << std::setw(10) << verdict << std::setw(14) << c
       << (r.at("agree").get<bool>() ? "yes" : "NO") << "\n";
  }
  const auto& s = report.at("summary");
  os << s.at("agree").get<std::size_t>() << "/" << s.at("rows").get<std::size_t>() << " rows agree, "
     << s.at("unverified").get<std::size_t>() << " unverified: " << (s.at("passed").get<bool>() ? "PASS" : "FAIL")
     << "\n";
  return os.str();
}

std::vector<std::string> verify_goldens(const std::filesystem::path& dir) {
  std::vector<std::string> problems;
  for (const auto& suite : suite_names()) {
    auto path = dir / (suite + ".json");
    if (!std::filesystem::exists(path)) {
      problems.push_back("missing golden file " + path.string());
      continue;
    }
    Json golden;
    try {
      golden = read_json_file(path);
    } catch (const std::exception& e) {
      problems.push_back(e.what());
      continue;
    }
    golden.erase("generated_at");
    std::uint64_t seed = golden.contains("seed") && golden["seed"].is_number_unsigned() ? golden["seed"].get<std::uint64_t>() : 1;
    std::string want = dump(golden, true), got = dump(run_sweep(suite, seed), true);
    if (want != got) problems.push_back(path.string() + " differs, " + first_difference(want, got));
  }
  return problems;
}

}  // namespace rsol
