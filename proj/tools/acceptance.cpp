// Prints one PASS/FAIL line per acceptance criterion; exit 1 if any fails.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsol/oracles.hpp"
#include "rsol/report.hpp"
#include "rsol/spaces.hpp"

using namespace rsol;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
  void absorb(const OracleResult& r) {
    require(r.pass(), r.check + " on " + r.space + " (" + r.failure.value_or("") + ")");
  }
};

void print(int id, const std::string& title, Line& l, double seconds) {
  std::cout << (l.pass ? "PASS" : "FAIL") << "  " << id << "  " << std::left << std::setw(34) << title << std::right
            << std::fixed << std::setprecision(2) << std::setw(7) << seconds << " s  " << l.detail.str() << "\n";
}

std::size_t sweep_rows(const Json& rep) { return rep.at("summary").at("rows").get<std::size_t>(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance run"};
  std::uint64_t seed = 1;
  std::string goldens;
  app.add_option("--seed", seed, "seed for every sampled input")->capture_default_str();
  app.add_option("--goldens", goldens, "also compare the sweeps against <dir>/<suite>.json");
  CLI11_PARSE(app, argc, argv);

  const auto start = Clock::now();
  bool all = true;
  std::map<std::string, std::string> first_dump;

  auto sweep = [&](const std::string& suite, Line& l) {
    Json rep = run_sweep(suite, seed);
    first_dump[suite] = dump(rep, true);
    l.require(sweep_passed(rep), suite + " sweep agreement");
    const auto& s = rep.at("summary");
    l.detail << suite << " " << s.at("agree").get<std::size_t>() << "/" << sweep_rows(rep) << " agree; ";
    return rep;
  };

  {
    auto t0 = Clock::now();
    Line l;
    std::size_t spaces = 0;
    for (const auto& spec : htype_sweep_spaces()) {
      l.absorb(htype_identities(*parse_space(spec).htype, seed, 20));
      ++spaces;
    }
    double t = since(t0);
    l.require(t < 10, "runtime under 10 s");
    l.detail << spaces << " spaces x 20 inputs";
    print(1, "H-type identities", l, t);
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    for (const auto& spec : htype_sweep_spaces()) l.absorb(htype_ricci_closed_form(*parse_space(spec).htype));
    for (const auto& spec : damek_ricci_sweep_spaces()) l.absorb(damek_ricci_einstein(*parse_space(spec).damek_ricci));
    l.detail << htype_sweep_spaces().size() << " N(m,k), " << damek_ricci_sweep_spaces().size() << " AN(m,k)";
    print(2, "closed-form Ricci", l, since(t0));
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    std::size_t instances = 0;
    for (const auto& r : master_identity_suite(seed)) {
      l.absorb(r);
      instances += r.instances;
    }
    double t = since(t0);
    l.require(instances >= 120, "at least 120 hypersurfaces");
    l.require(t < 60, "runtime under 60 s");
    l.detail << instances << " hypersurfaces";
    print(3, "Gauss equation = intrinsic Ricci", l, t);
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    sweep("thm2", l);
    auto t1 = Clock::now();
    CheckOutcome big = run_check("N(8,1)", "v:delta+:" + std::to_string(seed));
    double single = since(t1);
    l.require(big.exit_code == kExitOk && big.report.at("is_soliton") == true, "N(8,1) half-spin normal is a soliton");
    l.require(big.report.value("dim", 0) == 23, "N(8,1) hypersurface has dimension 23");
    l.require(single < 5, "N(8,1) decision under 5 s");
    l.detail << "N(8,1) decision " << std::fixed << std::setprecision(2) << single << " s";
    print(4, "H-type hypersurface sweep", l, since(t0));
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    sweep("thm3", l);
    CheckOutcome w = run_check("AN(1,1)", "v:basis:0");
    l.require(w.exit_code == kExitOk && w.report.at("is_soliton") == true, "AN(1,1) 𝔳-normal is a soliton");
    l.require(w.report.value("c", Json()) == "-5/4", "AN(1,1) certificate c = -5/4");
    l.require(w.report.value("D_eigenvalues", Json()) == Json::parse(R"([["-1/4",1],["0",1],["1/2",1]])"),
              "AN(1,1) D-eigenvalues -1/4, 0, 1/2");
    l.require(w.report.value("verified", false), "AN(1,1) certificate re-verified");
    l.detail << "AN(1,1) c = -5/4";
    print(5, "Damek-Ricci hypersurface sweep", l, since(t0));
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    sweep("thm1", l);
    for (std::size_t n : {3u, 4u}) {
      auto g = build_sl(n);
      l.absorb(horosphere_certificates(g, seed, 10));
      l.absorb(iwasawa_subalgebra_lemma(g, seed, 100));
    }
    double t = since(t0);
    l.require(t < 60, "runtime under 60 s");
    l.detail << "horospheres and closure lemma on SL(3), SL(4)";
    print(6, "Iwasawa hypersurface sweep", l, t);
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    std::size_t checks = 0, instances = 0;
    for (const auto& r : iwasawa_closed_form_suite(build_sl(3))) {
      l.absorb(r);
      ++checks;
      instances += r.instances;
    }
    l.detail << checks << " formulas, " << instances << " instances on SL(3)";
    print(7, "Iwasawa closed-form oracles", l, since(t0));
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    std::size_t checks = 0;
    for (const auto& r : soundness_suite(seed)) {
      l.absorb(r);
      ++checks;
    }
    l.detail << checks << " checks";
    print(8, "decision soundness", l, since(t0));
    all = all && l.pass;
  }
  {
    auto t0 = Clock::now();
    Line l;
    sweep("oracles", l);
    for (const auto& suite : suite_names()) {
      Json again = run_sweep(suite, seed);
      l.require(dump(again, true) == first_dump.at(suite), suite + " byte-stable across runs");
    }
    if (!goldens.empty()) {
      auto problems = verify_goldens(goldens);
      for (const auto& p : problems) l.require(false, p);
      if (problems.empty()) l.detail << "goldens match; ";
    }
    double total = since(start);
    l.require(total < 180, "total under 3 minutes");
    l.detail << "total " << std::fixed << std::setprecision(1) << total << " s";
    print(9, "wall clock and stable reports", l, since(t0));
    all = all && l.pass;
  }
  return all ? 0 : 1;
}
