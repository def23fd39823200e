// Command-line front end: check, sweep, export, oracles, verify-goldens.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rsol/io.hpp"
#include "rsol/report.hpp"
#include "rsol/spaces.hpp"

using namespace rsol;

namespace {

struct Options {
  std::string space, xi, suite = "thm2", out, format = "mla-v1", goldens = "goldens";
  std::uint64_t seed = 1;
  bool pretty = false, json = false, timestamp = false;
};

int emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return kExitOk;
  }
  try {
    write_file_atomic(out, text);
  } catch (const std::exception& e) {
    std::cerr << "rsol: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_check(const Options& o) {
  CheckOutcome r = run_check(o.space, o.xi);
  if (r.exit_code != kExitOk) {
    std::cerr << "rsol: " << r.report.at("error").get<std::string>() << "\n";
    return r.exit_code;
  }
  return emit(dump(r.report, o.pretty), o.out);
}

int cmd_sweep(const Options& o) {
  Json report;
  try {
    report = run_sweep(o.suite, o.seed, o.timestamp);
  } catch (const GrammarError& e) {
    std::cerr << "rsol: " << e.what() << "\n";
    return kExitGrammar;
  }
  if (!o.out.empty()) {
    if (int io = emit(dump(report, true), o.out); io != kExitOk) return io;
  }
  if (o.json)
    std::cout << dump(report, o.pretty);
  else
    std::cout << render_table(report);
  return sweep_passed(report) ? kExitOk : kExitDisagree;
}

int cmd_export(const Options& o) {
  Json doc;
  try {
    Space s = parse_space(o.space);
    if (o.format == "mla-v1") {
      doc = export_mla(s.algebra());
    } else {
      const HTypeAlgebra* h = s.htype ? &*s.htype : s.damek_ricci ? &s.damek_ricci->htype : nullptr;
      if (!h) throw GrammarError(s.spec + " has no Clifford module to export");
      doc = export_cliff(h->module);
    }
  } catch (const GrammarError& e) {
    std::cerr << "rsol: " << e.what() << "\n";
    return kExitGrammar;
  }
  return emit(dump(doc, o.pretty), o.out);
}

int cmd_goldens(const Options& o) {
  auto problems = verify_goldens(o.goldens);
  for (const auto& p : problems) std::cerr << "rsol: " << p << "\n";
  if (!problems.empty()) return kExitDisagree;
  std::cout << "goldens in " << o.goldens << " match\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codimension-one Ricci soliton subgroups: exact checks and sweeps"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Decide the soliton condition for one normal");
  check->add_option("space", o.space, "N(m,k), N(m,k+,k-), AN(...), SL(n), RH(n) or file:PATH")->required();
  check->add_option("xi", o.xi, "normal, e.g. v:basis:0, a:rand:3, aHX:a=1/3, raw:[1,0,0]")->required();
  check->add_option("--out", o.out, "write the verdict JSON here instead of stdout");
  check->add_flag("--pretty", o.pretty, "indent the JSON");
  check->add_flag("--json", o.json, "compact JSON (the default)");

  auto* sweep = app.add_subcommand("sweep", "Run a classification sweep and report agreement");
  sweep->add_option("suite,--suite", o.suite, "thm1, thm2, thm3 or oracles")->capture_default_str();
  sweep->add_option("--seed", o.seed, "seed for the random normals")->capture_default_str();
  sweep->add_option("--out", o.out, "write the JSON report here");
  sweep->add_flag("--json", o.json, "print the JSON report instead of the table");
  sweep->add_flag("--pretty", o.pretty, "indent the printed JSON");
  sweep->add_flag("--timestamp", o.timestamp, "record generated_at in the report");

  auto* exporter = app.add_subcommand("export", "Write the structure constants and metric of a space");
  exporter->add_option("space", o.space, "space specification")->required();
  exporter->add_option("--out", o.out, "output file (stdout if omitted)");
  exporter->add_option("--format", o.format, "mla-v1 or cliff-v1")
      ->check(CLI::IsMember({"mla-v1", "cliff-v1"}))
      ->capture_default_str();
  exporter->add_flag("--pretty", o.pretty, "indent the JSON");
  exporter->add_flag("--json", o.json, "compact JSON (the default)");

  auto* oracles = app.add_subcommand("oracles", "Run the closed-form and soundness cross-checks");
  oracles->add_option("--seed", o.seed, "seed for the random inputs")->capture_default_str();
  oracles->add_option("--out", o.out, "write the JSON report here");
  oracles->add_flag("--json", o.json, "print the JSON report instead of the table");
  oracles->add_flag("--pretty", o.pretty, "indent the printed JSON");
  oracles->add_flag("--timestamp", o.timestamp, "record generated_at in the report");

  auto* goldens = app.add_subcommand("verify-goldens", "Regenerate every suite and diff against the goldens");
  goldens->add_option("--dir", o.goldens, "directory holding <suite>.json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitGrammar;
  }
  try {
    if (*check) return cmd_check(o);
    if (*sweep) return cmd_sweep(o);
    if (*exporter) return cmd_export(o);
    if (*oracles) {
      o.suite = "oracles";
      return cmd_sweep(o);
    }
    return cmd_goldens(o);
  } catch (const std::exception& e) {
    std::cerr << "rsol: " << e.what() << "\n";
    return kExitIo;
  }
}
