// Command-line surface: classifier sweeps, enumeration, analysis, and
// theorem verification over truncated maximal-class and thin tables.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "maxthin/reports.hpp"

namespace {

using namespace maxthin;

void write_report(const Json& report, const std::string& out_path, bool docs_on_stdout) {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write report to " + out_path);
    f << report.dump(2) << '\n';
  } else {
    (docs_on_stdout ? std::cerr : std::cout) << report.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for graded Lie algebras of maximal class and thin Lie algebras"};
  app.require_subcommand(1);

  unsigned long p = 2;
  unsigned degree = 12;
  unsigned max = 99;
  unsigned jobs = 1;
  long window = 2;
  bool cross_check = false;
  std::string kind = "maxclass";
  std::string theorem;
  std::string which;
  std::string in_path, out_path, report_path;

  auto* adm = app.add_subcommand("admissible", "classifier sweep over odd chain degrees");
  adm->add_option("--p", p, "characteristic (0 or a prime)")->required();
  adm->add_option("--max", max, "largest odd value to classify");
  adm->add_option("--out", report_path, "write the report to a file");

  auto* enu = app.add_subcommand("enumerate", "enumerate consistent tables");
  enu->add_option("--kind", kind, "maxclass or thin")->check(CLI::IsMember({"maxclass", "thin"}));
  enu->add_option("--p", p, "characteristic (0 or a prime)")->required();
  enu->add_option("--degree", degree, "truncation degree (>= 6)")->required();
  enu->add_option("--out", out_path, "document stream destination (default stdout)");
  enu->add_option("--jobs", jobs, "parallel workers");
  enu->add_option("--window", window, "integer branch window for p = 0");
  enu->add_flag("--cross-check", cross_check, "all-triples Jacobi sweep on every table");

  auto* ana = app.add_subcommand("analyze", "profile serialized tables");
  ana->add_option("--in", in_path, "document stream (one JSON per line)")->required();
  ana->add_option("--which", which, "constituents | diamonds | sandwich | centralizers")
      ->required();
  ana->add_option("--out", report_path, "write the report to a file");

  auto* ver = app.add_subcommand("verify", "verify a statement over the enumerated universe");
  ver->add_option("--theorem", theorem,
                  "first-constituent | any-constituent | second-diamond | h-values | identities")
      ->required();
  ver->add_option("--p", p, "characteristic (0 or a prime)")->required();
  ver->add_option("--degree", degree, "truncation degree for enumerations");
  ver->add_option("--max", max, "sweep bound for identities");
  ver->add_option("--jobs", jobs, "parallel workers");
  ver->add_option("--window", window, "integer branch window for p = 0");
  ver->add_option("--out", report_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (adm->parsed()) {
      CommandResult res = cmd_admissible(p, max);
      write_report(res.report, report_path, false);
      return res.exit_code;
    }
    if (enu->parsed()) {
      CommandResult res;
      bool docs_on_stdout = out_path.empty();
      if (docs_on_stdout) {
        res = cmd_enumerate(kind == "thin" ? TableKind::thin : TableKind::maxclass, p, degree,
                            std::cout, jobs, window, cross_check);
      } else {
        std::ofstream docs(out_path);
        if (!docs) throw std::runtime_error("cannot write documents to " + out_path);
        res = cmd_enumerate(kind == "thin" ? TableKind::thin : TableKind::maxclass, p, degree,
                            docs, jobs, window, cross_check);
      }
      write_report(res.report, report_path, docs_on_stdout);
      return res.exit_code;
    }
    if (ana->parsed()) {
      auto wk = parse_analysis_kind(which);
      if (!wk) throw std::invalid_argument("unknown analysis '" + which + "'");
      std::ifstream docs(in_path);
      if (!docs) throw std::runtime_error("cannot read " + in_path);
      CommandResult res = cmd_analyze(docs, *wk);
      write_report(res.report, report_path, false);
      return res.exit_code;
    }
    if (ver->parsed()) {
      CommandResult res = cmd_verify(theorem, p, degree, max == 99 ? 0 : max, jobs, window);
      write_report(res.report, report_path, false);
      return res.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return maxthin::kExitUsage;
  }
  return maxthin::kExitUsage;
}
