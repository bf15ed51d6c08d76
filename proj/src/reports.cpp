#include "maxthin/reports.hpp"

#include <chrono>
#include <istream>
#include <ostream>

#include "maxthin/congruence.hpp"

namespace maxthin {

namespace {

class ReportShell {
 public:
  ReportShell(std::string command, Json config)
      : start_(std::chrono::steady_clock::now()), command_(std::move(command)),
        config_(std::move(config)) {}

  CommandResult finish(Json results, std::vector<std::string> violations) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = command_;
    j["config"] = std::move(config_);
    j["results"] = std::move(results);
    j["violations"] = violations;
    j["pass"] = violations.empty();
    j["duration_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start_)
                           .count();
    return CommandResult{std::move(j), violations.empty() ? kExitPass : kExitViolation};
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::string command_;
  Json config_;
};

std::string opt_str(const std::optional<AdmissibleK>& k) { return k ? k->str() : "-"; }

}  // namespace

CommandResult cmd_admissible(unsigned long p, unsigned max) {
  if (max < 3) throw std::invalid_argument("admissible sweep needs max >= 3");
  PrimeChar ch(p);
  Json config;
  config["p"] = p;
  config["max"] = max;
  config["classification_order"] = "q, 2q-1, 2q+1, then 3/5/7";
  ReportShell shell("admissible", config);

  Json rows = Json::array();
  Json hyp_set = Json::array(), ext_set = Json::array(), lemma_set = Json::array(),
       final_set = Json::array();
  std::vector<std::string> violations;
  for (unsigned long long v = 3; v <= max; v += 2) {
    const unsigned long long n = (v - 1) / 2;
    const bool hyp = chain_hypothesis_test(n, ch);
    const bool ext = chain_hypothesis_test(n, ch, /*extended=*/true);
    auto lemma = classify_admissible_k(v, ch);
    auto fin = classify_final_k(v, ch);
    Json row;
    row["value"] = v;
    row["hypothesis"] = hyp;
    row["hypothesis_extended"] = ext;
    row["lemma"] = opt_str(lemma);
    row["final"] = opt_str(fin);
    rows.push_back(std::move(row));
    if (hyp) hyp_set.push_back(v);
    if (ext) ext_set.push_back(v);
    if (lemma) lemma_set.push_back(v);
    if (fin) final_set.push_back(v);
    if (hyp != lemma.has_value())
      violations.push_back("value " + std::to_string(v) +
                           ": brute-force hypothesis disagrees with the closed form");
  }
  Json results;
  results["rows"] = std::move(rows);
  results["hypothesis_set"] = std::move(hyp_set);
  results["extended_set"] = std::move(ext_set);
  results["lemma_set"] = std::move(lemma_set);
  results["final_set"] = std::move(final_set);
  return shell.finish(std::move(results), std::move(violations));
}

CommandResult cmd_enumerate(TableKind kind, unsigned long p, unsigned degree, std::ostream& docs,
                            unsigned jobs, long char0_window, bool cross_check) {
  SearchConfig cfg;
  cfg.field = PrimeChar(p);
  cfg.maxdeg = degree;
  cfg.kind = kind;
  cfg.jobs = jobs;
  cfg.char0_window = char0_window;
  cfg.cross_check = cross_check;
  cfg.validate();
  ReportShell shell("enumerate", config_json(cfg));

  unsigned long long count = 0;
  BranchStats stats;
  if (kind == TableKind::maxclass) {
    stats = enumerate_maxclass(cfg, [&](const MaxClassTable& t) {
      docs << document_line(serialize(t)) << '\n';
      ++count;
    });
  } else {
    stats = enumerate_thin(cfg, [&](const ThinTable& t) {
      docs << document_line(serialize(t)) << '\n';
      ++count;
    });
  }
  docs.flush();
  if (!docs) throw std::runtime_error("failed to write document stream");
  Json results;
  results["count"] = count;
  results["stats"] = stats_json(stats);
  return shell.finish(std::move(results), {});
}

std::optional<AnalysisKind> parse_analysis_kind(const std::string& s) {
  if (s == "constituents") return AnalysisKind::constituents;
  if (s == "diamonds") return AnalysisKind::diamonds;
  if (s == "sandwich") return AnalysisKind::sandwich;
  if (s == "centralizers") return AnalysisKind::centralizers;
  return std::nullopt;
}

CommandResult cmd_analyze(std::istream& docs, AnalysisKind which) {
  const char* names[] = {"constituents", "diamonds", "sandwich", "centralizers"};
  Json config;
  config["which"] = names[static_cast<int>(which)];
  ReportShell shell("analyze", config);

  Json entries = Json::array();
  std::string line;
  unsigned index = 0;
  while (std::getline(docs, line)) {
    if (line.empty()) continue;
    ParsedAlgebra alg = parse_algebra_line(line);
    Json entry;
    entry["index"] = index++;
    if (which == AnalysisKind::diamonds) {
      const ThinTable* t = std::get_if<ThinTable>(&alg);
      if (!t) throw DocumentError("diamond analysis needs a thin document");
      entry["profile"] = profile_json(diamond_profile(*t));
    } else {
      const MaxClassTable* t = std::get_if<MaxClassTable>(&alg);
      if (!t) throw DocumentError("this analysis needs a maxclass document");
      if (which == AnalysisKind::constituents)
        entry["profile"] = profile_json(constituent_profile(*t));
      else if (which == AnalysisKind::sandwich)
        entry["sandwich"] = sandwich_check(*t, t->maxdeg());
      else
        entry["centralizers"] = centralizers_json(centralizer_sequence(*t));
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) throw DocumentError("no documents to analyze");
  Json results;
  results["documents"] = std::move(entries);
  return shell.finish(std::move(results), {});
}

namespace {

CommandResult verify_identities(unsigned long p, unsigned max_sweep) {
  if (p == 0) throw std::invalid_argument("identity sweeps need p > 0");
  PrimeChar ch(p);
  Json config;
  config["p"] = p;
  config["max"] = max_sweep;
  ReportShell shell("verify-identities", config);

  std::vector<std::string> violations;
  Json checked_q = Json::array();
  for (unsigned s = 1;; ++s) {
    PrimePower q(ch, s);
    if (q.q() > max_sweep) break;
    checked_q.push_back(q.q());
    if (!reflection_identity_check(q))
      violations.push_back("reflection identity fails for q = " + std::to_string(q.q()));
  }
  unsigned long long frob_count = 0, dbl_count = 0;
  for (unsigned long long n = 1; n <= max_sweep; ++n) {
    const bool is_power = as_prime_power(n, p).has_value();
    if (frobenius_power_test(n, ch) != is_power)
      violations.push_back("power criterion mismatch at n = " + std::to_string(n));
    else
      ++frob_count;
    if (double_power_test(n, ch) != is_power)
      violations.push_back("doubled power criterion mismatch at n = " + std::to_string(n));
    else
      ++dbl_count;
  }
  Json results;
  results["reflection_q"] = std::move(checked_q);
  results["power_criterion_checked"] = frob_count;
  results["double_power_checked"] = dbl_count;
  return shell.finish(std::move(results), std::move(violations));
}

}  // namespace

CommandResult cmd_verify(const std::string& theorem, unsigned long p, unsigned degree,
                         unsigned max_sweep, unsigned jobs, long char0_window) {
  if (theorem == "identities") return verify_identities(p, max_sweep == 0 ? 600 : max_sweep);

  SearchConfig cfg;
  cfg.field = PrimeChar(p);
  cfg.maxdeg = degree;
  cfg.jobs = jobs;
  cfg.char0_window = char0_window;
  VerificationReport rep;
  if (theorem == "first-constituent") {
    cfg.kind = TableKind::maxclass;
    rep = verify_first_constituent(cfg);
  } else if (theorem == "any-constituent") {
    cfg.kind = TableKind::maxclass;
    rep = verify_any_constituent(cfg);
  } else if (theorem == "second-diamond") {
    cfg.kind = TableKind::thin;
    rep = verify_second_diamond(cfg);
  } else if (theorem == "h-values") {
    cfg.kind = TableKind::thin;
    rep = verify_h_values(cfg);
  } else {
    throw std::invalid_argument("unknown theorem '" + theorem + "'");
  }
  ReportShell shell("verify-" + theorem, config_json(cfg));
  Json results = report_json(rep);
  results.erase("violations");
  results.erase("config");
  return shell.finish(std::move(results), rep.violations);
}

}  // namespace maxthin
