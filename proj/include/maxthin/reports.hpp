// Command-level drivers shared by the CLI and the tests: classifier sweeps,
// enumeration with document streaming, document analysis, and theorem
// verification with the exit-status contract.
#pragma once

#include <iosfwd>
#include <optional>

#include "maxthin/serialize.hpp"

namespace maxthin {

// process exit codes
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  Json report;
  int exit_code = kExitPass;
};

/// Per-odd-value classifier sweep: chain hypothesis (both ranges) and the
/// lemma/theorem classifications, for 3 <= v <= max.
CommandResult cmd_admissible(unsigned long p, unsigned max);

/// Enumerate tables, streaming one document per line to `docs`.
CommandResult cmd_enumerate(TableKind kind, unsigned long p, unsigned degree, std::ostream& docs,
                            unsigned jobs = 1, long char0_window = 2, bool cross_check = false);

enum class AnalysisKind { constituents, diamonds, sandwich, centralizers };

/// Analyze every document (one JSON per line) in `docs`.
CommandResult cmd_analyze(std::istream& docs, AnalysisKind which);

/// Theorem names: first-constituent, any-constituent, second-diamond,
/// h-values, identities.
CommandResult cmd_verify(const std::string& theorem, unsigned long p, unsigned degree,
                         unsigned max_sweep = 0, unsigned jobs = 1, long char0_window = 2);

std::optional<AnalysisKind> parse_analysis_kind(const std::string& s);

}  // namespace maxthin
