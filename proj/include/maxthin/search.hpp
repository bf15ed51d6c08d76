// Backtracking enumeration of Jacobi-consistent maximal-class and thin
// tables to a truncation degree, with theorem-verification reports over the
// enumerated universe.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "maxthin/thin.hpp"

namespace maxthin {

enum class TableKind { maxclass, thin };

struct SearchConfig {
  PrimeChar field{2};
  unsigned maxdeg = 6;
  TableKind kind = TableKind::maxclass;
  unsigned lookahead = 0;    // assertion margin (degrees held back from claims)
  unsigned jobs = 1;
  long char0_window = 2;     // branch window for free scalars when p = 0
  bool cross_check = false;  // all-triples sweep on every emitted table

  void validate() const;
};

struct BranchStats {
  unsigned long long nodes = 0;
  unsigned long long emitted = 0;
  unsigned long long pruned_structure = 0;
  unsigned long long pruned_covering = 0;
  unsigned long long pruned_consistency = 0;

  void merge(const BranchStats& o);
};

/// Deterministic stream of every canonical table consistent to cfg.maxdeg
/// (first centralizer y, first deviating centralizer x; a branch dies at its
/// first failed check).  The emission order is independent of cfg.jobs.
BranchStats enumerate_maxclass(const SearchConfig& cfg,
                               const std::function<void(const MaxClassTable&)>& sink);

/// Same for thin tables: covering holds at every degree < maxdeg and the
/// below-diamond run is pinned to the metabelian-quotient normalization.
BranchStats enumerate_thin(const SearchConfig& cfg,
                           const std::function<void(const ThinTable&)>& sink);

std::vector<MaxClassTable> collect_maxclass(const SearchConfig& cfg);
std::vector<ThinTable> collect_thin(const SearchConfig& cfg);

struct VerificationReport {
  std::string theorem;
  SearchConfig config;
  unsigned long long tables = 0;    // tables examined
  unsigned long long asserted = 0;  // tables deep enough for value assertions
  std::map<std::string, std::map<std::string, unsigned long long>> observed;
  std::vector<std::string> violations;
  BranchStats stats;

  bool pass() const { return violations.empty(); }
};

VerificationReport verify_first_constituent(const SearchConfig& cfg);
VerificationReport verify_any_constituent(const SearchConfig& cfg);
VerificationReport verify_second_diamond(const SearchConfig& cfg);
VerificationReport verify_h_values(const SearchConfig& cfg);

}  // namespace maxthin
