// Truncated graded Lie algebras of maximal class: one-dimensional components
// above degree 1, described by the canonical pair (a_i, b_i) per degree with
// [e_i, x] = a_i e_{i+1}, [e_i, y] = b_i e_{i+1} and e_2 = [y, x].
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxthin/table.hpp"

namespace maxthin {

class TableError : public std::runtime_error {
 public:
  explicit TableError(const std::string& what) : std::runtime_error(what) {}
};

class CoveringError : public TableError {
 public:
  CoveringError(unsigned degree, const std::string& what)
      : TableError(what), degree_(degree) {}
  unsigned degree() const noexcept { return degree_; }

 private:
  unsigned degree_;
};

using ScalarPair = std::pair<Scalar, Scalar>;

/// Two-step centralizer sequence: one projective point of L_1 per degree in
/// [2, maxdeg-1], canonicalized so the last nonzero coordinate is 1.
struct CentralizerSequence {
  PrimeChar field{0};
  std::vector<ScalarPair> points;  // (c_x, c_y) spanning C_{L_1}(L_i)
};

class MaxClassTable {
 public:
  /// pairs[i-2] = (a_i, b_i) for 2 <= i <= maxdeg-1.  Pairs are canonicalized
  /// by exact scaling when p > 0; for p = 0 they must already be canonical.
  MaxClassTable(PrimeChar ch, unsigned maxdeg, std::vector<ScalarPair> pairs);
  static MaxClassTable metabelian(PrimeChar ch, unsigned maxdeg);

  PrimeChar field() const noexcept { return ch_; }
  unsigned maxdeg() const noexcept { return maxdeg_; }
  const ScalarPair& pair(unsigned degree) const;
  const std::vector<ScalarPair>& pairs() const noexcept { return pairs_; }

  /// Structure-checked engine (no consistency checks; diagnostics run on
  /// inconsistent tables too).
  BracketEngine engine() const;

  friend bool operator==(const MaxClassTable& a, const MaxClassTable& b);

 private:
  PrimeChar ch_;
  unsigned maxdeg_;
  std::vector<ScalarPair> pairs_;
};

/// Constituent data read off a table.  `boundaries` lists every degree
/// d_1 < d_2 < ... (up to maxdeg-1) whose component is not centralized by y;
/// ell = d_1, and subsequent[r-2] = d_r - d_{r-1}.  Absent ell means the
/// truncation never left the metabelian run.
struct ConstituentProfile {
  std::optional<unsigned> ell;
  std::vector<unsigned> boundaries;
  std::vector<unsigned> subsequent;
  unsigned determined_up_to = 0;
};

CentralizerSequence centralizer_sequence(const MaxClassTable& t);
MaxClassTable maxclass_from_centralizers(const CentralizerSequence& seq, unsigned maxdeg);

ConstituentProfile constituent_profile(const MaxClassTable& t);

/// (ad y)^2 = 0 on every basis element of degree <= n-2.
bool sandwich_check(const MaxClassTable& t, unsigned n);

/// Scalar c_{ij} with [e_i, e_j] = c_{ij} e_{i+j}, i, j >= 2.
Scalar bracket_component(const MaxClassTable& t, unsigned i, unsigned j);
Scalar bracket_component(const BracketEngine& eng, unsigned i, unsigned j);

/// Consistency scan up to degree n; cross_check additionally runs the full
/// all-triples Jacobi sweep (intended for small n).
std::optional<Inconsistency> jacobi_consistency(const MaxClassTable& t, unsigned n,
                                                bool cross_check = false);

HomElem eval_word(const MaxClassTable& t, const LeftNormedWord& w);

}  // namespace maxthin
