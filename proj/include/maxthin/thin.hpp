// Truncated thin Lie algebras: components of dimension 1 or 2 with generator
// action matrices per degree, the covering property enforced throughout, and
// extraction of the second-diamond invariants k and h.
#pragma once

#include <optional>
#include <vector>

#include "maxthin/maxclass.hpp"

namespace maxthin {

class NormalizationError : public TableError {
 public:
  explicit NormalizationError(const std::string& what) : TableError(what) {}
};

class ThinTable {
 public:
  /// dims[d-1] is dim L_d for 1 <= d <= maxdeg (dims[0] must be 2 and
  /// dims[1] must be 1); ax[d-1], ay[d-1] are the generator actions
  /// L_d -> L_{d+1} for 1 <= d <= maxdeg-1.  Matrices must be in canonical
  /// column-reduced form; covering is validated at every degree < maxdeg.
  ThinTable(PrimeChar ch, unsigned maxdeg, std::vector<unsigned> dims,
            std::vector<Mat2> ax, std::vector<Mat2> ay);

  PrimeChar field() const noexcept { return ch_; }
  unsigned maxdeg() const noexcept { return maxdeg_; }
  unsigned dim(unsigned d) const;
  const Mat2& action(Gen g, unsigned d) const;

  BracketEngine engine() const;

  friend bool operator==(const ThinTable& a, const ThinTable& b);

 private:
  PrimeChar ch_;
  unsigned maxdeg_;
  std::vector<unsigned> dims_;
  std::vector<Mat2> ax_, ay_;
};

/// Second-diamond invariants.  All facts are reported as observed; bounds and
/// exclusions are asserted by the verification layer.
struct DiamondProfile {
  std::optional<unsigned> k;             // degree of the second diamond
  std::vector<unsigned> diamond_degrees; // all 2-dimensional degrees <= maxdeg
  std::optional<unsigned> h;             // least h with [v y x^{h-1} y] != 0
  unsigned h_scanned_up_to = 0;          // h tested for k+h <= this bound
  bool vyy_zero = true;                  // [v y y] == 0
  bool relation_holds = true;            // [v x y] == ((k-1)/2) [v y x]
  bool half_k_divisible = false;         // p | (k-1)/2
  std::optional<Scalar> alpha;           // x-normalization scalar when solvable
  std::vector<std::string> notes;
};

DiamondProfile diamond_profile(const ThinTable& t);

/// Rewrites the table in the basis (x + alpha y, y) so that [v x x] = 0,
/// where v spans L_{k-1}.  Throws NormalizationError when k = -1 mod p, when
/// [vyy] != 0, or when integer semantics admit no exact alpha.
std::pair<Scalar, ThinTable> normalize_x(const ThinTable& t, unsigned k);

/// True iff [L_i, L_j] = 0 for all i, j >= 2 with i + j < k.
bool metabelian_quotient_check(const ThinTable& t, unsigned k);

std::optional<Inconsistency> jacobi_consistency(const ThinTable& t, unsigned n,
                                                bool cross_check = false);

HomElem eval_word(const ThinTable& t, const LeftNormedWord& w);

}  // namespace maxthin
