// Incremental structure-constant engine for truncated graded Lie algebras
// generated in degree 1 by {x, y}, with homogeneous components of dimension
// at most 2.  Components are extended degree by degree; each extension
// derives the canonical basis definitions, computes the new component
// brackets by the Jacobi recursion, and (optionally) checks covering,
// antisymmetry, alternation, and the generator-anchored Jacobi identities.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxthin/arith.hpp"
#include "maxthin/words.hpp"

namespace maxthin {

/// Coordinate vector in a component (dimension <= 2).
struct Vec2 {
  uint8_t n = 0;
  std::array<Scalar, 2> c{};

  static Vec2 zero(PrimeChar ch, unsigned n);
  static Vec2 unit(PrimeChar ch, unsigned n, unsigned idx);
  bool is_zero() const;
  Vec2 operator+(const Vec2& o) const;
  Vec2 operator-() const;
  Vec2 scaled(const Scalar& s) const;
  bool operator==(const Vec2& o) const;
  std::string str() const;
};

/// Action matrix L_d -> L_{d+1} (rows x cols, each <= 2).
struct Mat2 {
  uint8_t rows = 0, cols = 0;
  std::array<Scalar, 4> a{};

  static Mat2 zero(PrimeChar ch, unsigned rows, unsigned cols);
  const Scalar& at(unsigned r, unsigned c) const { return a[r * cols + c]; }
  Scalar& at(unsigned r, unsigned c) { return a[r * cols + c]; }
  Vec2 apply(const Vec2& v) const;
  Vec2 col(unsigned c) const;
  bool operator==(const Mat2& o) const;
};

/// Bilinear component bracket L_i x L_j -> L_{i+j}.
struct BilMat {
  uint8_t rows = 0, dl = 0, dr = 0;
  std::array<Scalar, 8> a{};

  static BilMat zero(PrimeChar ch, unsigned rows, unsigned dl, unsigned dr);
  const Scalar& at(unsigned r, unsigned zl, unsigned zr) const {
    return a[(zl * dr + zr) * rows + r];
  }
  Scalar& at(unsigned r, unsigned zl, unsigned zr) { return a[(zl * dr + zr) * rows + r]; }
  Vec2 apply_basis(unsigned zl, unsigned zr) const;
};

/// Homogeneous element: degree plus coordinates in the component basis.
struct HomElem {
  unsigned degree = 0;
  Vec2 v;

  bool is_zero() const { return v.is_zero(); }
};

/// Why a table extension (or a consistency scan) was rejected.
struct Inconsistency {
  enum class Kind { structure, covering, antisymmetry, alternating, jacobi };
  Kind kind;
  unsigned degree = 0;  // total degree at which the violation lives
  unsigned i = 0, j = 0;
  std::string detail;

  std::string str() const;
};

/// Basis definition: basis vector = [src-th basis of previous degree, g].
struct DefSpec {
  uint8_t src = 0;
  Gen g = Gen::x;
};

enum class CheckMode { structure_only, full };

class BracketEngine {
 public:
  /// Engine over ch, preallocating for degrees up to capacity.
  BracketEngine(PrimeChar ch, unsigned capacity);

  PrimeChar field() const noexcept { return ch_; }
  unsigned maxdeg() const noexcept { return maxdeg_; }
  unsigned capacity() const noexcept { return cap_; }
  unsigned dim(unsigned d) const;

  /// The fixed degree-1 actions realizing e_2 = [y,x].
  static std::pair<Mat2, Mat2> degree_one_actions(PrimeChar ch);

  /// Extend by one degree with the given generator actions.  Structure
  /// (canonical definitions) and covering are always enforced; CheckMode::full
  /// adds the consistency checks.  On failure the engine is unchanged.
  std::optional<Inconsistency> push_degree(unsigned dim_next, const Mat2& act_x,
                                           const Mat2& act_y, CheckMode mode);
  void pop_degree();

  const Mat2& action(Gen g, unsigned d) const;
  const DefSpec& definition(unsigned d, unsigned t) const;

  /// [u, v] for homogeneous elements with degree(u) + degree(v) <= maxdeg.
  HomElem bracket(const HomElem& u, const HomElem& v) const;
  /// Bracket of two basis vectors.
  Vec2 bracket_basis(unsigned i, unsigned zi, unsigned j, unsigned wj) const;

  HomElem eval(const LeftNormedWord& w) const;
  HomElem eval(const FormalSum& s) const;

  /// Full Jacobi scan over all basis triples of total degree <= n.
  std::optional<Inconsistency> check_all_triples(unsigned n) const;

  /// Rebuild src with full incremental checks up to degree n (optionally
  /// followed by the all-triples sweep) and report the first violation.
  static std::optional<Inconsistency> recheck(const BracketEngine& src, unsigned n,
                                              bool cross_check);

 private:
  std::optional<Inconsistency> derive_definitions(unsigned dim_next, const Mat2& ax,
                                                  const Mat2& ay,
                                                  std::array<DefSpec, 2>& defs) const;
  std::optional<Inconsistency> check_covering(unsigned dim_next, const Mat2& ax,
                                              const Mat2& ay) const;
  void build_bracket_row();
  std::optional<Inconsistency> check_new_degree() const;

  BilMat& bil(unsigned i, unsigned j) { return bcache_[i * (cap_ + 1) + j]; }
  const BilMat& bil(unsigned i, unsigned j) const { return bcache_[i * (cap_ + 1) + j]; }

  PrimeChar ch_;
  unsigned cap_;
  unsigned maxdeg_ = 1;
  std::vector<unsigned> dims_;                  // [1..maxdeg]
  std::vector<Mat2> ax_, ay_;                   // action at degree d, [1..maxdeg-1]
  std::vector<std::array<DefSpec, 2>> defs_;    // [3..maxdeg]
  std::vector<BilMat> bcache_;                  // B(i,j), i,j >= 2, i+j <= maxdeg
};

}  // namespace maxthin
