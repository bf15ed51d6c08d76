// Left-normed bracket words in the generators x, y and their formal
// scalar combinations; the generalized Jacobi expansion.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxthin/arith.hpp"

namespace maxthin {

enum class Gen : unsigned char { x = 0, y = 1 };

inline char gen_char(Gen g) { return g == Gen::x ? 'x' : 'y'; }
inline Gen other(Gen g) { return g == Gen::x ? Gen::y : Gen::x; }

/// Left-normed word [a b c ...] = [[..[[a,b],c]..]].  Degree = length >= 1.
class LeftNormedWord {
 public:
  explicit LeftNormedWord(std::vector<Gen> letters);
  /// Parse a string like "yxxy".
  static LeftNormedWord parse(std::string_view s);

  unsigned degree() const noexcept { return static_cast<unsigned>(l_.size()); }
  Gen at(unsigned i) const { return l_.at(i); }
  const std::vector<Gen>& letters() const noexcept { return l_; }

  LeftNormedWord appended(Gen g) const;
  LeftNormedWord appended_run(Gen g, unsigned count) const;

  std::string str() const;

  friend bool operator==(const LeftNormedWord& a, const LeftNormedWord& b) { return a.l_ == b.l_; }
  friend bool operator<(const LeftNormedWord& a, const LeftNormedWord& b) { return a.l_ < b.l_; }

 private:
  std::vector<Gen> l_;
};

/// [y x^i]
LeftNormedWord word_y_xi(unsigned i);

/// Homogeneous formal sum of left-normed words with scalar coefficients.
/// Kept normalized: words sorted, duplicates merged, zero terms dropped.
class FormalSum {
 public:
  struct Term {
    Scalar coeff;
    LeftNormedWord word;
  };

  FormalSum(PrimeChar ch, unsigned degree);

  PrimeChar field() const noexcept { return ch_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Accumulate coeff * word; rejects words of the wrong degree.
  void add(Scalar coeff, LeftNormedWord word);

  std::string str() const;

 private:
  PrimeChar ch_;
  unsigned degree_;
  std::vector<Term> terms_;
};

/// [prefix [head tail^j]] = sum_{i=0}^{j} (-1)^i C(j,i) [prefix tail^i head tail^{j-i}].
FormalSum expand_generalized_jacobi(const LeftNormedWord& prefix, Gen inner_head,
                                    Gen inner_tail, unsigned j, PrimeChar ch);

}  // namespace maxthin
