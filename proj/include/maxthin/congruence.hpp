// Truncated polynomial arithmetic over F_p and the binomial congruence
// criteria behind the admissible invariants (chain degrees, constituent
// lengths, power recognition, the signed reflection identity).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxthin/arith.hpp"

namespace maxthin {

/// Polynomial in F_p[X] truncated mod X^order (dense, canonical coefficients).
class TruncPoly {
 public:
  TruncPoly(PrimeChar ch, unsigned order);
  static TruncPoly one(PrimeChar ch, unsigned order);
  static TruncPoly x_plus_one(PrimeChar ch, unsigned order);

  PrimeChar field() const noexcept { return ch_; }
  unsigned order() const noexcept { return static_cast<unsigned>(c_.size()); }
  const Scalar& coeff(unsigned j) const;
  void set_coeff(unsigned j, Scalar v);

  TruncPoly operator+(const TruncPoly& g) const;
  TruncPoly operator-(const TruncPoly& g) const;
  TruncPoly operator*(const TruncPoly& g) const;
  bool operator==(const TruncPoly& g) const;
  bool operator!=(const TruncPoly& g) const { return !(*this == g); }

  std::string str() const;

 private:
  PrimeChar ch_;
  std::vector<Scalar> c_;
};

TruncPoly poly_mul_trunc(const TruncPoly& f, const TruncPoly& g);
TruncPoly poly_pow_trunc(const TruncPoly& f, unsigned long long e);

/// True iff (X+1)^n = X^n + 1 in F_p[X] (all middle coefficients vanish).
bool frobenius_power_test(unsigned long long n, PrimeChar ch);

/// True iff (1+X)^{2n} == 1 mod X^n, i.e. C(2n,k) == 0 mod p for 0 < k < n.
bool double_power_test(unsigned long long n, PrimeChar ch);

/// True iff C(2n+1, j+1) == n*C(2n+1, j) mod p for 0 < j < n-1
/// (0 < j < n with `extended`).
bool chain_hypothesis_test(unsigned long long n, PrimeChar ch, bool extended = false);

/// Same congruence evaluated as the displayed truncated-polynomial identity
/// (X+1)^{2n+1}(1 - nX) == 1 + (n+1)X mod X^n; a cross-check route.
bool chain_hypothesis_poly_test(unsigned long long n, PrimeChar ch);

/// Closed-form membership for odd chain degrees.
struct AdmissibleK {
  enum class Form { three, five, seven, q, two_q_minus_one, two_q_plus_one };
  Form form;
  std::optional<PrimePower> q;  // present for the last three forms
  unsigned long long value;

  std::string str() const;
};

/// Lemma-level set {3, 5, 7, q, 2q-1, 2q+1}; in characteristic 0 only
/// {3, 5, 7} are classifiable.  Throws on even input.
std::optional<AdmissibleK> classify_admissible_k(unsigned long long value, PrimeChar ch);

/// Theorem-level set: {3,5,q,2q-1} for p > 2, {3,2q-1} for p = 2, {3,5} for
/// p = 0.  With half_not_divisible, values whose (v-1)/2 is a multiple of p
/// are rejected (this is what removes 5 in characteristic 2).
std::optional<AdmissibleK> classify_final_k(unsigned long long value, PrimeChar ch,
                                            bool half_not_divisible = true);

/// First-constituent criterion: C(ell, j) == 0 mod p for all 0 < j < ell
/// except possibly j = ell/2.  Passing forces ell = 2q; returns q.
/// Throws on odd ell.
std::optional<PrimePower> first_constituent_test(unsigned long long ell, PrimeChar ch);

/// Closed form for a later constituent length: 2q, or 2q - p^s with p^s <= q.
struct AdmissibleConstituent {
  PrimePower q;
  bool full_length;  // ell_r == 2q
  unsigned s = 0;    // deficit exponent when !full_length
  unsigned long long value;

  std::string str() const;
};

/// Later-constituent criterion: C(j, j-ell_r+1) == 0 mod p for
/// ell_r <= j < 2q-1.  Throws when ell_r is outside [q, 2q].
std::optional<AdmissibleConstituent> constituent_length_test(unsigned long long ell_r,
                                                             const PrimePower& q);

/// Signed reflection identity (-1)^a C(a,b) == (-1)^b C(q-1-b, q-1-a) mod p
/// checked over the full triangle 0 <= b <= a < q.
bool reflection_identity_check(const PrimePower& q);

}  // namespace maxthin
