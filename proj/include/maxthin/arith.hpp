// Exact integer and mod-p arithmetic: prime characteristics, canonical
// residues, binomial coefficients, Lucas digits, prime-power recognition.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace maxthin {

/// Characteristic of the ground field: 0 (integer semantics) or a prime.
/// Primality is checked deterministically at construction; p must fit in
/// 31 bits so residue products fit in a signed 64-bit word.
class PrimeChar {
 public:
  explicit PrimeChar(unsigned long p);

  unsigned long p() const noexcept { return p_; }
  bool zero_char() const noexcept { return p_ == 0; }

  friend bool operator==(PrimeChar a, PrimeChar b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(PrimeChar a, PrimeChar b) noexcept { return a.p_ != b.p_; }

  static bool is_prime(unsigned long n) noexcept;

 private:
  unsigned long p_;
};

/// Scalar in the prime field F_p, or an arbitrary-precision integer when the
/// characteristic is 0.  Residues are kept canonical in [0, p).  Congruence
/// mod 0 is read as equality of integers throughout.
class Scalar {
 public:
  Scalar() = default;  // zero in characteristic 0
  Scalar(PrimeChar ch, long long v);
  Scalar(PrimeChar ch, const mpz_class& v);

  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;

  PrimeChar field() const noexcept { return PrimeChar(p_); }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  /// this += a * b without temporaries; the convolution hot path.
  void addmul(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws std::domain_error when not invertible
  /// (zero, or anything but ±1 in characteristic 0).
  Scalar inverse() const;
  /// Exact division; in characteristic 0 throws unless d divides exactly.
  Scalar div_exact(const Scalar& d) const;

  /// Canonical integer lift: the residue in [0,p), or the integer itself.
  mpz_class lift() const;
  /// Lift as long long; throws std::overflow_error if it does not fit.
  long long lift_ll() const;
  std::string str() const;

  static Scalar zero(PrimeChar ch) { return Scalar(ch, 0); }
  static Scalar one(PrimeChar ch) { return Scalar(ch, 1); }
  static Scalar parse(PrimeChar ch, const std::string& decimal);

 private:
  void require_same(const Scalar& o) const;

  unsigned long p_ = 0;
  long long r_ = 0;                  // canonical residue when p_ > 0
  std::unique_ptr<mpz_class> z_;     // value when p_ == 0; null means 0
};

/// C(a,b) as an exact integer, 0 when b > a.  Built by additive Pascal
/// recursion (no divisions); rows are cached per thread up to the largest
/// row a caller has requested.
mpz_class binom_exact(unsigned long a, unsigned long b);

/// C(a,b) mod p via the Lucas digit product when p > 0; equals binom_exact
/// under integer semantics.
Scalar binom_mod(unsigned long long a, unsigned long long b, PrimeChar ch);

/// Little-endian base-p digits; a = 0 yields the single digit 0.
std::vector<unsigned long> lucas_digits(unsigned long long a, unsigned long base);

/// Exponent s with n = base^s, or nullopt.
std::optional<unsigned> as_prime_power(unsigned long long n, unsigned long base);

/// q = p^s for a positive characteristic p.
class PrimePower {
 public:
  PrimePower(PrimeChar ch, unsigned s);
  static std::optional<PrimePower> of_value(unsigned long long q, PrimeChar ch);

  PrimeChar field() const noexcept { return ch_; }
  unsigned long p() const noexcept { return ch_.p(); }
  unsigned s() const noexcept { return s_; }
  unsigned long long q() const noexcept { return q_; }

  friend bool operator==(const PrimePower& a, const PrimePower& b) noexcept {
    return a.q_ == b.q_ && a.ch_ == b.ch_;
  }

 private:
  PrimeChar ch_;
  unsigned s_;
  unsigned long long q_;
};

}  // namespace maxthin
