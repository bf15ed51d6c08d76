#include "maxthin/arith.hpp"

#include <limits>
#include <stdexcept>

namespace maxthin {

namespace {

constexpr unsigned long kMaxChar = (1ul << 31) - 1;

long long mod_reduce(long long v, unsigned long p) {
  long long m = v % static_cast<long long>(p);
  return m < 0 ? m + static_cast<long long>(p) : m;
}

// Extended Euclid inverse of r mod p, r in (0, p).
long long inv_mod(long long r, unsigned long p) {
  long long a = r, b = static_cast<long long>(p);
  long long x0 = 1, x1 = 0;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw std::domain_error("inverse of non-unit residue");
  return mod_reduce(x0, p);
}

}  // namespace

bool PrimeChar::is_prime(unsigned long n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeChar::PrimeChar(unsigned long p) : p_(p) {
  if (p == 0) return;
  if (p > kMaxChar) throw std::invalid_argument("characteristic too large");
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be 0 or a prime");
}

Scalar::Scalar(PrimeChar ch, long long v) : p_(ch.p()) {
  if (p_ > 0) {
    r_ = mod_reduce(v, p_);
  } else if (v != 0) {
    z_ = std::make_unique<mpz_class>(static_cast<long>(v));
  }
}

Scalar::Scalar(PrimeChar ch, const mpz_class& v) : p_(ch.p()) {
  if (p_ > 0) {
    mpz_class m = v % static_cast<unsigned long>(p_);
    if (m < 0) m += static_cast<unsigned long>(p_);
    r_ = m.get_si();
  } else if (v != 0) {
    z_ = std::make_unique<mpz_class>(v);
  }
}

Scalar::Scalar(const Scalar& o)
    : p_(o.p_), r_(o.r_), z_(o.z_ ? std::make_unique<mpz_class>(*o.z_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this != &o) {
    p_ = o.p_;
    r_ = o.r_;
    z_ = o.z_ ? std::make_unique<mpz_class>(*o.z_) : nullptr;
  }
  return *this;
}

void Scalar::require_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalar characteristic mismatch");
}

bool Scalar::is_zero() const noexcept {
  return p_ > 0 ? r_ == 0 : (!z_ || sgn(*z_) == 0);
}

bool Scalar::is_one() const noexcept {
  return p_ > 0 ? r_ == 1 : (z_ && *z_ == 1);
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (p_ > 0) {
    Scalar s;
    s.p_ = p_;
    s.r_ = mod_reduce(r_ + o.r_, p_);
    return s;
  }
  return Scalar(PrimeChar(0), mpz_class((z_ ? *z_ : mpz_class(0)) + (o.z_ ? *o.z_ : mpz_class(0))));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  if (p_ > 0) {
    Scalar s;
    s.p_ = p_;
    s.r_ = mod_reduce(r_ - o.r_, p_);
    return s;
  }
  return Scalar(PrimeChar(0), mpz_class((z_ ? *z_ : mpz_class(0)) - (o.z_ ? *o.z_ : mpz_class(0))));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (p_ > 0) {
    Scalar s;
    s.p_ = p_;
    s.r_ = mod_reduce(r_ * o.r_, p_);
    return s;
  }
  if (!z_ || !o.z_) return Scalar(PrimeChar(0), 0);
  return Scalar(PrimeChar(0), mpz_class(*z_ * *o.z_));
}

Scalar Scalar::operator-() const {
  if (p_ > 0) {
    Scalar s;
    s.p_ = p_;
    s.r_ = mod_reduce(-r_, p_);
    return s;
  }
  if (!z_) return *this;
  return Scalar(PrimeChar(0), mpz_class(-*z_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (p_ > 0) {
    r_ = mod_reduce(r_ + o.r_, p_);
    return *this;
  }
  if (!o.z_) return *this;
  if (!z_) z_ = std::make_unique<mpz_class>();
  *z_ += *o.z_;
  return *this;
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
  require_same(a);
  require_same(b);
  if (p_ > 0) {
    r_ = mod_reduce(r_ + mod_reduce(a.r_ * b.r_, p_), p_);
    return;
  }
  if (!a.z_ || !b.z_) return;
  if (!z_) z_ = std::make_unique<mpz_class>();
  mpz_addmul(z_->get_mpz_t(), a.z_->get_mpz_t(), b.z_->get_mpz_t());
}

bool Scalar::operator==(const Scalar& o) const {
  require_same(o);
  if (p_ > 0) return r_ == o.r_;
  return (z_ ? *z_ : mpz_class(0)) == (o.z_ ? *o.z_ : mpz_class(0));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ > 0) {
    Scalar s;
    s.p_ = p_;
    s.r_ = inv_mod(r_, p_);
    return s;
  }
  if (*z_ == 1 || *z_ == -1) return *this;
  throw std::domain_error("integer is not invertible");
}

Scalar Scalar::div_exact(const Scalar& d) const {
  require_same(d);
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (p_ > 0) return *this * d.inverse();
  if (is_zero()) return Scalar(PrimeChar(0), 0);
  if (!mpz_divisible_p(z_->get_mpz_t(), d.z_->get_mpz_t()))
    throw std::domain_error("inexact integer division");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), z_->get_mpz_t(), d.z_->get_mpz_t());
  return Scalar(PrimeChar(0), q);
}

mpz_class Scalar::lift() const {
  if (p_ > 0) return mpz_class(static_cast<long>(r_));
  return z_ ? *z_ : mpz_class(0);
}

long long Scalar::lift_ll() const {
  if (p_ > 0) return r_;
  if (!z_) return 0;
  if (!z_->fits_slong_p()) throw std::overflow_error("scalar does not fit in long long");
  return z_->get_si();
}

std::string Scalar::str() const { return lift().get_str(); }

Scalar Scalar::parse(PrimeChar ch, const std::string& decimal) {
  mpz_class v;
  if (v.set_str(decimal, 10) != 0) throw std::invalid_argument("malformed decimal scalar: " + decimal);
  return Scalar(ch, v);
}

mpz_class binom_exact(unsigned long a, unsigned long b) {
  if (b > a) return mpz_class(0);
  if (b > a - b) b = a - b;
  // rows_[n] holds C(n, k) for k <= n/2; the upper half comes by symmetry
  thread_local std::vector<std::vector<mpz_class>> rows;
  if (rows.empty()) rows.push_back({mpz_class(1)});
  while (rows.size() <= a) {
    unsigned long n = rows.size();
    const auto& prev = rows.back();
    std::vector<mpz_class> row(n / 2 + 1);
    row[0] = 1;
    for (unsigned long k = 1; k + k <= n; ++k) {
      const mpz_class& left = prev[k - 1];
      const mpz_class& right = (k + k > n - 1) ? prev[n - 1 - k] : prev[k];
      row[k] = left + right;
    }
    rows.push_back(std::move(row));
  }
  return rows[a][b];
}

Scalar binom_mod(unsigned long long a, unsigned long long b, PrimeChar ch) {
  if (ch.zero_char()) {
    if (a > std::numeric_limits<unsigned long>::max())
      throw std::overflow_error("binomial argument too large for integer semantics");
    return Scalar(ch, binom_exact(static_cast<unsigned long>(a), static_cast<unsigned long>(b)));
  }
  if (b > a) return Scalar(ch, 0);
  const unsigned long p = ch.p();
  long long acc = 1;
  while (a > 0 || b > 0) {
    unsigned long ad = static_cast<unsigned long>(a % p);
    unsigned long bd = static_cast<unsigned long>(b % p);
    if (bd > ad) return Scalar(ch, 0);
    // C(ad, bd) mod p with ad < p, multiplicatively (every t < p is a unit)
    unsigned long k = bd <= ad - bd ? bd : ad - bd;
    long long num = 1, den = 1;
    for (unsigned long t = 1; t <= k; ++t) {
      num = mod_reduce(num * static_cast<long long>((ad - k + t) % p), p);
      den = mod_reduce(den * static_cast<long long>(t % p), p);
    }
    acc = mod_reduce(acc * mod_reduce(num * inv_mod(den, p), p), p);
    a /= p;
    b /= p;
  }
  return Scalar(ch, acc);
}

std::vector<unsigned long> lucas_digits(unsigned long long a, unsigned long base) {
  if (base < 2) throw std::invalid_argument("digit base must be at least 2");
  std::vector<unsigned long> digits;
  do {
    digits.push_back(static_cast<unsigned long>(a % base));
    a /= base;
  } while (a > 0);
  return digits;
}

std::optional<unsigned> as_prime_power(unsigned long long n, unsigned long base) {
  if (base < 2) throw std::invalid_argument("power base must be at least 2");
  if (n == 0) throw std::invalid_argument("power test needs n >= 1");
  unsigned s = 0;
  while (n > 1) {
    if (n % base != 0) return std::nullopt;
    n /= base;
    ++s;
  }
  return s;
}

PrimePower::PrimePower(PrimeChar ch, unsigned s) : ch_(ch), s_(s), q_(1) {
  if (ch.zero_char()) throw std::invalid_argument("prime power needs positive characteristic");
  for (unsigned i = 0; i < s; ++i) {
    if (q_ > (1ull << 62) / ch.p()) throw std::overflow_error("prime power overflow");
    q_ *= ch.p();
  }
}

std::optional<PrimePower> PrimePower::of_value(unsigned long long q, PrimeChar ch) {
  if (ch.zero_char()) return std::nullopt;
  auto s = as_prime_power(q, ch.p());
  if (!s) return std::nullopt;
  return PrimePower(ch, *s);
}

}  // namespace maxthin
