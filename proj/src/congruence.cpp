#include "maxthin/congruence.hpp"

#include <stdexcept>

namespace maxthin {

TruncPoly::TruncPoly(PrimeChar ch, unsigned order) : ch_(ch) {
  if (order == 0) throw std::invalid_argument("truncation order must be positive");
  c_.assign(order, Scalar::zero(ch));
}

TruncPoly TruncPoly::one(PrimeChar ch, unsigned order) {
  TruncPoly f(ch, order);
  f.c_[0] = Scalar::one(ch);
  return f;
}

TruncPoly TruncPoly::x_plus_one(PrimeChar ch, unsigned order) {
  TruncPoly f = one(ch, order);
  if (order > 1) f.c_[1] = Scalar::one(ch);
  return f;
}

const Scalar& TruncPoly::coeff(unsigned j) const {
  if (j >= c_.size()) throw std::out_of_range("coefficient index beyond truncation order");
  return c_[j];
}

void TruncPoly::set_coeff(unsigned j, Scalar v) {
  if (j >= c_.size()) throw std::out_of_range("coefficient index beyond truncation order");
  if (v.field() != ch_) throw std::invalid_argument("coefficient characteristic mismatch");
  c_[j] = std::move(v);
}

namespace {
void require_compatible(const TruncPoly& f, const TruncPoly& g) {
  if (f.field() != g.field()) throw std::invalid_argument("polynomial characteristic mismatch");
  if (f.order() != g.order()) throw std::invalid_argument("polynomial order mismatch");
}
}  // namespace

TruncPoly TruncPoly::operator+(const TruncPoly& g) const {
  require_compatible(*this, g);
  TruncPoly h(ch_, order());
  for (unsigned j = 0; j < order(); ++j) h.c_[j] = c_[j] + g.c_[j];
  return h;
}

TruncPoly TruncPoly::operator-(const TruncPoly& g) const {
  require_compatible(*this, g);
  TruncPoly h(ch_, order());
  for (unsigned j = 0; j < order(); ++j) h.c_[j] = c_[j] - g.c_[j];
  return h;
}

TruncPoly TruncPoly::operator*(const TruncPoly& g) const {
  require_compatible(*this, g);
  TruncPoly h(ch_, order());
  for (unsigned i = 0; i < order(); ++i) {
    if (c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j < order(); ++j) {
      if (g.c_[j].is_zero()) continue;
      h.c_[i + j].addmul(c_[i], g.c_[j]);
    }
  }
  return h;
}

bool TruncPoly::operator==(const TruncPoly& g) const {
  require_compatible(*this, g);
  for (unsigned j = 0; j < order(); ++j)
    if (c_[j] != g.c_[j]) return false;
  return true;
}

std::string TruncPoly::str() const {
  std::string s;
  for (unsigned j = 0; j < order(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[j].str();
    if (j > 0) s += "*X^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

TruncPoly poly_mul_trunc(const TruncPoly& f, const TruncPoly& g) { return f * g; }

TruncPoly poly_pow_trunc(const TruncPoly& f, unsigned long long e) {
  TruncPoly acc = TruncPoly::one(f.field(), f.order());
  TruncPoly base = f;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool frobenius_power_test(unsigned long long n, PrimeChar ch) {
  if (n == 0) throw std::invalid_argument("power criterion needs n >= 1");
  if (ch.zero_char()) throw std::invalid_argument("power criterion needs positive characteristic");
  // Coefficient j of (X+1)^n is C(n,j); scan the middle ones.
  for (unsigned long long j = 1; j < n; ++j)
    if (!binom_mod(n, j, ch).is_zero()) return false;
  return true;
}

bool double_power_test(unsigned long long n, PrimeChar ch) {
  if (n == 0) throw std::invalid_argument("power criterion needs n >= 1");
  if (ch.zero_char()) throw std::invalid_argument("power criterion needs positive characteristic");
  for (unsigned long long k = 1; k < n; ++k)
    if (!binom_mod(2 * n, k, ch).is_zero()) return false;
  return true;
}

bool chain_hypothesis_test(unsigned long long n, PrimeChar ch, bool extended) {
  if (n == 0) throw std::invalid_argument("chain hypothesis needs n >= 1");
  const unsigned long long v = 2 * n + 1;
  const unsigned long long jend = extended ? n : (n >= 1 ? n - 1 : 0);
  if (ch.zero_char()) {
    // Exact integers: walk the Pascal row multiplicatively.
    mpz_class cur = static_cast<unsigned long>(v);  // C(v, 1)
    for (unsigned long long j = 1; j < jend; ++j) {
      mpz_class next = cur * static_cast<unsigned long>(v - j);
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j + 1));
      if (next != mpz_class(static_cast<unsigned long>(n)) * cur) return false;
      cur = next;
    }
    return true;
  }
  const Scalar nbar(ch, static_cast<long long>(n % ch.p()));
  for (unsigned long long j = 1; j < jend; ++j)
    if (binom_mod(v, j + 1, ch) != nbar * binom_mod(v, j, ch)) return false;
  return true;
}

bool chain_hypothesis_poly_test(unsigned long long n, PrimeChar ch) {
  if (n < 2) throw std::invalid_argument("polynomial chain test needs n >= 2");
  const unsigned order = static_cast<unsigned>(n);
  const Scalar nbar(ch, ch.zero_char() ? static_cast<long long>(n)
                                       : static_cast<long long>(n % ch.p()));
  TruncPoly lhs = poly_pow_trunc(TruncPoly::x_plus_one(ch, order), 2 * n + 1);
  TruncPoly lin(ch, order);  // 1 - nX
  lin.set_coeff(0, Scalar::one(ch));
  if (order > 1) lin.set_coeff(1, -nbar);
  lhs = lhs * lin;
  TruncPoly rhs(ch, order);  // 1 + (n+1)X
  rhs.set_coeff(0, Scalar::one(ch));
  if (order > 1) rhs.set_coeff(1, nbar + Scalar::one(ch));
  return lhs == rhs;
}

std::string AdmissibleK::str() const {
  switch (form) {
    case Form::three: return "3";
    case Form::five: return "5";
    case Form::seven: return "7";
    case Form::q: return "q(" + std::to_string(q->q()) + ")";
    case Form::two_q_minus_one: return "2q-1(q=" + std::to_string(q->q()) + ")";
    case Form::two_q_plus_one: return "2q+1(q=" + std::to_string(q->q()) + ")";
  }
  return "?";
}

namespace {

// Prime-power forms tried in the fixed preference order Q, 2q-1, 2q+1
// (q = p^s with s >= 1 for the shifted forms).
std::optional<AdmissibleK> classify_prime_power_forms(unsigned long long v, PrimeChar ch,
                                                      bool allow_plus_one) {
  if (ch.zero_char()) return std::nullopt;
  if (auto pp = PrimePower::of_value(v, ch))
    return AdmissibleK{AdmissibleK::Form::q, *pp, v};
  if (auto pp = PrimePower::of_value((v + 1) / 2, ch); pp && pp->s() >= 1)
    return AdmissibleK{AdmissibleK::Form::two_q_minus_one, *pp, v};
  if (allow_plus_one)
    if (auto pp = PrimePower::of_value((v - 1) / 2, ch); pp && pp->s() >= 1)
      return AdmissibleK{AdmissibleK::Form::two_q_plus_one, *pp, v};
  return std::nullopt;
}

std::optional<AdmissibleK> small_constant(unsigned long long v, bool allow_seven) {
  if (v == 3) return AdmissibleK{AdmissibleK::Form::three, std::nullopt, 3};
  if (v == 5) return AdmissibleK{AdmissibleK::Form::five, std::nullopt, 5};
  if (v == 7 && allow_seven) return AdmissibleK{AdmissibleK::Form::seven, std::nullopt, 7};
  return std::nullopt;
}

}  // namespace

std::optional<AdmissibleK> classify_admissible_k(unsigned long long value, PrimeChar ch) {
  if (value % 2 == 0) throw std::invalid_argument("chain degree must be odd");
  if (value < 3) return std::nullopt;
  if (auto k = classify_prime_power_forms(value, ch, /*allow_plus_one=*/true)) return k;
  return small_constant(value, /*allow_seven=*/true);
}

std::optional<AdmissibleK> classify_final_k(unsigned long long value, PrimeChar ch,
                                            bool half_not_divisible) {
  if (value % 2 == 0 || value < 3) return std::nullopt;
  if (half_not_divisible && !ch.zero_char() && ((value - 1) / 2) % ch.p() == 0)
    return std::nullopt;
  if (auto k = classify_prime_power_forms(value, ch, /*allow_plus_one=*/false)) return k;
  return small_constant(value, /*allow_seven=*/false);
}

std::optional<PrimePower> first_constituent_test(unsigned long long ell, PrimeChar ch) {
  if (ell % 2 != 0) throw std::invalid_argument("first constituent length must be even");
  if (ell < 2) throw std::invalid_argument("first constituent length must be at least 2");
  if (ch.zero_char()) return std::nullopt;
  const unsigned long long half = ell / 2;
  for (unsigned long long j = 1; j < ell; ++j) {
    if (j == half) continue;
    if (!binom_mod(ell, j, ch).is_zero()) return std::nullopt;
  }
  auto pp = PrimePower::of_value(half, ch);
  if (!pp) throw std::logic_error("first-constituent criterion passed off a prime power");
  return pp;
}

std::string AdmissibleConstituent::str() const {
  if (full_length) return "2q(" + std::to_string(value) + ")";
  return "2q-p^" + std::to_string(s) + "(" + std::to_string(value) + ")";
}

std::optional<AdmissibleConstituent> constituent_length_test(unsigned long long ell_r,
                                                             const PrimePower& q) {
  const unsigned long long qq = q.q();
  if (ell_r < qq || ell_r > 2 * qq)
    throw std::out_of_range("constituent length outside [q, 2q]");
  PrimeChar ch = q.field();
  for (unsigned long long j = ell_r; j + 1 < 2 * qq; ++j)
    if (!binom_mod(j, j - ell_r + 1, ch).is_zero()) return std::nullopt;
  if (ell_r == 2 * qq) return AdmissibleConstituent{q, true, 0, ell_r};
  auto s = as_prime_power(2 * qq - ell_r, ch.p());
  if (!s) throw std::logic_error("constituent criterion passed off the closed form");
  return AdmissibleConstituent{q, false, *s, ell_r};
}

bool reflection_identity_check(const PrimePower& q) {
  PrimeChar ch = q.field();
  const unsigned long long qq = q.q();
  for (unsigned long long a = 0; a < qq; ++a) {
    for (unsigned long long b = 0; b <= a; ++b) {
      Scalar lhs = binom_mod(a, b, ch);
      if ((a % 2) != 0) lhs = -lhs;
      Scalar rhs = binom_mod(qq - 1 - b, qq - 1 - a, ch);
      if ((b % 2) != 0) rhs = -rhs;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace maxthin
