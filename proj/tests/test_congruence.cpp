#include <doctest.h>

#include "maxthin/congruence.hpp"
#include "oracles.hpp"

using namespace maxthin;

namespace {
TruncPoly poly_of(PrimeChar ch, unsigned order, std::initializer_list<long long> coeffs) {
  TruncPoly f(ch, order);
  unsigned j = 0;
  for (long long c : coeffs) f.set_coeff(j++, Scalar(ch, c));
  return f;
}
}  // namespace

TEST_CASE("truncated multiplication") {
  PrimeChar p2(2);
  TruncPoly f = TruncPoly::x_plus_one(p2, 3);
  CHECK(f * f == poly_of(p2, 3, {1, 0, 1}));  // (1+X)^2 = 1+X^2 in char 2

  PrimeChar p5(5);
  TruncPoly g = TruncPoly::x_plus_one(p5, 2);
  CHECK(g * poly_of(p5, 2, {1, -1}) == TruncPoly::one(p5, 2));  // (1+X)(1-X) = 1 mod X^2
  CHECK(g * TruncPoly::one(p5, 2) == g);

  CHECK_THROWS_AS(f * g, std::invalid_argument);
  CHECK_THROWS_AS(f * TruncPoly::one(p2, 4), std::invalid_argument);
}

TEST_CASE("truncated powers") {
  PrimeChar p2(2);
  CHECK(poly_pow_trunc(TruncPoly::x_plus_one(p2, 8), 4) == poly_of(p2, 8, {1, 0, 0, 0, 1}));
  CHECK(poly_pow_trunc(TruncPoly::x_plus_one(p2, 8), 8) == TruncPoly::one(p2, 8));
  CHECK(poly_pow_trunc(poly_of(p2, 4, {1, 1, 1}), 0) == TruncPoly::one(p2, 4));

  // coefficient j of (1+X)^e is C(e, j)
  for (unsigned long p : {3ul, 5ul}) {
    PrimeChar ch(p);
    for (unsigned e : {6u, 11u, 25u}) {
      TruncPoly f = poly_pow_trunc(TruncPoly::x_plus_one(ch, 16), e);
      for (unsigned j = 0; j < 16; ++j)
        CHECK(f.coeff(j).lift_ll() == static_cast<long long>(oracles::binom_mod(e, j, p)));
    }
  }
}

TEST_CASE("power criteria examples") {
  CHECK(frobenius_power_test(9, PrimeChar(3)));
  CHECK_FALSE(frobenius_power_test(6, PrimeChar(3)));  // C(6,3) = 20 = 2 mod 3
  CHECK(frobenius_power_test(1, PrimeChar(5)));
  CHECK(double_power_test(4, PrimeChar(2)));
  CHECK_FALSE(double_power_test(6, PrimeChar(2)));  // C(12,4) = 495 is odd
  CHECK(double_power_test(1, PrimeChar(7)));
}

TEST_CASE("power criteria agree with the polynomial route at small n") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    PrimeChar ch(p);
    for (unsigned n = 1; n <= 120; ++n) {
      TruncPoly xp1 = TruncPoly::x_plus_one(ch, n + 1);
      TruncPoly pw = poly_pow_trunc(xp1, n);
      TruncPoly target(ch, n + 1);
      target.set_coeff(0, Scalar::one(ch));
      target.set_coeff(n, Scalar::one(ch));
      CHECK(frobenius_power_test(n, ch) == (pw == target));

      TruncPoly dbl = poly_pow_trunc(TruncPoly::x_plus_one(ch, n), 2 * n);
      CHECK(double_power_test(n, ch) == (dbl == TruncPoly::one(ch, n)));
    }
  }
}

TEST_CASE("power criteria hold exactly on powers of p") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    PrimeChar ch(p);
    for (unsigned long long n = 1; n <= 600; ++n) {
      const bool is_power = oracles::is_power_of(n, p);
      CHECK(frobenius_power_test(n, ch) == is_power);
      CHECK(double_power_test(n, ch) == is_power);
    }
  }
}

TEST_CASE("chain hypothesis examples") {
  for (unsigned long p : {0ul, 2ul, 3ul, 5ul, 7ul}) {
    CHECK(chain_hypothesis_test(3, PrimeChar(p)));  // j = 1: C(7,2) = 21 = 3*7
    CHECK(chain_hypothesis_test(2, PrimeChar(p)));  // empty range
  }
  CHECK_FALSE(chain_hypothesis_test(4, PrimeChar(7)));  // j = 2: 84 vs 144
}

TEST_CASE("polynomial chain test examples and agreement") {
  CHECK(chain_hypothesis_poly_test(2, PrimeChar(3)));
  CHECK_FALSE(chain_hypothesis_poly_test(4, PrimeChar(7)));
  for (unsigned long long q : {4ull, 8ull, 9ull, 5ull})
    CHECK(chain_hypothesis_poly_test(q, PrimeChar(q % 2 == 0 ? 2 : (q == 9 ? 3 : 5))));

  for (unsigned long p : {0ul, 2ul, 3ul, 5ul, 7ul}) {
    PrimeChar ch(p);
    for (unsigned long long n = 2; n <= 400; ++n)
      CHECK(chain_hypothesis_poly_test(n, ch) == chain_hypothesis_test(n, ch));
  }
}

TEST_CASE("lemma classification examples") {
  auto k1 = classify_admissible_k(9, PrimeChar(2));
  REQUIRE(k1.has_value());
  CHECK(k1->form == AdmissibleK::Form::two_q_plus_one);
  CHECK(k1->q->q() == 4);

  auto k2 = classify_admissible_k(9, PrimeChar(5));
  REQUIRE(k2.has_value());
  CHECK(k2->form == AdmissibleK::Form::two_q_minus_one);
  CHECK(k2->q->q() == 5);

  CHECK_FALSE(classify_admissible_k(11, PrimeChar(3)).has_value());
  CHECK_THROWS_AS(classify_admissible_k(8, PrimeChar(3)), std::invalid_argument);

  for (unsigned long long v : {3ull, 5ull, 7ull}) CHECK(classify_admissible_k(v, PrimeChar(0)));
  CHECK_FALSE(classify_admissible_k(9, PrimeChar(0)).has_value());
}

TEST_CASE("hypothesis set equals the closed form") {
  for (unsigned long p : {0ul, 2ul, 3ul, 5ul, 7ul}) {
    PrimeChar ch(p);
    for (unsigned long long v = 3; v <= 401; v += 2)
      CHECK(chain_hypothesis_test((v - 1) / 2, ch) == classify_admissible_k(v, ch).has_value());
  }
}

TEST_CASE("extended range drops 7 and 2q+1 for odd p") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    PrimeChar ch(p);
    for (unsigned long long v = 3; v <= 401; v += 2) {
      auto cls = classify_admissible_k(v, ch);
      bool keep = cls && (cls->form == AdmissibleK::Form::three ||
                          cls->form == AdmissibleK::Form::five ||
                          cls->form == AdmissibleK::Form::q ||
                          cls->form == AdmissibleK::Form::two_q_minus_one) &&
                  !(v == 7 && p != 7);
      CHECK(chain_hypothesis_test((v - 1) / 2, ch, /*extended=*/true) == keep);
    }
  }
}

TEST_CASE("theorem-level classification") {
  auto k1 = classify_final_k(7, PrimeChar(2));
  REQUIRE(k1.has_value());
  CHECK(k1->form == AdmissibleK::Form::two_q_minus_one);
  CHECK(k1->q->q() == 4);

  CHECK_FALSE(classify_final_k(7, PrimeChar(5)).has_value());

  auto k3 = classify_final_k(5, PrimeChar(0));
  REQUIRE(k3.has_value());
  CHECK(k3->form == AdmissibleK::Form::five);

  CHECK_FALSE(classify_final_k(5, PrimeChar(2)).has_value());   // (5-1)/2 is even
  CHECK_FALSE(classify_final_k(9, PrimeChar(2)).has_value());   // 2q+1 dropped at theorem level
  CHECK(classify_final_k(9, PrimeChar(3)).has_value());         // 9 = 3^2
  CHECK(classify_final_k(3, PrimeChar(7)).has_value());
}

TEST_CASE("first constituent criterion") {
  auto q1 = first_constituent_test(6, PrimeChar(3));
  REQUIRE(q1.has_value());
  CHECK(q1->q() == 3);
  CHECK_FALSE(first_constituent_test(6, PrimeChar(5)).has_value());
  auto q2 = first_constituent_test(4, PrimeChar(2));
  REQUIRE(q2.has_value());
  CHECK(q2->q() == 2);
  CHECK_THROWS_AS(first_constituent_test(7, PrimeChar(3)), std::invalid_argument);
  CHECK_FALSE(first_constituent_test(6, PrimeChar(0)).has_value());

  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    PrimeChar ch(p);
    for (unsigned long long ell = 2; ell <= 400; ell += 2)
      CHECK(first_constituent_test(ell, ch).has_value() == oracles::is_power_of(ell / 2, p));
  }
}

TEST_CASE("later constituent criterion") {
  PrimePower q4(PrimeChar(2), 2);
  auto c1 = constituent_length_test(6, q4);
  REQUIRE(c1.has_value());
  CHECK_FALSE(c1->full_length);
  CHECK(c1->s == 1);
  CHECK_FALSE(constituent_length_test(5, q4).has_value());
  auto c2 = constituent_length_test(8, q4);
  REQUIRE(c2.has_value());
  CHECK(c2->full_length);
  CHECK_THROWS_AS(constituent_length_test(3, q4), std::out_of_range);
  CHECK_THROWS_AS(constituent_length_test(9, q4), std::out_of_range);

  // closed form over the spec's q list
  auto check_q = [](unsigned long p, unsigned s) {
    PrimePower q(PrimeChar(p), s);
    for (unsigned long long ell = q.q(); ell <= 2 * q.q(); ++ell) {
      bool closed = ell == 2 * q.q() ||
                    (2 * q.q() - ell <= q.q() && oracles::is_power_of(2 * q.q() - ell, p));
      CHECK(constituent_length_test(ell, q).has_value() == closed);
    }
  };
  check_q(2, 1);
  check_q(2, 2);
  check_q(2, 3);
  check_q(2, 4);
  check_q(3, 1);
  check_q(3, 2);
  check_q(3, 3);
  check_q(5, 1);
  check_q(5, 2);
  check_q(7, 1);
}

TEST_CASE("reflection identity") {
  CHECK(reflection_identity_check(PrimePower(PrimeChar(5), 1)));
  CHECK(reflection_identity_check(PrimePower(PrimeChar(3), 2)));
  CHECK(reflection_identity_check(PrimePower(PrimeChar(2), 3)));
}
