#include <doctest.h>

#include "maxthin/words.hpp"

using namespace maxthin;

TEST_CASE("word construction and parsing") {
  LeftNormedWord w = LeftNormedWord::parse("yxxy");
  CHECK(w.degree() == 4);
  CHECK(w.str() == "yxxy");
  CHECK(word_y_xi(3).str() == "yxxx");
  CHECK(w.appended(Gen::x).str() == "yxxyx");
  CHECK(w.appended_run(Gen::x, 2).str() == "yxxyxx");
  CHECK_THROWS_AS(LeftNormedWord::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LeftNormedWord::parse("yxz"), std::invalid_argument);
}

TEST_CASE("formal sums normalize") {
  PrimeChar p3(3);
  FormalSum s(p3, 2);
  s.add(Scalar(p3, 1), LeftNormedWord::parse("yx"));
  s.add(Scalar(p3, 2), LeftNormedWord::parse("yx"));
  s.add(Scalar(p3, 1), LeftNormedWord::parse("xy"));
  CHECK(s.terms().size() == 1);  // 1 + 2 = 0 mod 3 cancels [yx]
  CHECK(s.terms().front().word.str() == "xy");
  CHECK_THROWS_AS(s.add(Scalar(p3, 1), LeftNormedWord::parse("yxx")), std::invalid_argument);
}

TEST_CASE("generalized Jacobi expansion") {
  PrimeChar p0(0);
  LeftNormedWord v = LeftNormedWord::parse("yx");

  // j = 1: [v y z] - [v z y] with y-head, x-tail
  FormalSum s1 = expand_generalized_jacobi(v, Gen::y, Gen::x, 1, p0);
  REQUIRE(s1.terms().size() == 2);
  CHECK(s1.terms()[0].word.str() == "yxxy");
  CHECK(s1.terms()[0].coeff == Scalar(p0, -1));
  CHECK(s1.terms()[1].word.str() == "yxyx");
  CHECK(s1.terms()[1].coeff == Scalar(p0, 1));

  // j = 2: [v y z z] - 2 [v z y z] + [v z z y]
  FormalSum s2 = expand_generalized_jacobi(v, Gen::y, Gen::x, 2, p0);
  REQUIRE(s2.terms().size() == 3);
  CHECK(s2.terms()[0].word.str() == "yxxxy");
  CHECK(s2.terms()[0].coeff == Scalar(p0, 1));
  CHECK(s2.terms()[1].word.str() == "yxxyx");
  CHECK(s2.terms()[1].coeff == Scalar(p0, -2));
  CHECK(s2.terms()[2].word.str() == "yxyxx");
  CHECK(s2.terms()[2].coeff == Scalar(p0, 1));

  // j = 3 in characteristic 3: middle binomials vanish
  PrimeChar p3(3);
  FormalSum s3 = expand_generalized_jacobi(v, Gen::y, Gen::x, 3, p3);
  REQUIRE(s3.terms().size() == 2);
  CHECK(s3.terms()[0].word.str() == "yxxxxy");
  CHECK(s3.terms()[0].coeff == Scalar(p3, -1));
  CHECK(s3.terms()[1].word.str() == "yxyxxx");
  CHECK(s3.terms()[1].coeff == Scalar(p3, 1));
}
