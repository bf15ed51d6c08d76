#include <doctest.h>

#include <algorithm>
#include <random>

#include "maxthin/search.hpp"

using namespace maxthin;

namespace {

MaxClassTable table_with_deviations(PrimeChar ch, unsigned maxdeg,
                                    const std::vector<unsigned>& devs) {
  std::vector<ScalarPair> pairs;
  for (unsigned d = 2; d < maxdeg; ++d) {
    bool dev = std::find(devs.begin(), devs.end(), d) != devs.end();
    if (dev)
      pairs.emplace_back(Scalar::zero(ch), Scalar::one(ch));
    else
      pairs.emplace_back(Scalar::one(ch), Scalar::zero(ch));
  }
  return MaxClassTable(ch, maxdeg, std::move(pairs));
}

}  // namespace

TEST_CASE("eval_word on the metabelian table") {
  MaxClassTable t = MaxClassTable::metabelian(PrimeChar(5), 12);
  for (unsigned i = 0; i <= 8; ++i)
    CHECK(eval_word(t, word_y_xi(i).appended(Gen::y)).is_zero());
  HomElem e2 = eval_word(t, LeftNormedWord::parse("yx"));
  CHECK(e2.degree == 2);
  CHECK(e2.v.c[0].is_one());
  HomElem top = eval_word(t, word_y_xi(10));
  CHECK(top.degree == 11);
  CHECK(top.v.c[0].is_one());
  CHECK_THROWS_AS(eval_word(t, word_y_xi(12)), std::out_of_range);
}

TEST_CASE("eval_word at a first-constituent boundary") {
  // ell = 4, p = 2: [y x^4] = 0 because the centralizer at degree 4 is x
  MaxClassTable t = table_with_deviations(PrimeChar(2), 10, {4, 7});
  CHECK(eval_word(t, word_y_xi(4)).is_zero());
  CHECK_FALSE(eval_word(t, word_y_xi(3)).is_zero());
  CHECK_FALSE(eval_word(t, word_y_xi(3).appended(Gen::y)).is_zero());
}

TEST_CASE("bracket components") {
  MaxClassTable meta = MaxClassTable::metabelian(PrimeChar(3), 12);
  for (unsigned i = 2; i <= 5; ++i)
    for (unsigned j = 2; i + j <= 12; ++j) CHECK(bracket_component(meta, i, j).is_zero());

  MaxClassTable t = table_with_deviations(PrimeChar(2), 12, {4, 7, 10});
  BracketEngine eng = t.engine();
  for (unsigned i = 2; i + i <= 12; ++i) CHECK(bracket_component(eng, i, i).is_zero());
  // antisymmetry of the two recursion paths
  for (unsigned i = 2; i <= 5; ++i)
    for (unsigned j = 2; i + j <= 12; ++j)
      CHECK(bracket_component(eng, i, j) == -bracket_component(eng, j, i));

  // [e_2, e_3] against the generalized Jacobi expansion [e_2 [y x x]]
  FormalSum rhs = expand_generalized_jacobi(LeftNormedWord::parse("yx"), Gen::y, Gen::x, 2,
                                            t.field());
  HomElem direct = eng.bracket(eng.eval(LeftNormedWord::parse("yx")), eng.eval(word_y_xi(2)));
  CHECK(direct.v == eng.eval(rhs).v);
}

TEST_CASE("jacobi consistency verdicts") {
  CHECK_FALSE(jacobi_consistency(MaxClassTable::metabelian(PrimeChar(2), 16), 16).has_value());
  CHECK_FALSE(
      jacobi_consistency(MaxClassTable::metabelian(PrimeChar(2), 16), 16, true).has_value());

  // odd first deviation dies at degree ell + 1
  MaxClassTable odd = table_with_deviations(PrimeChar(2), 10, {5});
  auto bad = jacobi_consistency(odd, 10);
  REQUIRE(bad.has_value());
  CHECK(bad->degree == 6);
  CHECK(bad->kind == Inconsistency::Kind::alternating);

  // ell = 6 is not twice a power of 2; every continuation dies by degree 18
  for (const auto& t : collect_maxclass([] {
         SearchConfig cfg;
         cfg.field = PrimeChar(2);
         cfg.maxdeg = 18;
         cfg.kind = TableKind::maxclass;
         return cfg;
       }())) {
    ConstituentProfile prof = constituent_profile(t);
    CHECK(prof.ell != 6u);
  }
  MaxClassTable ell6 = table_with_deviations(PrimeChar(2), 18, {6, 9, 12, 15});
  CHECK(jacobi_consistency(ell6, 18).has_value());
}

TEST_CASE("centralizer sequences and round trips") {
  MaxClassTable meta = MaxClassTable::metabelian(PrimeChar(7), 9);
  CentralizerSequence seq = centralizer_sequence(meta);
  for (const auto& [cx, cy] : seq.points) {
    CHECK(cx.is_zero());
    CHECK(cy.is_one());
  }

  MaxClassTable t = table_with_deviations(PrimeChar(2), 12, {4, 7, 10});
  CentralizerSequence s2 = centralizer_sequence(t);
  CHECK(s2.points[0].second.is_one());  // first centralizer is y
  CHECK(s2.points[4 - 2].first.is_one());
  CHECK(s2.points[4 - 2].second.is_zero());  // first deviation is x
  MaxClassTable back = maxclass_from_centralizers(s2, 12);
  CHECK(back == t);

  // mixed points round-trip too (p = 5, pair (1, 2) <-> point (-2, 1))
  PrimeChar p5(5);
  std::vector<ScalarPair> pairs(8, {Scalar::one(p5), Scalar::zero(p5)});
  pairs[4] = {Scalar::zero(p5), Scalar::one(p5)};
  pairs[6] = {Scalar::one(p5), Scalar(p5, 2)};
  MaxClassTable mixed(p5, 12, std::move(pairs));
  CHECK(maxclass_from_centralizers(centralizer_sequence(mixed), 12) == mixed);
}

TEST_CASE("constituent profiles") {
  ConstituentProfile meta = constituent_profile(MaxClassTable::metabelian(PrimeChar(2), 14));
  CHECK_FALSE(meta.ell.has_value());
  CHECK(meta.boundaries.empty());
  CHECK(meta.determined_up_to == 13);

  ConstituentProfile prof =
      constituent_profile(table_with_deviations(PrimeChar(2), 16, {4, 7, 9, 13}));
  CHECK(prof.ell == 4u);
  CHECK(prof.boundaries == std::vector<unsigned>{4, 7, 9, 13});
  CHECK(prof.subsequent == std::vector<unsigned>{3, 2, 4});

  // p = 3: consistent tables with ell = 6 have second constituent 3
  for (const auto& t : collect_maxclass([] {
         SearchConfig cfg;
         cfg.field = PrimeChar(3);
         cfg.maxdeg = 12;
         cfg.kind = TableKind::maxclass;
         return cfg;
       }())) {
    ConstituentProfile p = constituent_profile(t);
    if (p.ell == 6u && p.boundaries.size() >= 2) CHECK(p.subsequent[0] == 3);
  }
}

TEST_CASE("sandwich checks") {
  CHECK(sandwich_check(MaxClassTable::metabelian(PrimeChar(2), 12), 12));
  for (const auto& t : collect_maxclass([] {
         SearchConfig cfg;
         cfg.field = PrimeChar(2);
         cfg.maxdeg = 12;
         cfg.kind = TableKind::maxclass;
         return cfg;
       }()))
    CHECK(sandwich_check(t, 12));

  // two consecutive y-active degrees break it
  PrimeChar p3(3);
  std::vector<ScalarPair> pairs(8, {Scalar::one(p3), Scalar::zero(p3)});
  pairs[4 - 2] = {Scalar::one(p3), Scalar::one(p3)};
  pairs[5 - 2] = {Scalar::one(p3), Scalar::one(p3)};
  MaxClassTable corrupted(p3, 10, std::move(pairs));
  CHECK_FALSE(sandwich_check(corrupted, 10));
}

TEST_CASE("expansion and evaluation agree on randomized cases") {
  std::mt19937_64 rng(20240817);
  for (unsigned long p : {0ul, 2ul, 3ul, 5ul, 7ul}) {
    PrimeChar ch(p);
    std::vector<MaxClassTable> tables;
    tables.push_back(MaxClassTable::metabelian(ch, 14));
    SearchConfig cfg;
    cfg.field = ch;
    cfg.maxdeg = 14;
    cfg.kind = TableKind::maxclass;
    for (const auto& t : collect_maxclass(cfg)) {
      tables.push_back(t);
      if (tables.size() >= 6) break;
    }
    for (unsigned iter = 0; iter < 200; ++iter) {
      const MaxClassTable& t = tables[rng() % tables.size()];
      BracketEngine eng = t.engine();
      unsigned j = rng() % 4;
      unsigned prefix_len = 1 + rng() % (14 - j - 2);
      std::vector<Gen> letters;
      for (unsigned i = 0; i < prefix_len; ++i)
        letters.push_back(rng() % 2 ? Gen::y : Gen::x);
      LeftNormedWord prefix(letters);
      Gen head = rng() % 2 ? Gen::y : Gen::x;
      Gen tail = rng() % 2 ? Gen::y : Gen::x;

      LeftNormedWord inner = LeftNormedWord(std::vector<Gen>{head}).appended_run(tail, j);
      HomElem lhs = eng.bracket(eng.eval(prefix), eng.eval(inner));
      FormalSum rhs = expand_generalized_jacobi(prefix, head, tail, j, ch);
      CHECK(lhs.v == eng.eval(rhs).v);
    }
  }
}
