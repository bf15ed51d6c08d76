#include <doctest.h>

#include "maxthin/serialize.hpp"

using namespace maxthin;

namespace {
SearchConfig cfg_of(unsigned long p, unsigned maxdeg, TableKind kind) {
  SearchConfig cfg;
  cfg.field = PrimeChar(p);
  cfg.maxdeg = maxdeg;
  cfg.kind = kind;
  return cfg;
}
}  // namespace

TEST_CASE("documents round-trip exactly over enumerated tables") {
  for (unsigned long p : {2ul, 3ul}) {
    for (const auto& t : collect_maxclass(cfg_of(p, 12, TableKind::maxclass))) {
      std::string line = document_line(serialize(t));
      ParsedAlgebra back = parse_algebra_line(line);
      REQUIRE(std::holds_alternative<MaxClassTable>(back));
      CHECK(std::get<MaxClassTable>(back) == t);
      CHECK(document_line(serialize(std::get<MaxClassTable>(back))) == line);
    }
    for (const auto& t : collect_thin(cfg_of(p, 10, TableKind::thin))) {
      std::string line = document_line(serialize(t));
      ParsedAlgebra back = parse_algebra_line(line);
      REQUIRE(std::holds_alternative<ThinTable>(back));
      CHECK(std::get<ThinTable>(back) == t);
      CHECK(document_line(serialize(std::get<ThinTable>(back))) == line);
    }
  }
  // integer semantics round-trips through decimal strings
  for (const auto& t : collect_maxclass(cfg_of(0, 10, TableKind::maxclass))) {
    ParsedAlgebra back = parse_algebra_line(document_line(serialize(t)));
    CHECK(std::get<MaxClassTable>(back) == t);
  }
}

TEST_CASE("strict parsing") {
  MaxClassTable t = MaxClassTable::metabelian(PrimeChar(2), 8);
  Json doc = serialize(t);

  Json extra = doc;
  extra["comment"] = "hello";
  CHECK_THROWS_AS(parse_algebra(extra), DocumentError);

  Json missing = doc;
  missing.erase("centralizers");
  CHECK_THROWS_AS(parse_algebra(missing), DocumentError);

  Json bad_schema = doc;
  bad_schema["schema"] = "other/1";
  CHECK_THROWS_AS(parse_algebra(bad_schema), DocumentError);

  Json bad_p = doc;
  bad_p["p"] = 15;
  CHECK_THROWS_AS(parse_algebra(bad_p), DocumentError);

  Json bad_scalar = doc;
  bad_scalar["centralizers"][0][0] = "xyz";
  CHECK_THROWS_AS(parse_algebra(bad_scalar), DocumentError);

  CHECK_THROWS_AS(parse_algebra_line("{not json"), DocumentError);
  CHECK_THROWS_AS(parse_algebra_line("{\"schema\":\"maxthin.algebra/1\",\"kind\":\"maxclass\"}"),
                  DocumentError);
}

TEST_CASE("non-canonical integer documents are rejected") {
  // a centralizer point like (1, 2) forces a non-unit leading pair entry
  std::string line =
      R"({"schema":"maxthin.algebra/1","kind":"maxclass","p":0,"maxdeg":6,)"
      R"("centralizers":[["0","1"],["0","1"],["0","2"],["0","1"]]})";
  CHECK_THROWS_AS(parse_algebra_line(line), DocumentError);
}
