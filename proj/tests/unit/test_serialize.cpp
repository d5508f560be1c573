#include "doctest.h"
#include "esf/serialize.hpp"

using namespace esf;

TEST_CASE("bitableau json mirrors the left rows") {
  StandardBitableau t{{{2, 3}, {5}}, {{1}, {4}}};
  CHECK(to_json(t).dump() == "[[[3,2],[5]],[[1],[4]]]");
  CHECK(to_json(StandardBitableau{}).dump() == "[[],[]]");
}

TEST_CASE("RS row formats") {
  RSRow row{{{1}, {1}}, {{{1}}, {{2}}}, {{{2}}, {{1}}}, SignedPerm::parse("2 -1"), 8, 1.0};
  auto j = to_json(row);
  CHECK(j.dump() ==
        R"({"mu":"1","nu":"1","T":[[[1]],[[2]]],"Tprime":[[[2]],[[1]]],"w":"2 -1","length":2,"consensus":"1.000000"})");
  CHECK(tsv_header() == "mu\tnu\tT\tTprime\tw\tlength\tconsensus");
  CHECK(to_tsv(row) == "1\t1\t1;2\t2;1\t2 -1\t2\t1.000000");
  CHECK(format_fraction(7.0 / 8.0) == "0.875000");
}

TEST_CASE("exotic point json") {
  auto p = build_normal_form({{1}, {}});
  auto j = to_json(p);
  CHECK(j["n"] == 1);
  CHECK(j["bipartition"] == "1|0");
  CHECK(j["basis_labels"].dump() == R"(["v_1,1","v*_1,1"])");
  CHECK(j["v"].dump() == R"(["1","0"])");
  CHECK(j["x"].dump() == R"([["0","0"],["0","0"]])");
}

TEST_CASE("rational rendering") {
  RatVector v{Rational(1, 2), Rational(-3), Rational(0)};
  CHECK(to_strings(v) == std::vector<std::string>{"1/2", "-3", "0"});
}
