#include <map>
#include <set>

#include "doctest.h"
#include "esf/rs.hpp"

using namespace esf;

namespace {

using Pair = std::pair<std::string, std::string>;

std::map<std::string, Pair> by_w(const std::vector<RSRow>& rows) {
  std::map<std::string, Pair> out;
  for (const auto& r : rows) out[r.w.display()] = {r.T.display(), r.Tprime.display()};
  return out;
}

std::vector<std::string> w_column(const std::vector<RSRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.w.to_string());
  return out;
}

}  // namespace

TEST_CASE("naive row bumping") {
  auto [p, q] = naive_rs(SignedPerm::parse("2 -6 -3 1 8 5 4 -7"));
  CHECK(p == StandardBitableau{{{1, 4}, {2, 5}, {8}}, {{3, 7}, {6}}});
  CHECK(q == StandardBitableau{{{1, 5}, {4, 6}, {7}}, {{2, 8}, {3}}});
  CHECK(p.display() == "41/52/8;37/6");
  CHECK(q.display() == "51/64/7;28/3");

  for (int n = 1; n <= 5; ++n) {
    auto [pi, qi] = naive_rs(SignedPerm::identity(n));
    std::vector<int> row(n);
    for (int i = 0; i < n; ++i) row[i] = i + 1;
    CHECK(pi == StandardBitableau{{row}, {}});
    CHECK(qi == pi);
  }

  auto [ps, qs] = naive_rs(SignedPerm::parse("-2 -1"));
  CHECK(ps == StandardBitableau{{}, {{1}, {2}}});
  CHECK(ps.shape() == Bipartition{{}, {1, 1}});
}

TEST_CASE("naive RS is a bijection onto same-shape pairs") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::pair<StandardBitableau, StandardBitableau>> seen;
    for (const auto& w : enumerate_weyl(n)) {
      auto pq = naive_rs(w);
      CHECK(pq.first.shape() == pq.second.shape());
      CHECK_NOTHROW(pq.first.validate());
      CHECK_NOTHROW(pq.second.validate());
      seen.insert(pq);
    }
    CHECK(seen.size() == enumerate_weyl(n).size());
  }
}

TEST_CASE("geometric table at n = 1") {
  auto rows = full_table(1, 0xE307C);
  REQUIRE(rows.size() == 2);
  CHECK(by_w(rows) == std::map<std::string, Pair>{{"1", {"1;-", "1;-"}}, {"1̄", {"-;1", "-;1"}}});
  CHECK(compare_naive_geometric(rows).empty());
}

TEST_CASE("geometric table at n = 2") {
  const std::map<std::string, Pair> expected = {
      {"12", {"21;-", "21;-"}},     {"1̄2", {"2;1", "2;1"}},     {"21", {"1;2", "1;2"}},
      {"2̄1", {"1;2", "2;1"}},      {"21̄", {"2;1", "1;2"}},     {"2̄1̄", {"-;12", "-;12"}},
      {"12̄", {"1/2;-", "1/2;-"}},  {"1̄2̄", {"-;1/2", "-;1/2"}},
  };
  std::vector<std::string> first;
  for (std::uint64_t seed : {0xE307CULL, 1ULL, 2ULL}) {
    auto rows = full_table(2, seed);
    CHECK(by_w(rows) == expected);
    for (const auto& r : rows) {
      CHECK(r.consensus >= 0.9);
      CHECK(r.samples_used == 8);
      CHECK(r.T.shape() == r.bp);
      CHECK(r.Tprime.shape() == r.bp);
    }
    std::set<std::string> dis;
    for (const auto& d : compare_naive_geometric(rows)) dis.insert(d.w.display());
    CHECK(dis == std::set<std::string>{"21", "2̄1̄", "12̄", "1̄2̄"});
    if (first.empty()) first = w_column(rows);
    CHECK(w_column(rows) == first);
  }
}

TEST_CASE("single rows") {
  auto id = geometric_rs({{2}, {}}, {{{1, 2}}, {}}, {{{1, 2}}, {}}, 5);
  CHECK(id.w == SignedPerm::identity(2));
  auto sts = geometric_rs({{}, {2}}, {{}, {{1, 2}}}, {{}, {{1, 2}}}, 5);
  CHECK(sts.w == SignedPerm::parse("-2 -1"));
  auto t = geometric_rs({{1}, {1}}, {{{1}}, {{2}}}, {{{1}}, {{2}}}, 5);
  CHECK(t.w == SignedPerm::parse("2 1"));

  RSOptions few;
  few.samples = 2;
  CHECK_THROWS_AS(geometric_rs({{2}, {}}, {{{1, 2}}, {}}, {{{1, 2}}, {}}, 5, few), std::invalid_argument);
  CHECK_THROWS_AS(geometric_rs({{2}, {}}, {{}, {{1, 2}}}, {{{1, 2}}, {}}, 5), std::invalid_argument);
}

TEST_CASE("bijection and symmetry at n = 3") {
  auto rows = full_table(3, 11);
  REQUIRE(rows.size() == 48);
  CHECK(bijection_report(3, rows).empty());
  std::map<std::pair<StandardBitableau, StandardBitableau>, SignedPerm> w_of;
  for (const auto& r : rows) w_of[{r.T, r.Tprime}] = r.w;
  for (const auto& r : rows) CHECK(w_of.at({r.Tprime, r.T}) == r.w.inverse());

  auto broken = rows;
  broken[1].w = broken[0].w;
  CHECK_FALSE(bijection_report(3, broken).empty());
}
