#include <map>
#include <set>

#include "doctest.h"
#include "esf/jordancalc.hpp"
#include "esf/weyl.hpp"

using namespace esf;

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return out;
}

IntersectionTable table_from(int n, const std::vector<std::vector<int>>& inner) {
  IntersectionTable t;
  t.n = n;
  t.a.assign(2 * n + 1, std::vector<int>(2 * n + 1, 0));
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) t.a[i][j] = inner[i - 1][j - 1];
  return t;
}

// Random pair of generic flags over a random bipartition of n.
std::pair<Flag, Flag> random_flag_pair(int n, Rng& rng) {
  auto bps = enumerate_bipartitions(n);
  const auto& bp = bps[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(bps.size()) - 1))];
  auto syb = enumerate_syb(bp);
  const auto& t1 = syb[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(syb.size()) - 1))];
  const auto& t2 = syb[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(syb.size()) - 1))];
  SamplerOptions opts;
  opts.height = 1000;
  return {sample_generic_flag(bp, t1, rng, opts), sample_generic_flag(bp, t2, rng, opts)};
}

}  // namespace

TEST_CASE("SignedPerm basics") {
  auto w = SignedPerm::parse("-2 1");
  CHECK(w.images() == std::vector<int>{-2, 1});
  CHECK(w.to_string() == "-2 1");
  CHECK(w.display() == "2̄1");
  CHECK(SignedPerm::parse("2̄1") == w);
  CHECK(w(1) == -2);
  CHECK(w(-2) == -1);
  CHECK(w * w.inverse() == SignedPerm::identity(2));
  CHECK(SignedPerm::generator(2, 0) == SignedPerm::parse("-1 2"));
  CHECK(SignedPerm::generator(3, 2) == SignedPerm::parse("1 3 2"));
  CHECK_THROWS(SignedPerm::parse("1 1"));
  CHECK_THROWS(SignedPerm::parse("1 3"));
  CHECK_THROWS(SignedPerm(std::vector<int>{0}));
}

TEST_CASE("enumerate_weyl") {
  CHECK(enumerate_weyl(1) == std::vector<SignedPerm>{SignedPerm::parse("1"), SignedPerm::parse("-1")});
  CHECK(enumerate_weyl(2).size() == 8);
  CHECK(enumerate_weyl(3).size() == 48);
  CHECK(enumerate_weyl(4).size() == 384);
  auto all = enumerate_weyl(3);
  CHECK(std::set<SignedPerm>(all.begin(), all.end()).size() == 48);
}

TEST_CASE("embed_iota") {
  CHECK(embed_iota(SignedPerm::identity(3)) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(embed_iota(SignedPerm::generator(2, 0)) == std::vector<int>{1, 3, 2, 4});
  CHECK(embed_iota(SignedPerm::generator(3, 1)) == std::vector<int>{1, 3, 2, 5, 4, 6});

  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_weyl(n);
    std::set<std::vector<int>> images;
    for (const auto& u : all) {
      auto iu = embed_iota(u);
      for (int i = 1; i <= 2 * n; ++i) CHECK(iu[2 * n - i] == 2 * n + 1 - iu[i - 1]);
      CHECK(from_centrosymmetric(iu) == u);
      images.insert(iu);
      for (const auto& v : all) CHECK(embed_iota(u * v) == compose(iu, embed_iota(v)));
    }
    CHECK(images.size() == all.size());

    // every centrosymmetric permutation of 2n arises
    std::vector<int> perm(2 * n);
    for (int i = 0; i < 2 * n; ++i) perm[i] = i + 1;
    int centro = 0;
    do {
      bool ok = true;
      for (int i = 1; i <= 2 * n; ++i) ok = ok && perm[2 * n - i] == 2 * n + 1 - perm[i - 1];
      if (ok) {
        ++centro;
        CHECK(images.count(perm) == 1);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(centro == static_cast<int>(all.size()));
  }
  CHECK_THROWS(from_centrosymmetric({2, 1, 3, 4}));
}

TEST_CASE("length") {
  CHECK(length(SignedPerm::identity(3)) == 0);
  CHECK(length(SignedPerm::generator(3, 0)) == 1);
  CHECK(length(SignedPerm::parse("-1 -2")) == 4);

  const std::map<int, std::vector<int>> poincare = {
      {1, {1, 1}},
      {2, {1, 2, 2, 2, 1}},
      {3, {1, 3, 5, 7, 8, 8, 7, 5, 3, 1}},
  };
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> counts(n * n + 1, 0);
    for (const auto& w : enumerate_weyl(n)) {
      CHECK(length(w) == length(w.inverse()));
      ++counts[length(w)];
    }
    CHECK(counts == poincare.at(n));
  }
}

TEST_CASE("labels and positions") {
  CHECK(label_position(2, 2) == 1);
  CHECK(label_position(2, 1) == 2);
  CHECK(label_position(2, -1) == 3);
  CHECK(label_position(2, -2) == 4);
  for (int p = 1; p <= 6; ++p) CHECK(label_position(3, position_label(3, p)) == p);
}

TEST_CASE("reading a rank-2 intersection table") {
  auto t = table_from(2, {{0, 1, 1, 1}, {1, 2, 2, 2}, {1, 2, 2, 3}, {1, 2, 3, 4}});
  CHECK(t.is_permutation());
  CHECK(t.mixed_difference() ==
        std::vector<std::vector<int>>{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(read_permutation(t, ReadOrder::RowToColumn) == SignedPerm::parse("2 1"));
  CHECK(read_permutation(t, ReadOrder::ColumnToRow) == SignedPerm::parse("2 1"));

  auto bad = table_from(1, {{1, 1}, {1, 1}});
  CHECK_FALSE(bad.is_permutation());
  CHECK_THROWS(read_permutation(bad));
}

TEST_CASE("the two readings are mutually inverse") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& w : enumerate_weyl(n)) {
      auto iw = embed_iota(w);
      std::vector<std::vector<int>> b(2 * n, std::vector<int>(2 * n, 0));
      for (int p = 1; p <= 2 * n; ++p) b[p - 1][iw[p - 1] - 1] = 1;
      IntersectionTable t;
      t.n = n;
      t.a.assign(2 * n + 1, std::vector<int>(2 * n + 1, 0));
      for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j)
          t.a[i][j] = t.a[i - 1][j] + t.a[i][j - 1] - t.a[i - 1][j - 1] + b[i - 1][j - 1];
      REQUIRE(t.mixed_difference() == b);
      CHECK(read_permutation(t, ReadOrder::RowToColumn) == w);
      CHECK(read_permutation(t, ReadOrder::ColumnToRow) == w.inverse());
    }
  }
}

TEST_CASE("relative positions of sampled flags") {
  Rng rng(31);
  for (int n = 1; n <= 3; ++n) {
    auto [f, g] = random_flag_pair(n, rng);
    CHECK(relative_position(f, f) == SignedPerm::identity(n));
    CHECK(relative_position(g, g) == SignedPerm::identity(n));
  }
  int pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    auto [f, g] = random_flag_pair(n, rng);
    CHECK(intersection_table(f, g).is_permutation());
    CHECK(relative_position(f, g) == relative_position(g, f).inverse());
    ++pairs;
  }
  CHECK(pairs == 200);

  auto [f1, g1] = random_flag_pair(1, rng);
  auto [f2, g2] = random_flag_pair(2, rng);
  CHECK_THROWS(relative_position(f1, f2));
}
