#include "doctest.h"
#include "esf/exotic.hpp"
#include "esf/rng.hpp"

using namespace esf;

namespace {

RatVector basis_vector(const Bipartition& bp, int i, int j, bool starred) {
  return unit_vector(2 * bp.size(), normal_index(bp, i, j, starred));
}

RatVector combo(const std::vector<std::pair<long, RatVector>>& terms) {
  RatVector out(terms.front().second.size());
  for (const auto& [c, v] : terms)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += Rational(c) * v[i];
  return out;
}

// y -> y + c <u, y> u
RatMatrix transvection(const BilinearForm& form, const RatVector& u, const Rational& c) {
  const int d = form.dim();
  RatMatrix t = RatMatrix::identity(d);
  for (int col = 0; col < d; ++col) {
    Rational pairing = form(u, unit_vector(d, col));
    for (int row = 0; row < d; ++row) t(row, col) += c * pairing * u[row];
  }
  return t;
}

}  // namespace

TEST_CASE("build_normal_form") {
  auto empty = build_normal_form({});
  CHECK(empty.space.dim() == 0);
  CHECK(etype(empty) == Bipartition{});

  const Bipartition bp{{3, 1}, {2, 2, 1}};
  auto p = build_normal_form(bp);
  CHECK(p.v == combo({{1, basis_vector(bp, 1, 3, false)}, {1, basis_vector(bp, 2, 1, false)}}));
  CHECK(p.space.labels[normal_index(bp, 2, 3, true)].to_string() == "v*_2,3");

  auto one = build_normal_form({{1}, {}});
  CHECK(one.x.is_zero());
  CHECK(one.x.rows() == 2);
  CHECK_FALSE(is_zero(one.v));
}

TEST_CASE("normal form invariants and eType round trip") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& bp : enumerate_bipartitions(n)) {
      auto p = build_normal_form(bp);
      CHECK_NOTHROW(p.validate());
      const auto& g = p.space.form.gram();
      for (const auto& a : p.space.labels)
        for (const auto& b : p.space.labels) {
          const int ia = normal_index(bp, a.row, a.col, a.starred);
          const int ib = normal_index(bp, b.row, b.col, b.starred);
          int expected = 0;
          if (!a.starred && b.starred && a.row == b.row && a.col == b.col) expected = 1;
          if (a.starred && !b.starred && a.row == b.row && a.col == b.col) expected = -1;
          CHECK(g(ia, ib) == expected);
        }
      auto xv = p.v;
      std::vector<RatVector> powers;
      for (int k = 0; k <= 2 * n; ++k) {
        powers.push_back(xv);
        xv = p.x * xv;
      }
      for (const auto& a : powers)
        for (const auto& b : powers) CHECK(p.space.form(a, b) == 0);
      CHECK(etype(p) == bp);
    }
  }
}

TEST_CASE("eType of the zero point") {
  for (int n = 1; n <= 4; ++n) {
    ExoticPoint p;
    p.space.n = n;
    p.space.form = standard_form(n);
    p.v.assign(2 * n, Rational(0));
    p.x = RatMatrix(2 * n, 2 * n);
    CHECK(etype(p) == Bipartition{{}, Partition(std::vector<int>(n, 1))});
  }
}

TEST_CASE("rho of the ((3,1),(2,2,1)) model") {
  auto p = build_normal_form({{3, 1}, {2, 2, 1}});
  auto q = quotient(Subspace::whole(p.space.dim()), cyclic_span(p.x, p.v), p.x, std::nullopt);
  CHECK(jordan_type(q.x) == Partition{5, 3, 3, 2, 1, 1});
  CHECK(bipartition_from_types({5, 3, 1}, {5, 3, 3, 2, 1, 1}) == Bipartition{{3, 1}, {2, 2, 1}});
  CHECK_THROWS(bipartition_from_types({1}, {3}));
  CHECK(halve_duplicated({3, 3, 1, 1}) == Partition{3, 1});
  CHECK_FALSE(halve_duplicated({3, 1}).has_value());
}

TEST_CASE("eType is invariant under symplectic transvections") {
  Rng rng(99);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& bp : enumerate_bipartitions(n)) {
      auto p = build_normal_form(bp);
      const int d = p.space.dim();
      RatVector u(d);
      for (auto& e : u) e = Rational(static_cast<long>(rng.uniform(-3, 3)));
      Rational c(static_cast<long>(rng.uniform(1, 5)));
      auto t = transvection(p.space.form, u, c);
      auto tinv = transvection(p.space.form, u, -c);
      REQUIRE(t * tinv == RatMatrix::identity(d));
      REQUIRE(t.transpose() * p.space.form.gram() * t == p.space.form.gram());
      ExoticPoint q = p;
      q.space.shape.reset();
      q.space.labels.clear();
      q.v = t * p.v;
      q.x = t * p.x * tinv;
      CHECK_NOTHROW(q.validate());
      CHECK(etype(q) == bp);
    }
  }
}

TEST_CASE("reducing by the line of v") {
  const Bipartition bp{{1, 1}, {}};
  auto p = build_normal_form(bp);
  auto f1 = Subspace::span({p.v}, 4);
  auto red = reduce_by_line(p, f1);
  CHECK_NOTHROW(red.point.validate());
  CHECK(etype(red.point) == Bipartition{{}, {1}});

  auto f2 = Subspace::span({basis_vector(bp, 1, 1, false), basis_vector(bp, 2, 1, false)}, 4);
  Flag flag({f1, f2}, p.space.form);
  CHECK(is_in_fibre(p, flag));
  auto r = phi(p, flag);
  REQUIRE(r.by_size.size() == 3);
  CHECK(r.by_size[0] == Bipartition{});
  CHECK(r.by_size[1] == Bipartition{{}, {1}});
  CHECK(r.by_size[2] == bp);
  CHECK_FALSE(r.nested);
  CHECK_FALSE(r.tableau.has_value());
}

TEST_CASE("the beta-sum branch of ((2,2,1),(2,2))") {
  const Bipartition bp{{2, 2, 1}, {2, 2}};
  auto p = build_normal_form(bp);
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    long a1 = rng.uniform(1, 20), a2 = rng.uniform(1, 20), b1 = rng.uniform(1, 20), b2 = rng.uniform(1, 20);
    auto make = [&](long beta2) {
      return combo({{a1, basis_vector(bp, 1, 1, false)},
                    {a2, basis_vector(bp, 2, 1, false)},
                    {beta2, basis_vector(bp, 2, 4, true)},
                    {b1, basis_vector(bp, 1, 4, true)}});
    };
    auto cancel = reduce_by_line(p, Subspace::span({make(-b1)}, p.space.dim()));
    CHECK(etype(cancel.point) == Bipartition{{2, 1, 1}, {2, 2}});
    long nonzero = (b2 == -b1) ? b2 + 1 : b2;
    auto generic = reduce_by_line(p, Subspace::span({make(nonzero)}, p.space.dim()));
    CHECK(etype(generic.point) == Bipartition{{2, 2, 1}, {2, 1}});
  }
}

TEST_CASE("((2,2,2,1),(2,2,1)) reduces the same way for any admissible line") {
  const Bipartition bp{{2, 2, 2, 1}, {2, 2, 1}};
  auto p = build_normal_form(bp);
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto v1 = combo({{rng.uniform(1, 20), basis_vector(bp, 1, 1, false)},
                     {rng.uniform(-20, 20), basis_vector(bp, 2, 1, false)},
                     {rng.uniform(-20, 20), basis_vector(bp, 2, 4, true)},
                     {rng.uniform(-20, 20), basis_vector(bp, 1, 4, true)}});
    auto red = reduce_by_line(p, Subspace::span({v1}, p.space.dim()));
    CHECK(etype(red.point) == Bipartition{{2, 2, 2, 1}, {2, 1, 1}});
  }
}

TEST_CASE("reduce preconditions") {
  const Bipartition bp{{1}, {1}};
  auto p = build_normal_form(bp);
  auto not_kernel = Subspace::span({basis_vector(bp, 1, 2, false)}, 4);
  CHECK_THROWS(reduce_by_line(p, not_kernel));
  auto not_perp = Subspace::span({basis_vector(bp, 1, 1, true)}, 4);
  CHECK_THROWS(reduce(p, not_perp));
}

TEST_CASE("the generic flag for ((1);(2))") {
  const Bipartition bp{{1}, {1}};
  auto p = build_normal_form(bp);
  for (long alpha : {0L, 1L, -3L, 7L}) {
    for (long beta : {1L, 2L, -5L}) {
      auto f1 = Subspace::span(
          {combo({{alpha, basis_vector(bp, 1, 1, false)}, {beta, basis_vector(bp, 1, 2, true)}})}, 4);
      auto f2 = Subspace::span({basis_vector(bp, 1, 1, false), basis_vector(bp, 1, 2, true)}, 4);
      Flag flag({f1, f2}, p.space.form);
      CHECK(is_in_fibre(p, flag));
      auto r = phi(p, flag);
      CHECK(r.nested);
      REQUIRE(r.tableau.has_value());
      CHECK(*r.tableau == StandardBitableau{{{1}}, {{2}}});
      for (int k = 0; k <= 2; ++k) CHECK(r.by_size[k].size() == k);
    }
  }
}

TEST_CASE("is_in_fibre") {
  ExoticPoint zero;
  zero.space.n = 2;
  zero.space.form = standard_form(2);
  zero.v.assign(4, Rational(0));
  zero.x = RatMatrix(4, 4);
  Flag lag({Subspace::span({unit_vector(4, 0)}, 4), Subspace::span({unit_vector(4, 0), unit_vector(4, 1)}, 4)},
           zero.space.form);
  CHECK(is_in_fibre(zero, lag));

  CHECK_THROWS(Flag({Subspace::span({unit_vector(4, 0)}, 4), Subspace::span({unit_vector(4, 0), unit_vector(4, 2)}, 4)},
                    zero.space.form));

  const Bipartition bp{{1}, {1}};
  auto p = build_normal_form(bp);
  Flag missing({Subspace::span({basis_vector(bp, 1, 2, true)}, 4),
                Subspace::span({basis_vector(bp, 1, 2, true), basis_vector(bp, 1, 1, true)}, 4)},
               p.space.form);
  CHECK_FALSE(is_in_fibre(p, missing));
  CHECK_THROWS(phi(p, missing));
}
