#include "doctest.h"

#include "supersite/finitetop.hpp"

using namespace supersite;

namespace {

SpaceBasePtr sierpinski() {
  // points a=0, b=1; opens {}, {a}, {a,b}
  return FiniteSpace::make({"a", "b"}, {0, 0b01, 0b11});
}

SpaceBasePtr p1_model() {
  // points 0, inf, eta; opens {}, {eta}, {0,eta}, {inf,eta}, all
  return FiniteSpace::make({"0", "inf", "eta"}, {0, 0b100, 0b101, 0b110, 0b111});
}

SpaceBasePtr two_point_discrete() {
  return FiniteSpace::make({"a", "b"}, {0, 0b01, 0b10, 0b11});
}

}  // namespace

TEST_CASE("check_space") {
  CHECK(check_space(*sierpinski()).ok);
  CHECK(check_space(*p1_model()).ok);

  FiniteSpace bad({"a", "b"}, {0, 0b01, 0b10});  // no full set, also union escapes
  auto rep = check_space(bad);
  CHECK_FALSE(rep.ok);
  bool has_missing = false;
  for (const auto& v : rep.violations)
    if (v.find("MissingEmptyOrFull") == 0) has_missing = true;
  CHECK(has_missing);
}

TEST_CASE("minimal opens") {
  auto s = sierpinski();
  CHECK(minimal_open(*s, 0) == 0b01);
  CHECK(minimal_open(*s, 1) == 0b11);
  auto p1 = p1_model();
  CHECK(minimal_open(*p1, *p1->point_index("eta")) == 0b100);
  CHECK_THROWS_AS(minimal_open(*s, 7), TopologyError);
}

TEST_CASE("minimal_open is the least open containing p") {
  for (const auto& sp : {sierpinski(), p1_model(), two_point_discrete()}) {
    for (int p = 0; p < sp->num_points(); ++p) {
      PointSet m = minimal_open(*sp, p);
      CHECK(sp->is_open(m));
      CHECK((m >> p & 1) == 1);
      for (PointSet u : sp->opens())
        if (u >> p & 1) CHECK(subset_of(m, u));
    }
  }
}

TEST_CASE("check_continuous") {
  auto s = sierpinski();
  CHECK(check_continuous(ContinuousMap::identity(s)).ok);

  // swap map on Sierpinski is not continuous
  ContinuousMap swap(s, s, {1, 0});
  auto rep = check_continuous(swap);
  CHECK_FALSE(rep.ok);
  CHECK(rep.error.find("PreimageNotOpen") == 0);

  // inclusion {eta} -> P1 model
  auto p1 = p1_model();
  auto sub = subspace(p1, 0b100);
  ContinuousMap incl(sub.space, p1, {2});
  CHECK(check_continuous(incl).ok);
}

TEST_CASE("is_open_embedding_top") {
  auto s = sierpinski();
  auto pt = subspace(s, 0b01);
  ContinuousMap incl(pt.space, s, {0});
  auto r = is_open_embedding_top(incl);
  CHECK(r.yes);
  CHECK(r.image == 0b01);

  auto disc = two_point_discrete();
  ContinuousMap collapse(disc, s, {0, 0});
  auto r2 = is_open_embedding_top(collapse);
  CHECK_FALSE(r2.yes);
  CHECK(r2.reason == "not injective");

  auto p1 = p1_model();
  auto chart = subspace(p1, 0b101);  // {0, eta}
  ContinuousMap chart_incl(chart.space, p1, chart.embed);
  auto r3 = is_open_embedding_top(chart_incl);
  CHECK(r3.yes);
  CHECK(r3.image == 0b101);
}

TEST_CASE("open embedding composition and preimage laws") {
  auto p1 = p1_model();
  auto u = subspace(p1, 0b101);        // {0, eta}
  auto v = subspace(u.space, 0b10);    // {eta} inside the chart
  ContinuousMap j1(u.space, p1, {u.embed[0], u.embed[1]});
  ContinuousMap j2(v.space, u.space, {v.embed[0]});
  CHECK(is_open_embedding_top(j1).yes);
  CHECK(is_open_embedding_top(j2).yes);
  auto comp = ContinuousMap::compose(j1, j2);
  CHECK(is_open_embedding_top(comp).yes);

  // preimage commutes with union and intersection
  for (PointSet a : p1->opens())
    for (PointSet b : p1->opens()) {
      CHECK(j1.preimage(a | b) == (j1.preimage(a) | j1.preimage(b)));
      CHECK(j1.preimage(a & b) == (j1.preimage(a) & j1.preimage(b)));
    }
}
