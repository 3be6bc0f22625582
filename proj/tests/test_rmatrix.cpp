#include "doctest.h"
#include "qfodc/error.hpp"
#include "qfodc/rmatrix.hpp"

using namespace qfodc;

namespace {
Scalar q(long long k = 1) { return Scalar::q_power(k); }
}

TEST_CASE("glq(2) braid matrix entries") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  RMatrix r = build_rhat(g);
  CHECK(r.entry(1, 1, 1, 1) == q(1));
  CHECK(r.entry(1, 2, 2, 1) == Scalar(1));
  CHECK(r.entry(1, 2, 1, 2) == q(1) - q(-1));
  CHECK(r.entry(2, 1, 1, 2) == Scalar(1));
  CHECK(r.entry(2, 2, 2, 2) == q(1));
  CHECK(r.entries().size() == 5);  // all others vanish
}

TEST_CASE("glq braid matrix specializes to the flip at q = 1") {
  for (int n : {2, 3}) {
    auto g = GroupSpec::make(GroupFamily::GLq, n);
    RMatrix r = build_rhat(g);
    for (const auto& [idx, v] : r.entries()) {
      Rational v1 = v.specialize(1);
      bool is_swap = (idx[2] == idx[1] && idx[3] == idx[0]);
      CHECK(v1 == (is_swap ? 1 : 0));
    }
  }
}

TEST_CASE("braid relation holds exactly") {
  for (auto [fam, n] : std::vector<std::pair<GroupFamily, int>>{
           {GroupFamily::GLq, 2},
           {GroupFamily::GLq, 3},
           {GroupFamily::GLq, 4},
           {GroupFamily::Oq, 2},
           {GroupFamily::Oq, 3},
           {GroupFamily::Oq, 4},
           {GroupFamily::Spq, 2},
           {GroupFamily::Spq, 4}}) {
    auto g = GroupSpec::make(fam, n);
    RMatrix r = build_rhat(g);
    CHECK_MESSAGE(r.braid_relation_holds(), g.name());
  }
}

TEST_CASE("glq(2) inverse entries") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  RMatrix ri = build_rhat(g).inverse();
  CHECK(ri.entry(1, 1, 1, 1) == q(-1));
  CHECK(ri.entry(1, 2, 1, 2) == Scalar::zero());
  CHECK(ri.entry(1, 2, 2, 1) == Scalar(1));
  CHECK(ri.entry(2, 1, 2, 1) == -(q(1) - q(-1)));
  // q = 1: the flip again
  for (const auto& [idx, v] : ri.entries()) {
    bool is_swap = (idx[2] == idx[1] && idx[3] == idx[0]);
    CHECK(v.specialize(1) == (is_swap ? 1 : 0));
  }
}

TEST_CASE("hecke identity for the A series") {
  for (int n : {2, 3, 4}) {
    auto g = GroupSpec::make(GroupFamily::GLq, n);
    RMatrix r = build_rhat(g);
    RMatrix ri = r.inverse();
    Scalar qdiff = q(1) - q(-1);
    RMatrix shift(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) shift.set_entry(i, j, i, j, qdiff);
    CHECK(r - shift == ri);
  }
}

TEST_CASE("inverse composes to identity for the metric families") {
  for (auto [fam, n] : std::vector<std::pair<GroupFamily, int>>{{GroupFamily::Oq, 3},
                                                                {GroupFamily::Spq, 4}}) {
    auto g = GroupSpec::make(fam, n);
    RMatrix r = build_rhat(g);
    RMatrix ri = r.inverse();
    CHECK(r.compose(ri).is_identity());
    CHECK(ri.compose(r).is_identity());
  }
}
