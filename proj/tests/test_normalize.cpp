#include <catch2/catch_amalgamated.hpp>

#include "crafted_instances.hpp"
#include "ods/normalize.hpp"

using namespace ods;

namespace {

Rational best_derived_ratio(const NormalizeResult& res) {
  bool any = false;
  Rational best(0);
  for (const auto& d : res.derived) {
    if (d.n() < 2) continue;
    Rational r = exact_ratio(d);
    if (!any || best < r) {
      best = r;
      any = true;
    }
  }
  REQUIRE(any);
  return best;
}

}  // namespace

TEST_CASE("pendant attachment fixes a low-degree selected vertex") {
  auto p2 = make_input({-1, 0});
  auto res = normalize_step(p2, NormTarget::P3);
  REQUIRE(res.derived.size() == 1);
  const auto& out = res.derived[0];
  CHECK(out.n() == 4);
  // the optimum is unchanged by the pendants
  CHECK(min_dominating_set_tree(out).size == min_dominating_set_tree(p2).size);
  CHECK(best_derived_ratio(res) >= exact_ratio(p2));
}

TEST_CASE("free-edge split: part optima add up to the whole") {
  // degree-2 vertex above a self-dominated pair of leaves; its free edge is
  // not fixed because the grandparent is a leaf
  auto in = make_input({-1, 0, 1, 2, 2});
  auto res = normalize_step(in, NormTarget::P1);
  REQUIRE(res.derived.size() == 2);
  int total = 0;
  for (const auto& d : res.derived) total += min_dominating_set_tree(d).size;
  CHECK(total == min_dominating_set_tree(in).size);
  CHECK(best_derived_ratio(res) >= exact_ratio(in));
}

TEST_CASE("already satisfied targets are reported as such") {
  auto star = make_input({-1, 0, 1, 1});
  CHECK_THROWS_AS(normalize_step(star, NormTarget::P1), NormalizeError);
  try {
    normalize_step(star, NormTarget::P1);
  } catch (const NormalizeError& e) {
    CHECK(e.kind == NormalizeError::Kind::AlreadySatisfied);
  }
}

TEST_CASE("crafted degree-reduction instances transform monotonically") {
  int applied = 0;
  for (int k = 0; k < 40 && applied < 12; ++k) {
    auto in = crafted::p2_candidate(k);
    REQUIRE(validate(in).ok);
    try {
      auto res = normalize_step(in, NormTarget::P2, 16);
      CHECK(best_derived_ratio(res) >= exact_ratio(in));
      // the transformed input has one fewer high-degree slot
      int high_before = 0, high_after = 0;
      for (int v : TreeView(in).degree)
        if (v >= 4) ++high_before;
      for (int v : TreeView(res.derived[0]).degree)
        if (v >= 4) ++high_after;
      CHECK(high_after < high_before);
      ++applied;
    } catch (const NormalizeError&) {
    }
  }
  CHECK(applied >= 12);
}

TEST_CASE("crafted selected-free-edge instances transform monotonically") {
  int applied = 0;
  for (int k = 0; k < 40 && applied < 12; ++k) {
    auto in = crafted::p4_candidate(k);
    try {
      auto res = normalize_step(in, NormTarget::P4, 16);
      CHECK(best_derived_ratio(res) >= exact_ratio(in));
      ++applied;
    } catch (const NormalizeError&) {
    }
  }
  CHECK(applied >= 12);
}

TEST_CASE("crafted triplet instances split three ways, monotonically") {
  int applied = 0;
  for (int k = 0; k < 40 && applied < 12; ++k) {
    auto in = crafted::p5_candidate(k);
    try {
      auto res = normalize_step(in, NormTarget::P5, 16);
      REQUIRE(res.derived.size() == 3);
      CHECK(best_derived_ratio(res) >= exact_ratio(in));
      ++applied;
    } catch (const NormalizeError&) {
    }
  }
  CHECK(applied >= 12);
}

TEST_CASE("crafted degree-2 free-edge instances transform monotonically") {
  int applied = 0;
  for (int k = 0; k < 40 && applied < 12; ++k) {
    auto in = crafted::p6_candidate(k);
    try {
      auto res = normalize_step(in, NormTarget::P6, 16);
      CHECK(best_derived_ratio(res) >= exact_ratio(in));
      ++applied;
    } catch (const NormalizeError&) {
    }
  }
  CHECK(applied >= 12);
}

TEST_CASE("normalize driver reaches the structural properties") {
  auto run = normalize(make_input({-1, 0, 1, 2}));  // chain of four
  CHECK(run.result.n() >= 2);
  for (NormTarget t : {NormTarget::P1, NormTarget::P2, NormTarget::P3, NormTarget::P4,
                       NormTarget::P5, NormTarget::P6})
    CHECK(target_satisfied(run.result, t));
  if (!run.log.empty()) CHECK(run.log.front().ratio_before <= run.log.back().ratio_after);
}
