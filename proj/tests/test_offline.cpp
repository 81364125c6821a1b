#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ods/generate.hpp"
#include "ods/offline.hpp"

using namespace ods;

namespace {

OnlineTreeInput random_input(std::mt19937_64& rng, int n) {
  OnlineTreeInput in;
  in.parents.push_back(-1);
  for (int i = 1; i < n; ++i) in.parents.push_back(static_cast<int>(rng() % i));
  return in;
}

}  // namespace

TEST_CASE("tree optimum on the reference instances") {
  auto star = min_dominating_set_tree(make_input({-1, 0, 1, 1}));
  CHECK(star.size == 1);
  CHECK(star.witness == VertexSet{0, 1, 0, 0});

  CHECK(min_dominating_set_tree(make_input({-1, 0, 1})).size == 1);

  auto path6 = make_input({-1, 0, 1, 2, 3, 4});
  CHECK(min_dominating_set_tree(path6).size == brute_force_min(path6).size);
  CHECK(min_dominating_set_tree(path6).size == 2);
}

TEST_CASE("witness always dominates and matches the reported size") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto in = random_input(rng, 1 + static_cast<int>(rng() % 40));
    TreeView view(in);
    auto r = min_dominating_set_tree(view);
    CHECK(dominates(view, r.witness));
    CHECK(set_size(r.witness) == r.size);
  }
}

TEST_CASE("exhaustive search agrees on the smallest instances") {
  CHECK(brute_force_min(make_input({-1, 0})).size == 1);
  CHECK(brute_force_min(make_input({-1, 0, 1, 1})).size == 1);
  CHECK_THROWS_AS(brute_force_min(TreeView(make_input({-1, 0})), 1), std::invalid_argument);

  for (int n = 1; n <= 8; ++n) {
    for_each_parent_array(n, [&](const OnlineTreeInput& in) {
      REQUIRE(min_dominating_set_tree(in).size == brute_force_min(in).size);
    });
  }
}

TEST_CASE("dp matches exhaustive search on larger random instances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto in = random_input(rng, 11 + static_cast<int>(rng() % 8));
    CHECK(min_dominating_set_tree(in).size == brute_force_min(in).size);
  }
}

TEST_CASE("optimal set enumeration") {
  auto p2 = enumerate_optimal_sets(make_input({-1, 0}));
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == VertexSet{1, 0});
  CHECK(p2[1] == VertexSet{0, 1});

  auto star = enumerate_optimal_sets(make_input({-1, 0, 1, 1}));
  REQUIRE(star.size() == 1);
  CHECK(star[0] == VertexSet{0, 1, 0, 0});

  auto p3 = enumerate_optimal_sets(make_input({-1, 0, 1}));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0] == VertexSet{0, 1, 0});

  CHECK_THROWS_AS(enumerate_optimal_sets(make_input({-1, 0}), 1), std::invalid_argument);
}

TEST_CASE("every enumerated set dominates and the dp witness is among them") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto in = random_input(rng, 2 + static_cast<int>(rng() % 9));
    TreeView view(in);
    auto all = enumerate_optimal_sets(view);
    auto dp = min_dominating_set_tree(view);
    bool found = false;
    for (const auto& s : all) {
      CHECK(dominates(view, s));
      CHECK(set_size(s) == dp.size);
      found = found || s == dp.witness;
    }
    CHECK(found);
  }
}

TEST_CASE("leaf-free optimal witnesses exist beyond two vertices") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    auto in = random_input(rng, 3 + static_cast<int>(rng() % 30));
    TreeView view(in);
    auto r = min_dominating_set_tree(view);
    auto lf = leaf_free_optimal(view, r.witness);
    CHECK(set_size(lf) == r.size);
    CHECK(dominates(view, lf));
    for (int v = 0; v < view.n; ++v)
      if (lf[v]) CHECK(view.degree[v] >= 2);
  }
}
