#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ods/tree.hpp"

using namespace ods;

namespace {

OnlineTreeInput random_input(std::mt19937_64& rng, int n) {
  OnlineTreeInput in;
  in.parents.push_back(-1);
  for (int i = 1; i < n; ++i) in.parents.push_back(static_cast<int>(rng() % i));
  return in;
}

std::multiset<std::pair<int, int>> edge_set(const OnlineTreeInput& in) {
  std::multiset<std::pair<int, int>> out;
  for (int i = 1; i < in.n(); ++i)
    out.insert({std::min(i, in.parents[i]), std::max(i, in.parents[i])});
  return out;
}

}  // namespace

TEST_CASE("validate accepts a star reveal and flags forward references") {
  CHECK(validate(make_input({-1, 0, 1, 1})).ok);

  auto bad = validate(make_input({-1, 2, 0}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].index == 1);

  auto trivial = validate(make_input({-1}));
  CHECK(trivial.ok);
  CHECK(trivial.trivial_size);
}

TEST_CASE("depth follows the arrival path") {
  TreeView chain(make_input({-1, 0, 1, 2}));
  CHECK(chain.depth[0] == 0);
  CHECK(chain.depth[2] == 2);
  TreeView star(make_input({-1, 0, 1, 1}));
  CHECK(star.depth[3] == 2);
}

TEST_CASE("time-indexed degree counts edges as they appear") {
  TreeView star(make_input({-1, 0, 1, 1}));
  CHECK(star.degree_at(1, 2) == 2);
  CHECK(star.degree_at(1, 3) == 3);
  CHECK(star.degree_at(0, 1) == 1);
  CHECK_THROWS_AS(star.degree_at(3, 1), std::invalid_argument);
}

TEST_CASE("descendants are the arrival subtree") {
  TreeView star(make_input({-1, 0, 1, 1}));
  CHECK(star.descendants(1) == std::vector<int>{2, 3});
  CHECK(star.descendants(3).empty());
  CHECK(star.descendants(0) == std::vector<int>{1, 2, 3});
}

TEST_CASE("removing a subtree keeps the remainder in order") {
  auto star = make_input({-1, 0, 1, 1});
  CHECK(remove_subtree(star, 1).input.parents == std::vector<int>{-1});
  CHECK(remove_subtree(make_input({-1, 0, 1, 2}), 2).input.parents == std::vector<int>{-1, 0});
  CHECK(remove_subtree(star, 3).input.parents == std::vector<int>{-1, 0, 1});
  CHECK_THROWS_AS(remove_subtree(star, 0), std::invalid_argument);
}

TEST_CASE("extracting a subtree reroots it") {
  auto star = make_input({-1, 0, 1, 1});
  CHECK(extract_subtree(star, 1).input.parents == std::vector<int>{-1, 0, 0});
  CHECK(extract_subtree(star, 0).input.parents == star.parents);
  CHECK(extract_subtree(make_input({-1, 0, 1, 2}), 3).input.parents == std::vector<int>{-1});
}

TEST_CASE("attaching replays one input after another") {
  CHECK(attach_tree(make_input({-1}), 0, make_input({-1})).parents == std::vector<int>{-1, 0});
  CHECK(attach_tree(make_input({-1, 0}), 1, make_input({-1, 0})).parents ==
        std::vector<int>{-1, 0, 1, 2});
  CHECK_THROWS_AS(attach_tree(make_input({-1, 0}), 7, make_input({-1})), std::invalid_argument);
}

TEST_CASE("split then reattach reconstructs the same edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    auto in = random_input(rng, n);
    int u = 1 + static_cast<int>(rng() % (n - 1));
    int at = in.parents[u];
    auto r1 = remove_subtree(in, u);
    auto s2 = extract_subtree(in, u);
    auto back = attach_tree(r1.input, r1.new_of_old[at], s2.input);
    REQUIRE(validate(back).ok);
    REQUIRE(back.n() == in.n());

    // map the reassembled vertices to their original ids and compare edges
    std::vector<int> old_of(back.n());
    int base = r1.input.n();
    for (int i = 0; i < base; ++i) old_of[i] = r1.old_of_new[i];
    for (int k = 0; k < s2.input.n(); ++k) old_of[base + k] = s2.old_of_new[k];
    std::multiset<std::pair<int, int>> rebuilt;
    for (int i = 1; i < back.n(); ++i) {
      int a = old_of[i], b = old_of[back.parents[i]];
      rebuilt.insert({std::min(a, b), std::max(a, b)});
    }
    CHECK(rebuilt == edge_set(in));
  }
}

TEST_CASE("splits partition the vertex set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    auto in = random_input(rng, n);
    int u = 1 + static_cast<int>(rng() % (n - 1));
    auto r1 = remove_subtree(in, u);
    auto s2 = extract_subtree(in, u);
    REQUIRE(r1.input.n() + s2.input.n() == n);
    std::vector<char> seen(n, 0);
    for (int v : r1.old_of_new) seen[v] = 1;
    for (int v : s2.old_of_new) {
      REQUIRE_FALSE(seen[v]);
      seen[v] = 1;
    }
    for (char c : seen) CHECK(c);
    CHECK(validate(r1.input).ok);
    CHECK(validate(s2.input).ok);
  }
}

TEST_CASE("depth and degree invariants on random instances") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 20);
    auto in = random_input(rng, n);
    TreeView view(in);
    long long degsum = 0;
    for (int v = 0; v < n; ++v) degsum += view.degree[v];
    CHECK(degsum == 2 * (n - 1));
    for (int v = 1; v < n; ++v) CHECK(view.depth[v] == view.depth[view.parent[v]] + 1);
    for (int v = 0; v < n; ++v) {
      int prev = 0;
      for (int t = v; t < n; ++t) {
        int d = view.degree_at(v, t);
        CHECK(d >= prev);
        prev = d;
      }
      CHECK(prev == view.degree[v]);
    }
  }
}
