#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ods/dominating.hpp"
#include "ods/tree.hpp"

namespace ods {

struct OptResult {
  int size = 0;
  VertexSet witness;
};

// Three-state dynamic program over the arrival forest (rooted at the first
// revealed vertex). States per vertex: selected / dominated by a child /
// still needing the parent. Witness reconstruction is deterministic: on cost
// ties a child is preferred selected, and the forced-selection child is the
// first one of minimal penalty.
inline OptResult min_dominating_set_tree(const TreeView& view) {
  const int n = view.n;
  constexpr int SEL = 0, DOM = 1, NEED = 2;
  const int INF = std::numeric_limits<int>::max() / 4;
  std::vector<std::array<int, 3>> dp(n);

  for (int v = n - 1; v >= 0; --v) {
    int sel = 1, need = 0;
    int best_penalty = INF;
    bool child_selected = false;
    for (int c : view.children[v]) {
      sel += std::min({dp[c][SEL], dp[c][DOM], dp[c][NEED]});
      int covered = std::min(dp[c][SEL], dp[c][DOM]);
      need += covered;
      if (dp[c][SEL] <= dp[c][DOM]) child_selected = true;
      best_penalty = std::min(best_penalty, dp[c][SEL] - covered);
    }
    dp[v][SEL] = sel;
    dp[v][NEED] = need;
    if (view.children[v].empty())
      dp[v][DOM] = INF;
    else
      dp[v][DOM] = child_selected ? need : (need >= INF ? INF : need + best_penalty);
  }

  OptResult out;
  out.size = std::min(dp[0][SEL], dp[0][DOM]);
  out.witness.assign(n, 0);

  std::vector<std::pair<int, int>> stack;
  stack.emplace_back(0, dp[0][SEL] <= dp[0][DOM] ? SEL : DOM);
  while (!stack.empty()) {
    auto [v, st] = stack.back();
    stack.pop_back();
    if (st == SEL) {
      out.witness[v] = 1;
      for (int c : view.children[v]) {
        int m = std::min({dp[c][SEL], dp[c][DOM], dp[c][NEED]});
        int cs = dp[c][SEL] == m ? SEL : (dp[c][DOM] == m ? DOM : NEED);
        stack.emplace_back(c, cs);
      }
    } else {
      // DOM or NEED: children end selected-or-dominated; DOM must select one
      int forced = -1;
      if (st == DOM) {
        bool any = false;
        for (int c : view.children[v])
          if (dp[c][SEL] <= dp[c][DOM]) any = true;
        if (!any) {
          int best = INF;
          for (int c : view.children[v]) {
            int pen = dp[c][SEL] - std::min(dp[c][SEL], dp[c][DOM]);
            if (pen < best) {
              best = pen;
              forced = c;
            }
          }
        }
      }
      for (int c : view.children[v]) {
        int cs = (c == forced || dp[c][SEL] <= dp[c][DOM]) ? SEL : DOM;
        stack.emplace_back(c, cs);
      }
    }
  }
  return out;
}

inline OptResult min_dominating_set_tree(const OnlineTreeInput& in) {
  return min_dominating_set_tree(TreeView(in));
}

namespace detail {
inline std::vector<std::uint32_t> closed_neighborhood_masks(const TreeView& view) {
  std::vector<std::uint32_t> nb(view.n);
  for (int v = 0; v < view.n; ++v) {
    std::uint32_t m = 1u << v;
    for (int u : view.adj[v]) m |= 1u << u;
    nb[v] = m;
  }
  return nb;
}
}  // namespace detail

// Exhaustive search in increasing subset size; the independent cross-check
// oracle for the DP.
inline OptResult brute_force_min(const TreeView& view, int cap = 20) {
  const int n = view.n;
  if (n > cap || n > 25) throw std::invalid_argument("brute_force_min: n exceeds cap");
  auto nb = detail::closed_neighborhood_masks(view);
  const std::uint32_t full = (1u << n) - 1;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack over k-subsets
    std::uint32_t s = (1u << k) - 1;
    while (s <= full) {
      std::uint32_t covered = 0, t = s;
      while (t) {
        int v = std::countr_zero(t);
        covered |= nb[v];
        t &= t - 1;
      }
      if (covered == full) {
        OptResult out;
        out.size = k;
        out.witness.assign(n, 0);
        for (int v = 0; v < n; ++v)
          if (s >> v & 1) out.witness[v] = 1;
        return out;
      }
      std::uint32_t c = s & -s, r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  throw std::logic_error("brute_force_min: unreachable");
}

inline OptResult brute_force_min(const OnlineTreeInput& in, int cap = 20) {
  return brute_force_min(TreeView(in), cap);
}

// All dominating sets of optimum size. Bounded: n <= cap and at most
// max_count sets, otherwise an error (this is a desk-check tool).
inline std::vector<VertexSet> enumerate_optimal_sets(const TreeView& view, int cap = 14,
                                                     std::size_t max_count = 100000) {
  const int n = view.n;
  if (n > cap) throw std::invalid_argument("enumerate_optimal_sets: n exceeds cap");
  const int opt = min_dominating_set_tree(view).size;
  auto nb = detail::closed_neighborhood_masks(view);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<VertexSet> out;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (std::popcount(s) != opt) continue;
    std::uint32_t covered = 0, t = s;
    while (t) {
      covered |= nb[std::countr_zero(t)];
      t &= t - 1;
    }
    if (covered != full) continue;
    VertexSet set(n, 0);
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) set[v] = 1;
    out.push_back(std::move(set));
    if (out.size() > max_count) throw std::runtime_error("enumerate_optimal_sets: too many sets");
  }
  return out;
}

inline std::vector<VertexSet> enumerate_optimal_sets(const OnlineTreeInput& in, int cap = 14,
                                                     std::size_t max_count = 100000) {
  return enumerate_optimal_sets(TreeView(in), cap, max_count);
}

// Swap selected leaves for their neighbors until no leaf is selected; keeps
// optimality and domination. On a 2-vertex tree no leaf-free set exists and
// the witness is returned unchanged.
inline VertexSet leaf_free_optimal(const TreeView& view, VertexSet witness) {
  if (view.n <= 2) return witness;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < view.n; ++v) {
      if (!witness[v] || view.degree[v] != 1) continue;
      int u = view.adj[v][0];
      if (witness[u]) continue;  // cannot happen for an optimal set
      witness[v] = 0;
      witness[u] = 1;
      changed = true;
    }
  }
  return witness;
}

}  // namespace ods
