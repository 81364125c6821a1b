#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ods/dominating.hpp"
#include "ods/offline.hpp"
#include "ods/online.hpp"
#include "ods/rational.hpp"
#include "ods/tree.hpp"

namespace ods {

// Exact E[C_RA] / C_OPT. Refuses trivial instances (n == 1), where every
// ratio is one by definition and the structural analysis does not apply.
inline Rational exact_ratio(const OnlineTreeInput& in) {
  if (in.n() < 2) throw std::invalid_argument("exact_ratio: needs n >= 2");
  Rational e = ra_expected_cost(in);
  int opt = min_dominating_set_tree(in).size;
  return e / Rational(opt);
}

// ---------------------------------------------------------------------------
// Free / fixed arrival edges relative to a concrete optimal set. A selected
// vertex dominates itself and its neighbors.
// ---------------------------------------------------------------------------

struct EdgeStatus {
  int v = -1;  // the earlier endpoint (u arrives at v)
  int u = -1;
  bool free_edge = false;
  bool fixed_edge = false;
};

inline EdgeStatus edge_status(const TreeView& view, const VertexSet& optset, int v, int u) {
  if (u <= 0 || u >= view.n || view.parent[u] != v)
    throw std::invalid_argument("edge_status: not an arrival edge");
  EdgeStatus st;
  st.v = v;
  st.u = u;
  auto inside = view.subtree_mask(u);

  auto dominated_by_inside = [&](int x) {
    if (optset[x] && inside[x]) return true;
    for (int y : view.adj[x])
      if (optset[y] && inside[y]) return true;
    return false;
  };
  auto dominated_by_outside = [&](int x) {
    if (optset[x] && !inside[x]) return true;
    for (int y : view.adj[x])
      if (optset[y] && !inside[y]) return true;
    return false;
  };

  st.free_edge = dominated_by_inside(u) && dominated_by_outside(v);
  if (!st.free_edge) return st;

  if (v == 0 || view.degree[u] < 3) return st;
  if (view.degree[v] == 3) {
    st.fixed_edge = true;
  } else if (view.degree[v] == 2) {
    int vp = view.parent[v];
    st.fixed_edge = view.degree[vp] >= 3 && view.degree_at(vp, v) >= 3;
  }
  return st;
}

inline std::vector<EdgeStatus> all_edge_statuses(const TreeView& view, const VertexSet& optset) {
  std::vector<EdgeStatus> out;
  out.reserve(view.n > 0 ? view.n - 1 : 0);
  for (int u = 1; u < view.n; ++u) out.push_back(edge_status(view, optset, view.parent[u], u));
  return out;
}

// Path u1 - u2 - u3, all of degree three, with u1 and u3 selected.
struct Triplet {
  int u1, u2, u3;
};

inline std::vector<Triplet> good_triplets(const TreeView& view, const VertexSet& optset) {
  std::vector<Triplet> out;
  for (int mid = 0; mid < view.n; ++mid) {
    if (view.degree[mid] != 3) continue;
    const auto& nb = view.adj[mid];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i], b = nb[j];
        if (view.degree[a] != 3 || view.degree[b] != 3) continue;
        if (!optset[a] || !optset[b]) continue;
        out.push_back({std::min(a, b), mid, std::max(a, b)});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Worst-case structural properties of an extremal instance.
// ---------------------------------------------------------------------------

constexpr int kNumProperties = 7;

struct PropertyWitness {
  int property = 0;  // 1..7
  std::string what;
};

struct PropertySet {
  bool p[kNumProperties + 1] = {};  // 1-based
  std::vector<PropertyWitness> violations;
  bool all_of(std::initializer_list<int> which) const {
    for (int i : which)
      if (!p[i]) return false;
    return true;
  }
};

inline PropertySet check_properties_one(const TreeView& view, const VertexSet& optset) {
  PropertySet r;
  for (int i = 1; i <= kNumProperties; ++i) r.p[i] = true;

  auto note = [&](int prop, std::string what) {
    r.p[prop] = false;
    r.violations.push_back({prop, std::move(what)});
  };

  for (int v = 0; v < view.n; ++v) {
    if (view.degree[v] > 3) note(2, "degree(" + std::to_string(v) + ") > 3");
    if (view.degree[v] == 2) note(7, "degree(" + std::to_string(v) + ") == 2");
    if (optset[v] && view.degree[v] != 3)
      note(3, "selected vertex " + std::to_string(v) + " has degree != 3");
  }
  for (int u = 1; u < view.n; ++u) {
    auto st = edge_status(view, optset, view.parent[u], u);
    if (!st.free_edge) continue;
    std::string e = "(" + std::to_string(st.v) + "," + std::to_string(u) + ")";
    if (!st.fixed_edge) note(1, "free edge " + e + " is not fixed");
    if (optset[st.v]) note(4, "free edge " + e + " with selected earlier endpoint");
    if (view.degree[st.v] == 2) note(6, "free edge " + e + " with degree-2 earlier endpoint");
  }
  if (!good_triplets(view, optset).empty()) note(5, "good triplet present");
  return r;
}

struct PropertyReport {
  std::vector<PropertySet> per_set;
  bool exists[kNumProperties + 1] = {};  // some optimal set satisfies P_i
  bool forall[kNumProperties + 1] = {};  // every optimal set satisfies P_i
};

inline PropertyReport check_properties(const OnlineTreeInput& in,
                                       const std::vector<VertexSet>& optsets) {
  if (optsets.empty()) throw std::invalid_argument("check_properties: no optimal sets");
  TreeView view(in);
  PropertyReport rep;
  for (int i = 1; i <= kNumProperties; ++i) rep.forall[i] = true;
  for (const auto& s : optsets) {
    rep.per_set.push_back(check_properties_one(view, s));
    for (int i = 1; i <= kNumProperties; ++i) {
      rep.exists[i] = rep.exists[i] || rep.per_set.back().p[i];
      rep.forall[i] = rep.forall[i] && rep.per_set.back().p[i];
    }
  }
  return rep;
}

}  // namespace ods
