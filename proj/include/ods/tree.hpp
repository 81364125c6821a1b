#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace ods {

// An online tree instance: vertex i (0-based, reveal order) arrives at
// parents[i] < i; parents[0] == -1. The reveal order is the identity, so the
// instance is fully determined by the parent array. External JSON uses
// 1-based indices with 0 as the root marker; see json_io.hpp.
struct OnlineTreeInput {
  std::vector<int> parents;

  OnlineTreeInput() = default;
  explicit OnlineTreeInput(std::vector<int> p) : parents(std::move(p)) {}

  int n() const { return static_cast<int>(parents.size()); }
};

struct Violation {
  int index;
  std::string what;
};

struct ValidationResult {
  bool ok = true;
  bool trivial_size = false;  // n <= 1; representable but ratio ops refuse it
  std::vector<Violation> violations;
};

inline ValidationResult validate(const OnlineTreeInput& in) {
  ValidationResult r;
  const int n = in.n();
  if (n == 0) {
    r.ok = false;
    r.violations.push_back({0, "empty input"});
    return r;
  }
  if (in.parents[0] != -1) {
    r.ok = false;
    r.violations.push_back({0, "first vertex must have no parent"});
  }
  for (int i = 1; i < n; ++i) {
    int p = in.parents[i];
    if (p < 0 || p >= i) {
      r.ok = false;
      r.violations.push_back({i, "parent not yet revealed"});
    }
  }
  if (n == 1) r.trivial_size = true;
  return r;
}

inline OnlineTreeInput make_input(std::initializer_list<int> parents) {
  return OnlineTreeInput(std::vector<int>(parents));
}

// Immutable per-instance view: adjacency, depths, final degrees, and the
// time-indexed degree query deg_t(v).
struct TreeView {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> degree;                 // final degree
  std::vector<std::vector<int>> children;  // ascending reveal order
  std::vector<std::vector<int>> adj;
  int n = 0;

  TreeView() = default;

  explicit TreeView(const OnlineTreeInput& in) {
    auto v = validate(in);
    if (!v.ok) throw std::invalid_argument("TreeView: invalid input");
    n = in.n();
    parent = in.parents;
    depth.assign(n, 0);
    degree.assign(n, 0);
    children.assign(n, {});
    adj.assign(n, {});
    for (int i = 1; i < n; ++i) {
      int p = parent[i];
      depth[i] = depth[p] + 1;
      children[p].push_back(i);
      ++degree[p];
      ++degree[i];
      adj[p].push_back(i);
      adj[i].push_back(p);
    }
  }

  // degree of v immediately after t is revealed; requires v revealed by t
  int degree_at(int v, int t) const {
    if (v > t) throw std::invalid_argument("degree_at: v revealed after t");
    const auto& ch = children[v];
    auto it = std::upper_bound(ch.begin(), ch.end(), t);
    int d = static_cast<int>(it - ch.begin());
    if (v != 0) ++d;  // edge to its own parent
    return d;
  }

  // all u "below" v in the arrival forest (= subtree of v when rooted at v0)
  std::vector<int> descendants(int v) const {
    std::vector<int> out;
    std::vector<int> stack(children[v].rbegin(), children[v].rend());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (auto it = children[x].rbegin(); it != children[x].rend(); ++it) stack.push_back(*it);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<char> subtree_mask(int v) const {
    std::vector<char> m(n, 0);
    m[v] = 1;
    for (int i = v + 1; i < n; ++i)
      if (m[parent[i]]) m[i] = 1;
    return m;
  }
};

// Result of a split: the new input plus the index maps in both directions.
struct RelabeledInput {
  OnlineTreeInput input;
  std::vector<int> old_of_new;  // new index -> old index
  std::vector<int> new_of_old;  // old index -> new index, -1 if dropped
};

namespace detail {
inline RelabeledInput keep_vertices(const OnlineTreeInput& in, const std::vector<char>& keep,
                                    int new_root_old_index) {
  const int n = in.n();
  RelabeledInput out;
  out.new_of_old.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    out.new_of_old[i] = static_cast<int>(out.old_of_new.size());
    out.old_of_new.push_back(i);
  }
  out.input.parents.reserve(out.old_of_new.size());
  for (int old : out.old_of_new) {
    if (old == new_root_old_index) {
      out.input.parents.push_back(-1);
    } else {
      int p = in.parents[old];
      assert(p >= 0 && out.new_of_old[p] >= 0);
      out.input.parents.push_back(out.new_of_old[p]);
    }
  }
  return out;
}
}  // namespace detail

// Drop u and its whole arrival subtree; the rest keeps its relative order.
// u must not be the first vertex (the result would be empty).
inline RelabeledInput remove_subtree(const OnlineTreeInput& in, int u) {
  if (u == 0) throw std::invalid_argument("remove_subtree: cannot remove the root");
  TreeView view(in);
  auto sub = view.subtree_mask(u);
  std::vector<char> keep(in.n());
  for (int i = 0; i < in.n(); ++i) keep[i] = !sub[i];
  return detail::keep_vertices(in, keep, 0);
}

// Keep only u and its arrival subtree; u becomes the first revealed vertex.
inline RelabeledInput extract_subtree(const OnlineTreeInput& in, int u) {
  TreeView view(in);
  auto keep = view.subtree_mask(u);
  return detail::keep_vertices(in, keep, u);
}

// Reveal all of `base`, then all of `attach`; attach's first vertex arrives
// at `at` (a vertex of base). attach's indices are shifted by |base|.
inline OnlineTreeInput attach_tree(const OnlineTreeInput& base, int at,
                                   const OnlineTreeInput& attach) {
  if (at < 0 || at >= base.n()) throw std::invalid_argument("attach_tree: vertex not in base");
  OnlineTreeInput out = base;
  const int shift = base.n();
  out.parents.reserve(shift + attach.n());
  for (int i = 0; i < attach.n(); ++i) {
    if (i == 0)
      out.parents.push_back(at);
    else
      out.parents.push_back(attach.parents[i] + shift);
  }
  return out;
}

inline OnlineTreeInput attach_pendant(const OnlineTreeInput& base, int at) {
  return attach_tree(base, at, OnlineTreeInput({-1}));
}

}  // namespace ods
