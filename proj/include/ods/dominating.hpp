#pragma once

#include <vector>

#include "ods/tree.hpp"

namespace ods {

using VertexSet = std::vector<char>;  // indexed by vertex, 1 = member

inline VertexSet empty_set(int n) { return VertexSet(n, 0); }

inline int set_size(const VertexSet& s) {
  int c = 0;
  for (char b : s) c += b != 0;
  return c;
}

inline std::vector<int> set_members(const VertexSet& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

inline VertexSet set_of(int n, const std::vector<int>& members) {
  VertexSet s(n, 0);
  for (int v : members) s[v] = 1;
  return s;
}

// every non-member has a member neighbor
inline bool dominates(const TreeView& view, const VertexSet& s) {
  for (int v = 0; v < view.n; ++v) {
    if (s[v]) continue;
    bool ok = false;
    for (int u : view.adj[v])
      if (s[u]) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

// dominating restricted to the first k revealed vertices
inline bool dominates_prefix(const TreeView& view, const VertexSet& s, int k) {
  for (int v = 0; v < k; ++v) {
    if (s[v]) continue;
    bool ok = false;
    for (int u : view.adj[v]) {
      if (u < k && s[u]) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace ods
