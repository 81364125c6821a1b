#pragma once

#include <cstdint>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ods/tree.hpp"

namespace ods {

enum class GenKind { UniformAttachment, Path, Star, Degree13Tree, Caterpillar };
enum class RevealOrder { Bfs, Dfs, RandomValid };

inline GenKind gen_kind_from_string(const std::string& s) {
  if (s == "uniform-attachment") return GenKind::UniformAttachment;
  if (s == "path") return GenKind::Path;
  if (s == "star") return GenKind::Star;
  if (s == "degree13-tree") return GenKind::Degree13Tree;
  if (s == "caterpillar") return GenKind::Caterpillar;
  throw std::invalid_argument("unknown generator kind: " + s);
}

inline const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::UniformAttachment: return "uniform-attachment";
    case GenKind::Path: return "path";
    case GenKind::Star: return "star";
    case GenKind::Degree13Tree: return "degree13-tree";
    default: return "caterpillar";
  }
}

inline RevealOrder reveal_order_from_string(const std::string& s) {
  if (s == "bfs") return RevealOrder::Bfs;
  if (s == "dfs") return RevealOrder::Dfs;
  if (s == "random-valid") return RevealOrder::RandomValid;
  throw std::invalid_argument("unknown reveal order: " + s);
}

struct GeneratorSpec {
  GenKind kind = GenKind::UniformAttachment;
  int n = 2;
  std::uint64_t seed = 0;
  RevealOrder order = RevealOrder::Bfs;
};

namespace detail {

// rng() % k is deliberate: mt19937_64's stream is pinned by the standard,
// distributions are not, and reports must be byte-reproducible
inline int draw(std::mt19937_64& rng, int k) { return static_cast<int>(rng() % k); }

struct Shape {
  std::vector<std::vector<int>> adj;
  int start = 0;
};

inline OnlineTreeInput order_shape(const Shape& shape, RevealOrder order, std::mt19937_64& rng) {
  const int n = static_cast<int>(shape.adj.size());
  OnlineTreeInput out;
  out.parents.assign(n, -1);
  std::vector<int> new_id(n, -1);
  int next = 0;

  auto place = [&](int v, int parent_old) {
    new_id[v] = next;
    out.parents[next] = parent_old == -1 ? -1 : new_id[parent_old];
    ++next;
  };

  if (order == RevealOrder::Bfs) {
    std::queue<int> q;
    place(shape.start, -1);
    q.push(shape.start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : shape.adj[v])
        if (new_id[u] == -1) {
          place(u, v);
          q.push(u);
        }
    }
  } else if (order == RevealOrder::Dfs) {
    std::vector<std::pair<int, int>> stack{{shape.start, -1}};
    while (!stack.empty()) {
      auto [v, p] = stack.back();
      stack.pop_back();
      if (new_id[v] != -1) continue;
      place(v, p);
      for (auto it = shape.adj[v].rbegin(); it != shape.adj[v].rend(); ++it)
        if (new_id[*it] == -1) stack.emplace_back(*it, v);
    }
  } else {
    std::vector<std::pair<int, int>> frontier;  // (vertex, revealed neighbor)
    place(shape.start, -1);
    for (int u : shape.adj[shape.start]) frontier.emplace_back(u, shape.start);
    while (!frontier.empty()) {
      int i = draw(rng, static_cast<int>(frontier.size()));
      auto [v, p] = frontier[i];
      frontier[i] = frontier.back();
      frontier.pop_back();
      if (new_id[v] != -1) continue;
      place(v, p);
      for (int u : shape.adj[v])
        if (new_id[u] == -1) frontier.emplace_back(u, v);
    }
  }
  return out;
}

inline void add_edge(Shape& s, int a, int b) {
  s.adj[a].push_back(b);
  s.adj[b].push_back(a);
}

}  // namespace detail

inline OnlineTreeInput generate(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("generate: n must be at least 2");

  detail::Shape shape;
  shape.adj.assign(n, {});
  switch (spec.kind) {
    case GenKind::Path:
      for (int i = 1; i < n; ++i) detail::add_edge(shape, i - 1, i);
      shape.start = 0;
      break;
    case GenKind::Star:
      // canonical reveal starts at a leaf, so the hub is the second vertex
      shape.start = 0;
      if (n >= 2) detail::add_edge(shape, 0, 1);
      for (int i = 2; i < n; ++i) detail::add_edge(shape, 1, i);
      break;
    case GenKind::UniformAttachment: {
      for (int i = 1; i < n; ++i) detail::add_edge(shape, detail::draw(rng, i), i);
      shape.start = 0;
      break;
    }
    case GenKind::Degree13Tree: {
      if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("degree13-tree: n must be even and at least 4");
      // start from a 3-star and repeatedly expand a leaf into a hub
      detail::add_edge(shape, 0, 1);
      detail::add_edge(shape, 0, 2);
      detail::add_edge(shape, 0, 3);
      std::vector<int> leaves{1, 2, 3};
      int next = 4;
      while (next < n) {
        int i = detail::draw(rng, static_cast<int>(leaves.size()));
        int grow = leaves[i];
        leaves[i] = leaves.back();
        leaves.pop_back();
        detail::add_edge(shape, grow, next);
        detail::add_edge(shape, grow, next + 1);
        leaves.push_back(next);
        leaves.push_back(next + 1);
        next += 2;
      }
      shape.start = 0;
      break;
    }
    case GenKind::Caterpillar: {
      int spine = std::max(2, n / 2 + (n >= 4 ? detail::draw(rng, n / 4 + 1) : 0));
      spine = std::min(spine, n);
      for (int i = 1; i < spine; ++i) detail::add_edge(shape, i - 1, i);
      for (int i = spine; i < n; ++i) detail::add_edge(shape, detail::draw(rng, spine), i);
      shape.start = 0;
      break;
    }
  }
  auto out = detail::order_shape(shape, spec.order, rng);
  if (!validate(out).ok) throw std::logic_error("generate: produced an invalid instance");
  return out;
}

// Visit every parent array of exactly n vertices (prod_{i>=2}(i-1) of them).
template <typename F>
inline void for_each_parent_array(int n, F&& f) {
  OnlineTreeInput in;
  in.parents.assign(n, -1);
  if (n == 1) {
    f(const_cast<const OnlineTreeInput&>(in));
    return;
  }
  std::vector<int> choice(n, 0);
  while (true) {
    for (int i = 1; i < n; ++i) in.parents[i] = choice[i];
    f(const_cast<const OnlineTreeInput&>(in));
    int i = n - 1;
    while (i >= 1) {
      if (++choice[i] < i) break;
      choice[i] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

inline long long count_parent_arrays(int n) {
  long long c = 1;
  for (int i = 2; i < n; ++i) c *= i;
  return c;
}

}  // namespace ods
