#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ods/analysis.hpp"
#include "ods/offline.hpp"
#include "ods/tree.hpp"

namespace ods {

enum class NormTarget { P1, P2, P3, P4, P5, P6 };

inline NormTarget norm_target_from_string(const std::string& s) {
  if (s == "p1") return NormTarget::P1;
  if (s == "p2") return NormTarget::P2;
  if (s == "p3") return NormTarget::P3;
  if (s == "p4") return NormTarget::P4;
  if (s == "p5") return NormTarget::P5;
  if (s == "p6") return NormTarget::P6;
  throw std::invalid_argument("unknown normalization target: " + s);
}

struct NormalizeError : std::runtime_error {
  enum class Kind { AlreadySatisfied, PreconditionUnmet };
  Kind kind;
  NormalizeError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

struct NormalizeResult {
  std::vector<OnlineTreeInput> derived;
  std::string note;
};

namespace detail {

inline int target_property(NormTarget t) {
  switch (t) {
    case NormTarget::P1: return 1;
    case NormTarget::P2: return 2;
    case NormTarget::P3: return 3;
    case NormTarget::P4: return 4;
    case NormTarget::P5: return 5;
    default: return 6;
  }
}

inline std::vector<int> selected_dominators(const TreeView& view, const VertexSet& opt, int x) {
  std::vector<int> out;
  if (opt[x]) out.push_back(x);
  for (int y : view.adj[x])
    if (opt[y]) out.push_back(y);
  return out;
}

}  // namespace detail

// An input satisfies a target when some optimal set witnesses the property.
inline bool target_satisfied(const OnlineTreeInput& in, NormTarget t, int cap = 14) {
  auto opts = enumerate_optimal_sets(in, cap);
  auto rep = check_properties(in, opts);
  return rep.exists[detail::target_property(t)];
}

// One proof step of the corresponding worst-case transformation. Throws
// NormalizeError when the target already holds or the preconditions of the
// construction cannot be met on this input.
inline NormalizeResult normalize_step(const OnlineTreeInput& in, NormTarget target, int cap = 14) {
  auto val = validate(in);
  if (!val.ok || in.n() < 2) throw std::invalid_argument("normalize_step: invalid input");
  if (target_satisfied(in, target, cap))
    throw NormalizeError(NormalizeError::Kind::AlreadySatisfied, "target already satisfied");

  TreeView view(in);
  auto opts = enumerate_optimal_sets(in, cap);

  switch (target) {
    case NormTarget::P1: {
      for (const auto& d : opts) {
        for (int u = 1; u < view.n; ++u) {
          auto st = edge_status(view, d, view.parent[u], u);
          if (st.free_edge && !st.fixed_edge) {
            NormalizeResult r;
            r.derived = {remove_subtree(in, u).input, extract_subtree(in, u).input};
            r.note = "split at free non-fixed edge (" + std::to_string(st.v) + "," +
                     std::to_string(u) + ")";
            return r;
          }
        }
      }
      throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                           "no free non-fixed edge under any optimal set");
    }

    case NormTarget::P2: {
      // deepest vertex of degree >= 4; its last-arriving child carries the
      // whole final degree
      int v = -1;
      for (int x = 0; x < view.n; ++x) {
        if (view.degree[x] < 4) continue;
        if (v == -1 || view.depth[x] > view.depth[v] ||
            (view.depth[x] == view.depth[v] && x > v))
          v = x;
      }
      if (v == -1)
        throw NormalizeError(NormalizeError::Kind::PreconditionUnmet, "no vertex of degree >= 4");
      int u = view.children[v].back();
      for (const auto& d : opts) {
        if (!check_properties_one(view, d).p[1]) continue;
        auto dom_u = detail::selected_dominators(view, d, u);
        bool case2 = d[v] && dom_u.size() == 1 && dom_u[0] == v;
        if (!case2)
          throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                               "configuration impossible while every free edge is fixed");
        auto in_u = view.subtree_mask(u);
        std::vector<int> opts_in_rest;  // selected strict descendants of v outside u's subtree
        for (int x : view.descendants(v))
          if (d[x] && !in_u[x]) opts_in_rest.push_back(x);
        bool all_deg3 = std::all_of(opts_in_rest.begin(), opts_in_rest.end(),
                                    [&](int x) { return view.degree[x] == 3; });
        if (all_deg3) {
          // need a selected degree-3 vertex whose final edge is a leaf
          int vp = -1, up = -1;
          for (int x : opts_in_rest) {
            if (view.degree[x] != 3) continue;
            for (int c : view.children[x]) {
              if (view.degree[c] == 1 && view.degree_at(x, c) == 3) {
                if (vp == -1 || x < vp || (x == vp && c < up)) {
                  vp = x;
                  up = c;
                }
                break;
              }
            }
          }
          if (vp == -1)
            throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                                 "graft target missing: no selected degree-3 vertex with a "
                                 "last-arriving leaf");
          auto r1 = remove_subtree(in, u);
          auto r2 = remove_subtree(r1.input, r1.new_of_old[up]);
          auto s2 = extract_subtree(in, u);
          int graft_at = r2.new_of_old[r1.new_of_old[vp]];
          NormalizeResult r;
          r.derived = {attach_tree(r2.input, graft_at, s2.input)};
          r.note = "degree reduction, graft at last-arriving leaf slot";
          return r;
        }
        int vpp = -1;
        for (int x : opts_in_rest)
          if (view.degree[x] <= 2 && (vpp == -1 || x < vpp)) vpp = x;
        auto r1 = remove_subtree(in, u);
        auto s2 = extract_subtree(in, u);
        NormalizeResult r;
        r.derived = {attach_tree(r1.input, r1.new_of_old[vpp], s2.input)};
        r.note = "degree reduction, graft at low-degree selected vertex";
        return r;
      }
      throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                           "no optimal set leaves every free edge fixed");
    }

    case NormTarget::P3: {
      for (const auto& d : opts) {
        auto props = check_properties_one(view, d);
        if (!props.all_of({1, 2})) continue;
        for (int v = 0; v < view.n; ++v) {
          if (!d[v] || view.degree[v] > 2) continue;
          NormalizeResult r;
          if (view.degree[v] == 2)
            r.derived = {attach_pendant(in, v)};
          else
            r.derived = {attach_pendant(attach_pendant(in, v), v)};
          r.note = "pendants attached to selected vertex " + std::to_string(v);
          return r;
        }
      }
      throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                           "no optimal set with a low-degree selected vertex meets P1+P2");
    }

    case NormTarget::P4: {
      for (const auto& d : opts) {
        auto props = check_properties_one(view, d);
        if (!props.all_of({1, 2, 3})) continue;
        for (int u = 1; u < view.n; ++u) {
          auto st = edge_status(view, d, view.parent[u], u);
          if (!st.free_edge || !d[st.v]) continue;
          auto r1 = remove_subtree(in, u);
          auto s2 = extract_subtree(in, u);
          NormalizeResult r;
          r.derived.push_back(attach_pendant(r1.input, r1.new_of_old[st.v]));
          r.derived.push_back(d[u] ? attach_pendant(s2.input, 0) : s2.input);
          r.note = "split at selected free edge, both sides padded";
          return r;
        }
      }
      throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                           "no optimal set meeting P1-P3 has a selected free edge");
    }

    case NormTarget::P5: {
      for (const auto& d : opts) {
        auto props = check_properties_one(view, d);
        if (!props.all_of({1, 2, 3, 4})) continue;
        auto trips = good_triplets(view, d);
        if (trips.empty()) continue;
        auto t = trips.front();  // t.u1 < t.u3 in reveal order
        if (t.u2 > t.u1)
          throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                               "triplet middle revealed after an endpoint despite P4");
        auto s2 = extract_subtree(in, t.u2);
        NormalizeResult r;
        r.derived = {remove_subtree(in, t.u2).input,
                     remove_subtree(s2.input, s2.new_of_old[t.u3]).input,
                     remove_subtree(s2.input, s2.new_of_old[t.u1]).input};
        r.note = "three-way split around triplet (" + std::to_string(t.u1) + "," +
                 std::to_string(t.u2) + "," + std::to_string(t.u3) + ")";
        return r;
      }
      throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                           "no optimal set meeting P1-P4 has a good triplet");
    }

    case NormTarget::P6: {
      // The full precondition list (P1-P5 plus a degree-2 free edge) is
      // unsatisfiable, so this step accepts P1-P4; see the repository notes.
      for (const auto& d : opts) {
        auto props = check_properties_one(view, d);
        if (!props.all_of({1, 2, 3, 4})) continue;
        // deepest qualifying earlier endpoint, so no descendant also
        // carries a degree-2 free edge
        int best_v = -1, best_u = -1;
        for (int u = 1; u < view.n; ++u) {
          auto st = edge_status(view, d, view.parent[u], u);
          if (!st.free_edge || view.degree[st.v] != 2) continue;
          if (best_v == -1 || view.depth[st.v] > view.depth[best_v] ||
              (view.depth[st.v] == view.depth[best_v] && st.v > best_v)) {
            best_v = st.v;
            best_u = u;
          }
        }
        if (best_v == -1) continue;
        auto r1 = remove_subtree(in, best_u);
        NormalizeResult r;
        if (exact_ratio(r1.input) >= exact_ratio(in)) {
          r.derived = {r1.input};
          r.note = "drop the subtree side (its removal does not lower the ratio)";
        } else {
          auto s2 = extract_subtree(in, best_u);
          r.derived = {attach_tree(in, best_v, s2.input)};
          r.note = "duplicate the subtree and graft the copy";
        }
        return r;
      }
      throw NormalizeError(NormalizeError::Kind::PreconditionUnmet,
                           "no optimal set meeting P1-P4 has a degree-2 free edge");
    }
  }
  throw std::logic_error("normalize_step: unreachable");
}

struct NormalizeLogEntry {
  NormTarget target;
  std::string note;
  Rational ratio_before, ratio_after;
};

struct NormalizeRun {
  OnlineTreeInput result;
  std::vector<NormalizeLogEntry> log;
};

// Convenience driver over the stage order the transformation hypotheses
// induce; each stage repeats until its target holds, always continuing from
// the best-ratio derived input.
inline NormalizeRun normalize(const OnlineTreeInput& input, int max_steps = 64, int cap = 14) {
  NormalizeRun run;
  run.result = input;
  const NormTarget order[] = {NormTarget::P1, NormTarget::P2, NormTarget::P1,
                              NormTarget::P3, NormTarget::P4, NormTarget::P5,
                              NormTarget::P6};
  int steps = 0;
  for (NormTarget t : order) {
    while (true) {
      if (++steps > max_steps) throw std::runtime_error("normalize: step cap exceeded");
      try {
        auto res = normalize_step(run.result, t, cap);
        NormalizeLogEntry e{t, res.note, exact_ratio(run.result), Rational(0)};
        const OnlineTreeInput* best = nullptr;
        Rational best_ratio(0);
        for (const auto& cand : res.derived) {
          if (cand.n() < 2) continue;
          Rational r = exact_ratio(cand);
          if (!best || best_ratio < r) {
            best = &cand;
            best_ratio = r;
          }
        }
        if (!best) throw std::runtime_error("normalize: every derived input is trivial");
        e.ratio_after = best_ratio;
        run.result = *best;
        run.log.push_back(e);
      } catch (const NormalizeError&) {
        break;  // satisfied or inapplicable: move to the next stage
      }
    }
  }
  return run;
}

}  // namespace ods
