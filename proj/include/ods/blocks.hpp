#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ods/analysis.hpp"
#include "ods/dominating.hpp"
#include "ods/online.hpp"
#include "ods/rational.hpp"
#include "ods/tree.hpp"

namespace ods {

// Greedy index-ordered grouping: take the minimum-index unassigned vertex,
// then its minimum-index unassigned neighbor, then the minimum-index
// unassigned neighbor of either. Every vertex lands in exactly one block.
struct BlockAssignment {
  std::vector<int> block_of;               // per vertex
  std::vector<std::vector<int>> blocks;    // members in assignment order
};

inline BlockAssignment block_routine(const TreeView& view) {
  const int n = view.n;
  BlockAssignment out;
  out.block_of.assign(n, -1);
  std::vector<char> unassigned(n, 1);
  int cursor = 0;

  auto min_unassigned_neighbor = [&](int a, int b) {
    int best = -1;
    for (int x : view.adj[a])
      if (unassigned[x] && (best == -1 || x < best)) best = x;
    if (b >= 0)
      for (int x : view.adj[b])
        if (unassigned[x] && (best == -1 || x < best)) best = x;
    return best;
  };

  while (true) {
    while (cursor < n && !unassigned[cursor]) ++cursor;
    if (cursor == n) break;
    int block_id = static_cast<int>(out.blocks.size());
    std::vector<int> members;
    auto take = [&](int v) {
      unassigned[v] = 0;
      out.block_of[v] = block_id;
      members.push_back(v);
    };
    take(cursor);
    int second = min_unassigned_neighbor(members[0], -1);
    if (second != -1) {
      take(second);
      int third = min_unassigned_neighbor(members[0], members[1]);
      if (third != -1) take(third);
    }
    out.blocks.push_back(std::move(members));
  }
  return out;
}

inline BlockAssignment block_routine(const OnlineTreeInput& in) {
  return block_routine(TreeView(in));
}

// Degree-shape taxonomy of a block on a degree-{1,3} tree. Three-vertex
// blocks always lie on a path; `mid` is the vertex adjacent to both others.
enum class BlockKind { B1, B2, B3, B4, Unclassified };

inline const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::B1: return "b1";
    case BlockKind::B2: return "b2";
    case BlockKind::B3: return "b3";
    case BlockKind::B4: return "b4";
    default: return "unclassified";
  }
}

struct BlockShape {
  BlockKind kind = BlockKind::Unclassified;
  int mid = -1;
  int end1 = -1, end2 = -1;  // for B2: end1 is the degree-3 end
};

inline BlockShape block_shape(const TreeView& view, const std::vector<int>& members) {
  BlockShape s;
  if (members.size() == 1) {
    if (view.degree[members[0]] == 1) s.kind = BlockKind::B1;
    return s;
  }
  if (members.size() != 3) return s;
  auto adjacent = [&](int a, int b) {
    return std::find(view.adj[a].begin(), view.adj[a].end(), b) != view.adj[a].end();
  };
  for (int i = 0; i < 3; ++i) {
    int m = members[i], a = members[(i + 1) % 3], b = members[(i + 2) % 3];
    if (adjacent(m, a) && adjacent(m, b)) {
      s.mid = m;
      s.end1 = a;
      s.end2 = b;
      break;
    }
  }
  if (s.mid == -1) return s;
  int dm = view.degree[s.mid], d1 = view.degree[s.end1], d2 = view.degree[s.end2];
  if (dm != 3) return s;
  if (d1 == 1 && d2 == 1) {
    s.kind = BlockKind::B3;
  } else if (d1 == 3 && d2 == 3) {
    s.kind = BlockKind::B4;
  } else if ((d1 == 3 && d2 == 1) || (d1 == 1 && d2 == 3)) {
    if (d1 == 1) std::swap(s.end1, s.end2);
    s.kind = BlockKind::B2;
  }
  return s;
}

// Counts per the block taxonomy: structural kind counts, the reveal-order
// split of B1 blocks, and the per-optimal-set subkinds of the legal shapes.
// Any selection pattern outside the six legal kinds is flagged.
struct BlockClassification {
  long long nb1 = 0, nb2 = 0, nb3 = 0, nb4 = 0;   // by degree shape only
  long long b1_0 = 0, b1_1 = 0;                   // B1 split by deg_v(neighbor)
  long long b2_010 = 0, b3_mid = 0;               // legal selection patterns
  long long b4_000 = 0, b4_100 = 0, b4_010 = 0;
  std::vector<std::string> forbidden;             // e.g. "block 3: b2^110"
  long long b4() const { return nb4; }
  bool clean() const { return forbidden.empty(); }
};

inline BlockClassification classify_blocks(const TreeView& view, const BlockAssignment& asg,
                                           const VertexSet& optset) {
  for (int v = 0; v < view.n; ++v)
    if (view.degree[v] != 1 && view.degree[v] != 3)
      throw std::invalid_argument("classify_blocks: degrees must all be 1 or 3");

  BlockClassification out;
  for (std::size_t bi = 0; bi < asg.blocks.size(); ++bi) {
    const auto& members = asg.blocks[bi];
    BlockShape s = block_shape(view, members);
    std::string tag = "block " + std::to_string(bi) + ": ";
    switch (s.kind) {
      case BlockKind::B1: {
        ++out.nb1;
        int v = members[0];
        // the routine starts block 0 at the root, so a B1 vertex is never the
        // root and its single neighbor is its (earlier) parent
        int u = view.adj[v][0];
        (view.degree_at(u, v) >= 3 ? out.b1_0 : out.b1_1) += 1;
        if (optset[v]) out.forbidden.push_back(tag + "b1^1");
        break;
      }
      case BlockKind::B3: {
        ++out.nb3;
        bool ok = optset[s.mid] && !optset[s.end1] && !optset[s.end2];
        if (ok)
          ++out.b3_mid;
        else
          out.forbidden.push_back(tag + "b3 selection pattern");
        break;
      }
      case BlockKind::B2: {
        ++out.nb2;
        bool e1 = optset[s.end1] != 0, m = optset[s.mid] != 0, e3 = optset[s.end2] != 0;
        if (!e1 && m && !e3)
          ++out.b2_010;
        else if (e1 && m && !e3)
          out.forbidden.push_back(tag + "b2^110");
        else
          out.forbidden.push_back(tag + "b2 selection pattern");
        break;
      }
      case BlockKind::B4: {
        ++out.nb4;
        bool e1 = optset[s.end1] != 0, m = optset[s.mid] != 0, e3 = optset[s.end2] != 0;
        if (e3 && !e1) std::swap(e1, e3);  // endpoint symmetry
        if (!e1 && !m && !e3)
          ++out.b4_000;
        else if (e1 && !m && !e3)
          ++out.b4_100;
        else if (!e1 && m && !e3)
          ++out.b4_010;
        else if (e1 && m && !e3)
          out.forbidden.push_back(tag + "b4^110");
        else if (e1 && !m && e3)
          out.forbidden.push_back(tag + "b4^101");
        else
          out.forbidden.push_back(tag + "b4^111");
        break;
      }
      default:
        throw std::invalid_argument("classify_blocks: block " + std::to_string(bi) +
                                    " does not fit the taxonomy");
    }
  }
  return out;
}

// The two count relations every classified instance must satisfy.
struct CountIdentityReport {
  bool leaf_identity = true;        // b1_0 + b1_1 + b3 == b2 + 3 b4 + 2
  bool b1_0_bound = true;           // b1_0 <= b2 + b4_100 + b4_010  (n >= 5)
  bool b1_1_bound = true;           // b1_1 <= b4_100               (n >= 5)
  bool bounds_checked = false;      // false when n < 5 or classification unclean
  std::vector<std::string> violations;
};

inline CountIdentityReport check_counting_identities(const BlockClassification& c, int n) {
  CountIdentityReport r;
  if (c.b1_0 + c.b1_1 + c.nb3 != c.nb2 + 3 * c.nb4 + 2) {
    r.leaf_identity = false;
    r.violations.push_back("leaf identity: " + std::to_string(c.b1_0 + c.b1_1 + c.nb3) +
                           " != " + std::to_string(c.nb2 + 3 * c.nb4 + 2));
  }
  if (n >= 5 && c.clean()) {
    r.bounds_checked = true;
    if (c.b1_0 > c.b2_010 + c.b4_100 + c.b4_010) {
      r.b1_0_bound = false;
      r.violations.push_back("b1_0 bound violated");
    }
    if (c.b1_1 > c.b4_100) {
      r.b1_1_bound = false;
      r.violations.push_back("b1_1 bound violated");
    }
  }
  return r;
}

// Per-block expected mixture cost against the per-kind ceilings. Blocks with
// the first revealed vertex get the looser ceilings.
struct BlockCostRow {
  int block = 0;
  BlockKind kind = BlockKind::Unclassified;
  bool has_root = false;
  Rational cost;
  Rational bound;
  bool ok = true;
  bool exact = false;  // bound must be met with equality (B1 subks)
};

struct BlockCostAudit {
  std::vector<BlockCostRow> rows;
  Rational total;
  bool all_ok = true;
};

inline BlockCostAudit block_cost_audit(const TreeView& view, const BlockAssignment& asg) {
  BlockCostAudit audit;
  audit.total = Rational(0);
  for (std::size_t bi = 0; bi < asg.blocks.size(); ++bi) {
    const auto& members = asg.blocks[bi];
    BlockShape s = block_shape(view, members);
    BlockCostRow row;
    row.block = static_cast<int>(bi);
    row.kind = s.kind;
    Rational cost(0);
    for (int v : members) cost += expected_cost_per_vertex(view, v);
    row.cost = cost;
    for (int v : members) row.has_root = row.has_root || v == 0;
    switch (s.kind) {
      case BlockKind::B1: {
        int v = members[0];
        int u = view.adj[v][0];
        bool fast = v != 0 && view.degree_at(u, v) >= 3;
        row.bound = fast ? Rational(0) : Rational(1, 2);
        row.exact = true;
        row.ok = !row.has_root && cost == row.bound;
        break;
      }
      case BlockKind::B2:
        row.bound = row.has_root ? Rational(3) : Rational(5, 2);
        row.ok = cost <= row.bound;
        break;
      case BlockKind::B3:
        row.bound = row.has_root ? Rational(5, 2) : Rational(3, 2);
        row.ok = cost <= row.bound;
        break;
      case BlockKind::B4:
        row.bound = Rational(3);
        row.ok = cost <= row.bound;
        break;
      default:
        row.ok = false;
    }
    audit.all_ok = audit.all_ok && row.ok;
    audit.total += cost;
    audit.rows.push_back(row);
  }
  return audit;
}

// Exact evaluation of the closing substitution chain from classified counts.
// Returns the final bound; every intermediate step is checked, and the whole
// chain stays strictly below 5/2.
struct BoundChain {
  Rational block_upper;   // upper estimate of E[C_RA]/C_OPT from block ceilings
  Rational final_bound;   // the substituted closed form, < 5/2
  std::vector<Rational> steps;
};

inline BoundChain theorem_bound_chain(const BlockClassification& c, int b2_root, int b3_root,
                                      int n) {
  if (n < 5) throw std::invalid_argument("bound chain: needs n >= 5");
  if (!c.clean()) throw std::invalid_argument("bound chain: needs a clean classification");
  if (b2_root < 0 || b3_root < 0 || b2_root + b3_root > 1)
    throw std::invalid_argument("bound chain: bad root-block indicators");
  auto idr = check_counting_identities(c, n);
  if (!idr.violations.empty()) throw std::invalid_argument("bound chain: count identities fail");

  const Rational b10(c.b1_0), b11(c.b1_1), b2(c.nb2), b3(c.nb3), b4(c.nb4);
  const Rational b4_100(c.b4_100), b4_010(c.b4_010);
  const Rational copt = b2 + b3 + b4_100 + b4_010;
  if (!(Rational(0) < copt)) throw std::invalid_argument("bound chain: zero block optimum");

  BoundChain out;
  out.block_upper = (b11 / 2 + Rational(5) * b2 / 2 + Rational(3) * b3 / 2 + Rational(3) * b4 +
                     Rational(b2_root) / 2 + Rational(b3_root)) /
                    copt;
  Rational e1 = (b11 / 2 + Rational(5) * b2 / 2 + Rational(3) * b3 / 2 + Rational(3) * b4 +
                 Rational(1)) /
                copt;
  Rational n2 = Rational(-3) * b10 / 2 - b11 + Rational(4) * b2 + Rational(15) * b4 / 2 +
                Rational(4);
  Rational d2 = Rational(0) - b10 - b11 + Rational(2) * b2 + Rational(3) * b4 + b4_100 + b4_010 +
                Rational(2);
  Rational e2 = n2 / d2;
  Rational n3 = Rational(-3) * b10 / 2 + Rational(4) * b2 + Rational(15) * b4 / 2 - b4_100 +
                Rational(4);
  Rational d3 = Rational(0) - b10 + Rational(2) * b2 + Rational(3) * b4 + b4_010 + Rational(2);
  Rational e3 = n3 / d3;
  Rational n4 = Rational(-5) * b10 / 2 + Rational(5) * b2 + Rational(15) * b4 / 2 + b4_010 +
                Rational(4);
  Rational e4 = n4 / d3;
  Rational e5 = Rational(5, 2) *
                ((Rational(0) - b10 + Rational(2) * b2 + Rational(3) * b4 +
                  Rational(2) * b4_010 / 5 + Rational(8, 5)) /
                 d3);

  auto chk = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("bound chain: ") + what);
  };
  chk(Rational(0) < d2 && Rational(0) < d3, "nonpositive denominator");
  chk(out.block_upper <= e1, "root-block slack");
  chk(e1 == e2, "leaf-identity substitution is not an equality");
  chk(n2 >= d2, "estimate below optimum");
  chk(e2 <= e3, "b1_1 substitution");
  chk(e3 <= e4, "b1_0 substitution");
  chk(e4 == e5, "final rearrangement");
  chk(e5 < Rational(5, 2), "bound not below 5/2");

  out.steps = {out.block_upper, e1, e2, e3, e4, e5};
  out.final_bound = e5;
  return out;
}

}  // namespace ods
