#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ods/dominating.hpp"
#include "ods/offline.hpp"
#include "ods/online.hpp"
#include "ods/rational.hpp"
#include "ods/tree.hpp"

namespace ods {

struct AdversaryParams {
  int max_length = 98;  // must be ≡ 2 (mod 3)
  int max_t0 = 100;
  int max_t1 = 100;

  void check() const {
    if (max_length < 2 || max_length % 3 != 2)
      throw std::invalid_argument("max_length must be >= 2 and congruent 2 mod 3");
    if (max_t0 < 2 || max_t1 < 2) throw std::invalid_argument("max_t0/max_t1 must be >= 2");
  }
};

struct AdversaryContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TKind { T0, T1, T2, T3 };

inline const char* tkind_name(TKind k) {
  switch (k) {
    case TKind::T0: return "t0";
    case TKind::T1: return "t1";
    case TKind::T2: return "t2";
    default: return "t3";
  }
}

// One chain-plus-sibling gadget grown from a base vertex. `chain` holds
// u_1..u_len; the sibling (if any) hangs off u_{len-1} (off the base when
// len == 1). Re-partitioned records come from splitting a T2 when its second
// chain vertex is promoted to a base.
struct TSetRecord {
  int base = -1;
  int arrival_rank = 0;  // a-th T-set of this base, 1-based
  std::vector<int> chain;
  int sibling = -1;
  TKind kind = TKind::T0;
  int length = 0;
  bool from_repartition = false;

  // minimum number of vertices any contract-satisfying algorithm holds here
  long long on_accounted() const { return kind == TKind::T3 ? length - 1 : length; }
};

struct RawChain {
  std::vector<int> chain;  // u_1..u_t
  int sibling = -1;
  bool ended_by_select = false;
};

// Grow a chain from `base` until the algorithm selects the newest vertex
// (then reveal one sibling and stop) or the chain reaches max_length.
inline RawChain subtree_routine(OnlineRun& run, int base, int max_length) {
  RawChain out;
  int prev = base;
  for (int j = 1; j <= max_length; ++j) {
    int u = run.reveal(prev);
    if (!run.contract_ok())
      throw AdversaryContractViolation("algorithm violated prefix domination");
    out.chain.push_back(u);
    if (run.is_selected(u)) {
      int sib_parent = out.chain.size() >= 2 ? out.chain[out.chain.size() - 2] : base;
      out.sibling = run.reveal(sib_parent);
      if (!run.contract_ok())
        throw AdversaryContractViolation("algorithm violated prefix domination");
      out.ended_by_select = true;
      return out;
    }
    prev = u;
  }
  return out;  // ran to max_length without a selection of the new vertex
}

inline TKind classify_tset(int length, int max_length) {
  if (length == max_length) return TKind::T3;
  switch (length % 3) {
    case 0: return TKind::T0;
    case 1: return TKind::T1;
    default: return TKind::T2;
  }
}

struct BaseLedger {
  int base = -1;
  std::vector<TSetRecord> tsets;
};

struct DetTranscript {
  OnlineTreeInput input;
  AdversaryParams params;
  std::vector<BaseLedger> bases;
  std::string termination;  // 3.1.2 | 3.2.2 | 3.3.1 | 3.3.2 | 3.4
  long long on_cost = 0;            // actual trace cost of the driven algorithm
  long long on_cost_accounted = 0;  // forced minimum: bases + per-T-set minima
  long long off_cost = 0;
  std::vector<int> off_witness;
};

namespace detail {

// OFF's selection inside one T-set. `base_in_off` tracks whether the base
// vertex itself has been added (only the first T1 does that); returns the
// vertices picked from this gadget.
struct OffPick {
  std::vector<int> picks;
  bool picked_base = false;
  bool covers_base = false;
};

inline OffPick off_pick_for_tset(const TSetRecord& t, bool base_in_off) {
  OffPick out;
  const auto& c = t.chain;
  auto pick_every3 = [&](int first_vertex_index) {
    // vertex indices are 1-based along the chain; chain[i] = u_{i+1}
    for (int vi = first_vertex_index; vi <= t.length - 1; vi += 3) out.picks.push_back(c[vi - 1]);
  };
  switch (t.kind) {
    case TKind::T2:
    case TKind::T3:
      pick_every3(1);  // u_1, u_4, ..., u_{len-1}
      out.covers_base = true;
      break;
    case TKind::T0:
      pick_every3(2);  // u_2, u_5, ..., u_{len-1}
      break;
    case TKind::T1:
      if (t.from_repartition && t.sibling != -1) {
        // {u_1, u'_1}: u_1 covers the sibling and the base
        out.picks.push_back(c[0]);
        out.covers_base = true;
      } else if (!base_in_off) {
        out.picked_base = true;
        out.covers_base = true;
        pick_every3(3);  // base, u_3, u_6, ..., u_{len-1}
      } else {
        pick_every3(3);
      }
      break;
  }
  return out;
}

}  // namespace detail

// Exact cost OFF pays for one T-set in isolation (first-T1 rates; the base
// vertex itself is billed separately when it must be selected).
inline long long off_cost_for_tset(const TSetRecord& t) {
  const int len = t.length;
  auto need = [&](int kind_mod, const char* what) {
    if (len % 3 != kind_mod) throw std::invalid_argument(std::string("t-set length: ") + what);
  };
  switch (t.kind) {
    case TKind::T0:
      need(0, "t0 length must be 0 mod 3");
      return len / 3;
    case TKind::T1:
      need(1, "t1 length must be 1 mod 3");
      return (len + 2) / 3;
    case TKind::T2:
      need(2, "t2 length must be 2 mod 3");
      return (len + 1) / 3;
    default:
      need(2, "t3 length must be 2 mod 3");
      return (len + 1) / 3;
  }
}

// Drive `alg` through the full construction. The instance grows until one of
// the five termination cases fires; the ledger records every gadget.
inline DetTranscript tree_routine(std::unique_ptr<OnlineAlgorithm> alg,
                                  const AdversaryParams& params) {
  params.check();
  const long long reveal_guard =
      static_cast<long long>(params.max_t1 + 1) * (params.max_t0 + 2) * (params.max_length + 2) +
      2;

  DetTranscript tr;
  tr.params = params;
  OnlineRun run(std::move(alg));
  run.reveal(-1);
  if (!run.is_selected(0))
    throw AdversaryContractViolation("algorithm failed to select the first vertex");

  int count = 1;
  int base = 0;
  tr.bases.push_back({base, {}});

  bool done = false;
  while (!done) {
    int cnt_t0 = 0, cnt_t1 = 0;  // Step 1
    while (true) {               // Steps 2-3
      if (run.n() > reveal_guard) throw std::logic_error("tree_routine: termination guard hit");
      RawChain raw = subtree_routine(run, base, params.max_length);
      const int t = static_cast<int>(raw.chain.size());
      TKind kind = classify_tset(t, params.max_length);
      auto& ledger = tr.bases.back().tsets;

      if (kind == TKind::T2 && cnt_t1 == 1) {
        // Case 3.3.2: promote the second chain vertex to a base; the T2
        // splits into a length-1 T1 of the old base (keeping the sibling
        // when t == 2) and a T0 of everything below the new base.
        int u1 = raw.chain[0], u2 = raw.chain[1];
        if (!run.is_selected(u2))
          throw AdversaryContractViolation("new base vertex is not selected");
        TSetRecord t1p;
        t1p.base = base;
        t1p.arrival_rank = static_cast<int>(ledger.size()) + 1;
        t1p.chain = {u1};
        t1p.sibling = t == 2 ? raw.sibling : -1;
        t1p.kind = TKind::T1;
        t1p.length = 1;
        t1p.from_repartition = true;
        ledger.push_back(t1p);

        tr.bases.push_back({u2, {}});
        TSetRecord t0p;
        t0p.base = u2;
        t0p.arrival_rank = 1;
        t0p.chain.assign(raw.chain.begin() + 2, raw.chain.end());
        t0p.sibling = t >= 3 ? raw.sibling : -1;
        t0p.kind = TKind::T0;
        t0p.length = t - 2;
        t0p.from_repartition = true;
        tr.bases.back().tsets.push_back(t0p);

        if (count == params.max_t1) {
          tr.termination = "3.3.2";
          done = true;
          break;
        }
        ++count;
        base = u2;
        break;  // back to Step 1
      }

      TSetRecord rec;
      rec.base = base;
      rec.arrival_rank = static_cast<int>(ledger.size()) + 1;
      rec.chain = raw.chain;
      rec.sibling = raw.sibling;
      rec.kind = kind;
      rec.length = t;
      ledger.push_back(rec);

      if (kind == TKind::T0) {
        if (++cnt_t0 < params.max_t0) continue;
        tr.termination = "3.1.2";
      } else if (kind == TKind::T1) {
        if (cnt_t1 == 0) {
          cnt_t1 = 1;
          continue;
        }
        tr.termination = "3.2.2";
      } else if (kind == TKind::T2) {
        tr.termination = "3.3.1";  // cnt_t1 == 0 here
      } else {
        tr.termination = "3.4";
      }
      done = true;
      break;
    }
  }

  tr.input = run.input();
  tr.on_cost = run.cost();

  // OFF witness and the accounted ON minimum, base by base
  VertexSet off(tr.input.n(), 0);
  for (const auto& bl : tr.bases) {
    tr.on_cost_accounted += 1;
    bool base_in_off = false, base_covered = false;
    for (const auto& t : bl.tsets) {
      tr.on_cost_accounted += t.on_accounted();
      auto pick = detail::off_pick_for_tset(t, base_in_off);
      if (pick.picked_base) {
        off[bl.base] = 1;
        base_in_off = true;
      }
      for (int v : pick.picks) off[v] = 1;
      base_covered = base_covered || pick.covers_base || pick.picked_base;
    }
    if (!base_covered) off[bl.base] = 1;  // all-T0 family: pay for the base
  }
  tr.off_witness = set_members(off);
  tr.off_cost = static_cast<long long>(tr.off_witness.size());
  return tr;
}

// ---------------------------------------------------------------------------
// Independent re-derivation of the per-base costs from the ledger, matched
// against the construction, plus the structural soundness checks.
// ---------------------------------------------------------------------------

struct RatioVerdict {
  std::string case_label;
  Rational ratio_accounted;
  Rational ratio_actual;
  long long on_accounted = 0;
  long long off_cost = 0;
  int c_opt = 0;
  bool ok = true;
  std::vector<std::string> problems;
};

inline RatioVerdict verify_ratio_cases(const DetTranscript& tr) {
  RatioVerdict v;
  v.case_label = tr.termination;

  auto complain = [&](std::string s) {
    v.ok = false;
    v.problems.push_back(std::move(s));
  };

  long long on_formula = 0, off_formula = 0;
  for (const auto& bl : tr.bases) {
    long long on_b = 1, off_b = 0;
    bool covered = false;
    bool first_t1 = true;
    for (const auto& t : bl.tsets) {
      on_b += t.on_accounted();
      switch (t.kind) {
        case TKind::T0:
          off_b += t.length / 3;
          break;
        case TKind::T2:
        case TKind::T3:
          off_b += (t.length + 1) / 3;
          covered = true;
          break;
        case TKind::T1:
          if (t.from_repartition && t.sibling != -1) {
            off_b += 1;  // must take u_1 for the sibling; also covers the base
            covered = true;
          } else if (first_t1) {
            off_b += (t.length + 2) / 3;
            covered = true;
          } else {
            off_b += (t.length - 1) / 3;
          }
          if (!(t.from_repartition && t.sibling != -1)) first_t1 = false;
          break;
      }
    }
    if (!covered) off_b += 1;  // all-T0 family: the base itself is selected
    on_formula += on_b;
    off_formula += off_b;
  }

  v.on_accounted = on_formula;
  v.off_cost = off_formula;
  if (on_formula != tr.on_cost_accounted) complain("accounted ON mismatch vs transcript");
  if (off_formula != tr.off_cost) complain("OFF formula mismatch vs witness size");
  if (tr.on_cost < tr.on_cost_accounted) complain("actual ON below the forced minimum");

  TreeView view(tr.input);
  VertexSet off = set_of(view.n, tr.off_witness);
  if (!dominates(view, off)) complain("OFF witness does not dominate");

  auto opt = min_dominating_set_tree(view);
  v.c_opt = opt.size;
  if (opt.size > tr.off_cost) complain("OFF is below the true optimum");

  v.ratio_accounted = Rational(tr.on_cost_accounted) / Rational(tr.off_cost);
  v.ratio_actual = Rational(tr.on_cost) / Rational(tr.off_cost);
  return v;
}

inline DetTranscript run_det_adversary(const std::string& alg_name, const AdversaryParams& params,
                                       std::uint64_t seed = 0) {
  return tree_routine(make_algorithm(alg_name, seed), params);
}

}  // namespace ods
