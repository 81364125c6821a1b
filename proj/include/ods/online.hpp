#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ods/dominating.hpp"
#include "ods/rational.hpp"
#include "ods/tree.hpp"

namespace ods {

// Read-only prefix state handed to an algorithm when a vertex is revealed.
// degree[] is the degree immediately after this reveal, so degree[u] for the
// arrival vertex u is deg_{v}(u) in time-indexed notation.
struct RevealContext {
  const std::vector<int>& parents;
  const std::vector<int>& depth;
  const std::vector<int>& degree;
  const std::vector<char>& selected;
  int vertex;  // newly revealed vertex (== parents.size() - 1)
};

// One instance drives one run; additions are irrevocable and must keep the
// revealed prefix dominated after every event.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual void on_reveal(const RevealContext& ctx, std::vector<int>& additions) = 0;
};

struct SelectionTrace {
  std::vector<std::vector<int>> additions;  // per event, new distinct selections
  VertexSet selected;
  long long cost = 0;
  bool dominated_every_prefix = true;
};

// Incremental run driver. The adversary extends it reveal by reveal; batch
// callers use run_online below.
class OnlineRun {
 public:
  explicit OnlineRun(std::unique_ptr<OnlineAlgorithm> alg) : alg_(std::move(alg)) {}

  // parent == -1 for the first vertex only; returns the new vertex id
  int reveal(int parent) {
    const int v = static_cast<int>(parents_.size());
    if ((parent == -1) != (v == 0) || parent >= v)
      throw std::invalid_argument("OnlineRun::reveal: bad parent");
    parents_.push_back(parent);
    selected_.push_back(0);
    dominated_.push_back(0);
    children_.emplace_back();
    if (v == 0) {
      depth_.push_back(0);
      degree_.push_back(0);
    } else {
      depth_.push_back(depth_[parent] + 1);
      degree_.push_back(1);
      ++degree_[parent];
      children_[parent].push_back(v);
      if (selected_[parent]) dominated_[v] = 1;
    }
    RevealContext ctx{parents_, depth_, degree_, selected_, v};
    scratch_.clear();
    alg_->on_reveal(ctx, scratch_);
    trace_.additions.emplace_back();
    for (int a : scratch_) {
      if (a < 0 || a > v) throw std::logic_error("algorithm selected an unrevealed vertex");
      if (selected_[a]) continue;  // re-selection is a no-op
      selected_[a] = 1;
      dominated_[a] = 1;
      if (a != 0) dominated_[parents_[a]] = 1;
      for (int c : children_[a]) dominated_[c] = 1;
      trace_.additions.back().push_back(a);
      ++trace_.cost;
    }
    // a new undominated vertex can only be dominated via itself or its parent,
    // both checked above; still recheck the event's own vertex
    if (!selected_[v] && (v == 0 || !selected_[parent])) {
      trace_.dominated_every_prefix = false;
      contract_ok_ = false;
    }
    return v;
  }

  bool is_selected(int v) const { return selected_[v] != 0; }
  bool is_dominated(int v) const { return dominated_[v] != 0; }
  int n() const { return static_cast<int>(parents_.size()); }
  int degree_now(int v) const { return degree_[v]; }
  int depth(int v) const { return depth_[v]; }
  bool contract_ok() const { return contract_ok_; }
  long long cost() const { return trace_.cost; }

  OnlineTreeInput input() const { return OnlineTreeInput(parents_); }
  SelectionTrace finish() {
    trace_.selected = selected_;
    return trace_;
  }
  const std::vector<char>& selected_set() const { return selected_; }

 private:
  std::unique_ptr<OnlineAlgorithm> alg_;
  std::vector<int> parents_, depth_, degree_;
  std::vector<std::vector<int>> children_;
  std::vector<char> selected_, dominated_;
  std::vector<int> scratch_;
  SelectionTrace trace_;
  bool contract_ok_ = true;
};

inline SelectionTrace run_online(const OnlineTreeInput& in, std::unique_ptr<OnlineAlgorithm> alg) {
  auto v = validate(in);
  if (!v.ok) throw std::invalid_argument("run_online: invalid input");
  OnlineRun run(std::move(alg));
  for (int p : in.parents) run.reveal(p);
  return run.finish();
}

// The two deterministic arms of the randomized algorithm. They differ only in
// which endpoint of a fresh low-degree edge gets picked for each depth parity.
enum class ParityArm { A, B };

class ParityAlgorithm : public OnlineAlgorithm {
 public:
  explicit ParityAlgorithm(ParityArm arm) : arm_(arm) {}

  void on_reveal(const RevealContext& ctx, std::vector<int>& additions) override {
    const int v = ctx.vertex;
    if (v == 0) {
      additions.push_back(0);
      return;
    }
    const int u = ctx.parents[v];
    if (ctx.degree[u] >= 3) {
      additions.push_back(u);
      return;
    }
    const bool even = ctx.depth[v] % 2 == 0;
    const bool pick_parent = (arm_ == ParityArm::A) ? even : !even;
    additions.push_back(pick_parent ? u : v);
  }

 private:
  ParityArm arm_;
};

inline SelectionTrace run_algorithm_a(const OnlineTreeInput& in) {
  return run_online(in, std::make_unique<ParityAlgorithm>(ParityArm::A));
}
inline SelectionTrace run_algorithm_b(const OnlineTreeInput& in) {
  return run_online(in, std::make_unique<ParityAlgorithm>(ParityArm::B));
}

// Both arms and their exact 1/2-1/2 mixture.
struct RAMixture {
  SelectionTrace arm_a;
  SelectionTrace arm_b;
  Rational expected_cost;
};

inline RAMixture run_ra(const OnlineTreeInput& in) {
  RAMixture m{run_algorithm_a(in), run_algorithm_b(in), Rational{}};
  m.expected_cost = Rational(m.arm_a.cost + m.arm_b.cost, 2);
  return m;
}

inline Rational ra_expected_cost(const OnlineTreeInput& in) { return run_ra(in).expected_cost; }

// Sampled mode: flips one seeded coin and commits to an arm. Exists to
// demonstrate the online contract; ratio reporting always uses run_ra.
inline SelectionTrace run_ra_sampled(const OnlineTreeInput& in, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ParityArm arm = (rng() & 1) ? ParityArm::A : ParityArm::B;
  return run_online(in, std::make_unique<ParityAlgorithm>(arm));
}

inline std::unique_ptr<OnlineAlgorithm> make_ra_sampled_arm(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ParityArm arm = (rng() & 1) ? ParityArm::A : ParityArm::B;
  return std::make_unique<ParityAlgorithm>(arm);
}

// p(v) = (1_A(v) + 1_B(v)) / 2 over the final arm sets
inline std::vector<Rational> ra_selection_probability(const OnlineTreeInput& in) {
  auto m = run_ra(in);
  std::vector<Rational> p(in.n());
  for (int v = 0; v < in.n(); ++v)
    p[v] = Rational((m.arm_a.selected[v] ? 1 : 0) + (m.arm_b.selected[v] ? 1 : 0), 2);
  return p;
}

// Baseline: select the first vertex, then select the arrival vertex's parent
// whenever the newly revealed vertex would otherwise be undominated.
class GreedyBaseline : public OnlineAlgorithm {
 public:
  void on_reveal(const RevealContext& ctx, std::vector<int>& additions) override {
    const int v = ctx.vertex;
    if (v == 0) {
      additions.push_back(0);
      return;
    }
    const int u = ctx.parents[v];
    if (!ctx.selected[u]) additions.push_back(u);
  }
};

inline SelectionTrace run_baseline_greedy(const OnlineTreeInput& in) {
  return run_online(in, std::make_unique<GreedyBaseline>());
}

// Adversary demonstration algorithms.
class AlwaysSelectNew : public OnlineAlgorithm {
 public:
  void on_reveal(const RevealContext& ctx, std::vector<int>& additions) override {
    additions.push_back(ctx.vertex);
  }
};

class NeverSelectNew : public OnlineAlgorithm {
 public:
  void on_reveal(const RevealContext& ctx, std::vector<int>& additions) override {
    const int v = ctx.vertex;
    additions.push_back(v == 0 ? 0 : ctx.parents[v]);
  }
};

inline std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name,
                                                       std::uint64_t seed = 0) {
  if (name == "a") return std::make_unique<ParityAlgorithm>(ParityArm::A);
  if (name == "b") return std::make_unique<ParityAlgorithm>(ParityArm::B);
  if (name == "greedy") return std::make_unique<GreedyBaseline>();
  if (name == "always-new") return std::make_unique<AlwaysSelectNew>();
  if (name == "never-new") return std::make_unique<NeverSelectNew>();
  if (name == "ra-sample") return make_ra_sampled_arm(seed);
  throw std::invalid_argument("unknown algorithm: " + name);
}

// ---------------------------------------------------------------------------
// Final-membership table. Every vertex of a tree with n >= 2 falls into
// exactly one structural case that pins down membership in both arm sets.
// ---------------------------------------------------------------------------

enum class MembershipCase {
  Root,          // v == v0: in both
  HighDegree,    // deg(v) >= 3: in both
  Deg2Even,      // deg(v) == 2, p(v) even: B only
  Deg2Odd,       // deg(v) == 2, p(v) odd: A only
  LeafSlowEven,  // deg(v) == 1, deg(u~) >= 3 but deg_v(u~) <= 2, p even: B only
  LeafSlowOdd,   //   same, p odd: A only
  LeafHub,       // deg(v) == 1, deg_v(u~) >= 3: neither
  LeafLowEven,   // deg(v) == 1, deg(u~) <= 2, p even: B only
  LeafLowOdd     //   same, p odd: A only
};

struct MembershipExpectation {
  MembershipCase c;
  bool in_a;
  bool in_b;
};

inline MembershipExpectation classify_membership(const TreeView& view, int v) {
  if (view.n < 2) throw std::invalid_argument("classify_membership: needs n >= 2");
  if (v == 0) return {MembershipCase::Root, true, true};
  const int d = view.degree[v];
  if (d >= 3) return {MembershipCase::HighDegree, true, true};
  const bool odd = view.depth[v] % 2 == 1;
  if (d == 2) return {odd ? MembershipCase::Deg2Odd : MembershipCase::Deg2Even, odd, !odd};
  // leaf: the unique neighbor is its parent (v != v0)
  const int nb = view.parent[v];
  if (view.degree[nb] >= 3) {
    if (view.degree_at(nb, v) >= 3) return {MembershipCase::LeafHub, false, false};
    return {odd ? MembershipCase::LeafSlowOdd : MembershipCase::LeafSlowEven, odd, !odd};
  }
  return {odd ? MembershipCase::LeafLowOdd : MembershipCase::LeafLowEven, odd, !odd};
}

struct MembershipMismatch {
  int vertex;
  MembershipCase c;
  bool expect_a, expect_b, got_a, got_b;
};

struct MembershipReport {
  std::vector<MembershipExpectation> cases;  // per vertex
  std::vector<MembershipMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Classify every vertex and compare against actual final arm sets.
inline MembershipReport verify_membership_table(const OnlineTreeInput& in) {
  TreeView view(in);
  auto m = run_ra(in);
  MembershipReport rep;
  rep.cases.reserve(in.n());
  for (int v = 0; v < in.n(); ++v) {
    auto e = classify_membership(view, v);
    rep.cases.push_back(e);
    bool ga = m.arm_a.selected[v] != 0, gb = m.arm_b.selected[v] != 0;
    if (ga != e.in_a || gb != e.in_b) rep.mismatches.push_back({v, e.c, e.in_a, e.in_b, ga, gb});
  }
  return rep;
}

// Structural per-vertex expected cost of the mixture: 1, 1, 1/2, 1/2, 0 or
// 1/2 depending on the membership case.
inline Rational expected_cost_per_vertex(const TreeView& view, int v) {
  auto e = classify_membership(view, v);
  return Rational((e.in_a ? 1 : 0) + (e.in_b ? 1 : 0), 2);
}

inline Rational expected_cost_per_vertex(const OnlineTreeInput& in, int v) {
  return expected_cost_per_vertex(TreeView(in), v);
}

}  // namespace ods
