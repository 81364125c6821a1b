#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ods/offline.hpp"
#include "ods/online.hpp"
#include "ods/rational.hpp"
#include "ods/tree.hpp"

namespace ods {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct ProbEstimate {
  Rational value;     // exact probability, or the point estimate as a rational
  double radius = 0;  // confidence radius (three standard errors); 0 if exact
  bool exact = true;
};

// Per-vertex probability that the algorithm's final set contains the vertex.
class ProbabilityOracle {
 public:
  virtual ~ProbabilityOracle() = default;
  virtual std::vector<ProbEstimate> final_membership(const OnlineTreeInput& in) = 0;
};

class ExactMixtureOracle : public ProbabilityOracle {
 public:
  std::vector<ProbEstimate> final_membership(const OnlineTreeInput& in) override {
    auto p = ra_selection_probability(in);
    std::vector<ProbEstimate> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = {p[i], 0.0, true};
    return out;
  }
};

using AlgorithmFactory = std::function<std::unique_ptr<OnlineAlgorithm>(std::uint64_t seed)>;

class MonteCarloOracle : public ProbabilityOracle {
 public:
  MonteCarloOracle(AlgorithmFactory factory, int trials, std::uint64_t seed)
      : factory_(std::move(factory)), trials_(trials), seed_(seed) {
    if (trials_ <= 0) throw std::invalid_argument("monte carlo oracle: trials must be positive");
  }

  std::vector<ProbEstimate> final_membership(const OnlineTreeInput& in) override {
    std::vector<long long> hits(in.n(), 0);
    for (int t = 0; t < trials_; ++t) {
      auto trace = run_online(in, factory_(splitmix64(seed_ + static_cast<std::uint64_t>(t))));
      for (int v = 0; v < in.n(); ++v) hits[v] += trace.selected[v] ? 1 : 0;
    }
    std::vector<ProbEstimate> out(in.n());
    for (int v = 0; v < in.n(); ++v) {
      double p = static_cast<double>(hits[v]) / trials_;
      out[v].value = Rational(hits[v], trials_);
      out[v].radius = 3.0 * std::sqrt(std::max(p * (1 - p), 1e-12) / trials_);
      out[v].exact = false;
    }
    return out;
  }

 private:
  AlgorithmFactory factory_;
  int trials_;
  std::uint64_t seed_;
};

// Every arrival edge must carry total selection probability at least one.
struct PairProbabilityReport {
  struct Row {
    int parent, child;
    Rational sum;
    double slack_radius;
    bool ok;
  };
  std::vector<Row> rows;
  bool ok = true;
};

inline PairProbabilityReport check_pair_probability(const OnlineTreeInput& in,
                                                    ProbabilityOracle& oracle) {
  auto p = oracle.final_membership(in);
  PairProbabilityReport rep;
  for (int v = 1; v < in.n(); ++v) {
    int u = in.parents[v];
    Rational s = p[u].value + p[v].value;
    double rad = p[u].radius + p[v].radius;
    bool ok = p[u].exact && p[v].exact ? s >= Rational(1) : s.to_double() + rad >= 1.0;
    rep.rows.push_back({u, v, s, rad, ok});
    rep.ok = rep.ok && ok;
  }
  return rep;
}

// Transcript of the path-plus-pendants construction.
struct RandPair {
  int index = 0;       // 1-based pair number
  int case_label = 0;  // 1 or 2
  int first, second;   // v_{2l-1}, v_{2l} as vertex ids
  int low = -1;        // case 2: the endpoint with the smaller probability
  int pendant = -1;    // case 2: the extra vertex id
  int off_pick;
};

struct RandTranscript {
  int m = 0;
  OnlineTreeInput input;
  std::vector<RandPair> pairs;
  std::vector<int> off_witness;  // size m
  std::vector<ProbEstimate> path_probabilities;
};

// Reveal a path of 2m vertices, query the oracle, then for every consecutive
// pair either leave it alone (both probabilities confidently >= 2/3) or hang
// one pendant off the less-selected endpoint. Estimates that straddle the
// threshold take the pendant branch.
inline RandTranscript build_rand_adversary(int m, ProbabilityOracle& oracle) {
  if (m < 1) throw std::invalid_argument("build_rand_adversary: m must be positive");
  RandTranscript tr;
  tr.m = m;
  OnlineTreeInput path;
  path.parents.resize(2 * m);
  for (int i = 0; i < 2 * m; ++i) path.parents[i] = i - 1;
  tr.path_probabilities = oracle.final_membership(path);

  tr.input = path;
  const Rational threshold(2, 3);
  for (int l = 1; l <= m; ++l) {
    RandPair pr;
    pr.index = l;
    pr.first = 2 * l - 2;
    pr.second = 2 * l - 1;
    const auto& pa = tr.path_probabilities[pr.first];
    const auto& pb = tr.path_probabilities[pr.second];
    bool confident_high;
    if (pa.exact && pb.exact) {
      confident_high = pa.value >= threshold && pb.value >= threshold;
    } else {
      confident_high = pa.value.to_double() - pa.radius >= threshold.to_double() &&
                       pb.value.to_double() - pb.radius >= threshold.to_double();
    }
    if (confident_high) {
      pr.case_label = 1;
      pr.off_pick = pr.first;
    } else {
      pr.case_label = 2;
      pr.low = pa.value <= pb.value ? pr.first : pr.second;
      pr.pendant = tr.input.n();
      tr.input.parents.push_back(pr.low);
      pr.off_pick = pr.low;
    }
    tr.pairs.push_back(pr);
  }
  for (const auto& pr : tr.pairs) tr.off_witness.push_back(pr.off_pick);
  return tr;
}

struct RandEvaluation {
  Rational expected_cost;  // exact (two-arm) when exact == true
  bool exact = true;
  double estimate = 0, radius = 0;  // monte carlo mode
  int c_opt = 0;
  Rational ratio;          // expected cost / C_OPT (exact mode)
  double ratio_low = 0;    // monte carlo mode: lower confidence end
  bool off_dominates = false;
  bool opt_at_most_m = false;
};

inline RandEvaluation evaluate_rand_adversary_exact(const RandTranscript& tr) {
  RandEvaluation ev;
  ev.expected_cost = ra_expected_cost(tr.input);
  TreeView view(tr.input);
  auto opt = min_dominating_set_tree(view);
  ev.c_opt = opt.size;
  ev.ratio = ev.expected_cost / Rational(ev.c_opt);
  ev.off_dominates = dominates(view, set_of(view.n, tr.off_witness));
  ev.opt_at_most_m = opt.size <= tr.m;
  return ev;
}

inline RandEvaluation evaluate_rand_adversary_sampled(const RandTranscript& tr,
                                                      const AlgorithmFactory& factory, int trials,
                                                      std::uint64_t seed) {
  RandEvaluation ev;
  ev.exact = false;
  long long total = 0;
  double sq = 0;
  for (int t = 0; t < trials; ++t) {
    auto trace = run_online(tr.input, factory(splitmix64(seed ^ 0x5151515151ull) + t));
    total += trace.cost;
    sq += static_cast<double>(trace.cost) * trace.cost;
  }
  double mean = static_cast<double>(total) / trials;
  double var = std::max(sq / trials - mean * mean, 0.0);
  ev.estimate = mean;
  ev.radius = 3.0 * std::sqrt(var / trials);
  TreeView view(tr.input);
  auto opt = min_dominating_set_tree(view);
  ev.c_opt = opt.size;
  ev.ratio_low = (mean - ev.radius) / ev.c_opt;
  ev.off_dominates = dominates(view, set_of(view.n, tr.off_witness));
  ev.opt_at_most_m = opt.size <= tr.m;
  return ev;
}

}  // namespace ods
