#pragma once

#include <atomic>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ods/analysis.hpp"
#include "ods/generate.hpp"
#include "ods/json_io.hpp"
#include "ods/offline.hpp"
#include "ods/online.hpp"
#include "ods/rational.hpp"

namespace ods {

struct ExperimentRow {
  int id = 0;
  std::string generator;
  int n = 0;
  std::uint64_t seed = 0;
  std::string alg;
  Rational cost;  // exact expected cost (deterministic algs: an integer)
  int c_opt = 0;
  Rational ratio;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  Rational max_ratio{0};
  double mean_ratio = 0;
  std::uint64_t seed = 0;
  std::string version = "1";
};

// Cost of one algorithm on one instance, exact. "ra" is evaluated by running
// both arms, never by sampling.
inline Rational algorithm_cost(const std::string& alg, const OnlineTreeInput& in,
                               std::uint64_t seed) {
  if (alg == "ra") return ra_expected_cost(in);
  if (alg == "ra-sample") return Rational(run_ra_sampled(in, seed).cost);
  if (alg == "a") return Rational(run_algorithm_a(in).cost);
  if (alg == "b") return Rational(run_algorithm_b(in).cost);
  if (alg == "greedy") return Rational(run_baseline_greedy(in).cost);
  return Rational(run_online(in, make_algorithm(alg, seed)).cost);
}

inline ExperimentReport run_experiment(const std::vector<GeneratorSpec>& specs,
                                       const std::vector<std::string>& algs,
                                       std::uint64_t master_seed = 0, int jobs = 0) {
  ExperimentReport rep;
  rep.seed = master_seed;
  struct Item {
    GeneratorSpec spec;
    std::string alg;
  };
  std::vector<Item> items;
  for (const auto& s : specs)
    for (const auto& a : algs) items.push_back({s, a});
  rep.rows.resize(items.size());

  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min(jobs, 8));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      const auto& it = items[i];
      OnlineTreeInput in = generate(it.spec);
      ExperimentRow row;
      row.id = static_cast<int>(i);
      row.generator = gen_kind_name(it.spec.kind);
      row.n = in.n();
      row.seed = it.spec.seed;
      row.alg = it.alg;
      row.cost = algorithm_cost(it.alg, in, it.spec.seed ^ master_seed);
      row.c_opt = min_dominating_set_tree(in).size;
      row.ratio = row.cost / Rational(row.c_opt);
      rep.rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  double sum = 0;
  for (const auto& r : rep.rows) {
    if (rep.max_ratio < r.ratio) rep.max_ratio = r.ratio;
    sum += r.ratio.to_double();
    if (r.alg == "ra" && Rational(5, 2) < r.ratio)
      throw std::logic_error("experiment: mixture ratio above 5/2 on instance " +
                             std::to_string(r.id));
  }
  rep.mean_ratio = rep.rows.empty() ? 0 : sum / static_cast<double>(rep.rows.size());
  return rep;
}

inline std::string experiment_csv(const ExperimentReport& rep) {
  std::ostringstream os;
  os << "id,generator,n,seed,alg,cost,c_opt,ratio,ratio_float\n";
  for (const auto& r : rep.rows) {
    os << r.id << ',' << r.generator << ',' << r.n << ',' << r.seed << ',' << r.alg << ','
       << r.cost.str() << ',' << r.c_opt << ',' << r.ratio.str() << ',' << r.ratio.to_double()
       << "\n";
  }
  return os.str();
}

inline json experiment_json(const ExperimentReport& rep) {
  json j;
  j["seed"] = rep.seed;
  j["version"] = rep.version;
  j["max_ratio"] = rep.max_ratio.str();
  j["mean_ratio"] = rep.mean_ratio;
  auto& rows = j["rows"] = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"id", r.id},
                    {"generator", r.generator},
                    {"n", r.n},
                    {"seed", r.seed},
                    {"alg", r.alg},
                    {"cost", r.cost.str()},
                    {"c_opt", r.c_opt},
                    {"ratio", r.ratio.str()},
                    {"ratio_float", r.ratio.to_double()}});
  }
  return j;
}

// ---------------------------------------------------------------------------
// Exhaustive verification over every parent array up to a size bound.
// ---------------------------------------------------------------------------

struct SweepOptions {
  bool membership_tables = true;   // per-vertex case table and expected costs
  bool domination = true;          // online contract for a, b, greedy
  bool oracle_crosscheck = true;   // DP == brute force
  bool ratio_bound = true;         // E[C_RA]/C_OPT <= 5/2
  bool pair_probability = true;    // p_parent + p_child >= 1 (exact mixture)
};

struct SweepReport {
  long long instances = 0;
  long long violations = 0;
  Rational max_ratio{0};
  std::vector<std::string> first_violations;  // capped detail

  void violate(const std::string& what, const OnlineTreeInput& in) {
    ++violations;
    if (first_violations.size() < 16)
      first_violations.push_back(what + " on " + instance_to_json(in).dump());
  }
};

inline void sweep_check_instance(const OnlineTreeInput& in, const SweepOptions& opt,
                                 SweepReport& rep) {
  ++rep.instances;
  TreeView view(in);
  auto mix = run_ra(in);

  if (opt.domination) {
    if (!mix.arm_a.dominated_every_prefix) rep.violate("arm a broke domination", in);
    if (!mix.arm_b.dominated_every_prefix) rep.violate("arm b broke domination", in);
    if (!run_baseline_greedy(in).dominated_every_prefix)
      rep.violate("greedy broke domination", in);
  }
  if (opt.membership_tables) {
    auto memb = verify_membership_table(in);
    if (!memb.ok()) rep.violate("membership table mismatch", in);
    Rational total(0);
    for (int v = 0; v < in.n(); ++v) {
      auto e = memb.cases[v];
      Rational cost((e.in_a ? 1 : 0) + (e.in_b ? 1 : 0), 2);
      if (cost != expected_cost_per_vertex(view, v))
        rep.violate("per-vertex cost mismatch", in);
      total += cost;
    }
    if (total != Rational(mix.arm_a.cost + mix.arm_b.cost, 2))
      rep.violate("per-vertex costs do not sum to the mixture cost", in);
  }
  int copt = min_dominating_set_tree(view).size;
  if (opt.oracle_crosscheck) {
    if (copt != brute_force_min(view).size) rep.violate("oracle disagreement", in);
  }
  if (opt.ratio_bound) {
    Rational ratio = Rational(mix.arm_a.cost + mix.arm_b.cost, 2) / Rational(copt);
    if (rep.max_ratio < ratio) rep.max_ratio = ratio;
    if (Rational(5, 2) < ratio) rep.violate("mixture ratio above 5/2", in);
  }
  if (opt.pair_probability) {
    for (int v = 1; v < in.n(); ++v) {
      int u = in.parents[v];
      int s = (mix.arm_a.selected[u] + mix.arm_b.selected[u] + mix.arm_a.selected[v] +
               mix.arm_b.selected[v]);
      if (s < 2) rep.violate("arrival-edge probability sum below one", in);
    }
  }
}

inline SweepReport exhaustive_small_sweep(int max_n, SweepOptions opt = {}) {
  if (max_n > 12) throw std::invalid_argument("exhaustive sweep capped at n <= 12");
  SweepReport rep;
  for (int n = 2; n <= max_n; ++n) {
    SweepOptions o = opt;
    o.oracle_crosscheck = opt.oracle_crosscheck && n <= 10;
    for_each_parent_array(n, [&](const OnlineTreeInput& in) { sweep_check_instance(in, o, rep); });
  }
  return rep;
}

}  // namespace ods
