// Command-line surface for the online dominating set toolkit: run the online
// algorithms, query exact offline optima, drive the lower-bound adversaries,
// and batch-verify the structural analysis on generated or exhaustive
// instance families.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ods/ods.hpp"

namespace {

int g_exit = 0;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(output_path);
    if (!f) throw std::runtime_error("cannot open " + output_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << "\n";
  }
}

void emit_json(const ods::json& j, const std::string& output_path) {
  emit(j.dump(2), output_path);
}

ods::json set_to_json(const ods::VertexSet& s) {
  ods::json arr = ods::json::array();
  for (int v : ods::set_members(s)) arr.push_back(v + 1);
  return arr;
}

ods::json trace_to_json(const ods::SelectionTrace& t) {
  ods::json j;
  j["cost"] = t.cost;
  j["dominated_every_prefix"] = t.dominated_every_prefix;
  j["selected"] = set_to_json(t.selected);
  auto& ev = j["additions"] = ods::json::array();
  for (const auto& adds : t.additions) {
    ods::json row = ods::json::array();
    for (int v : adds) row.push_back(v + 1);
    ev.push_back(row);
  }
  return j;
}

ods::json check_lemmas_json(const ods::OnlineTreeInput& in, bool all_opt) {
  using ods::Rational;
  ods::json j;
  ods::TreeView view(in);
  auto memb = ods::verify_membership_table(in);
  j["membership_table_ok"] = memb.ok();
  for (const auto& mm : memb.mismatches)
    j["membership_mismatches"].push_back(mm.vertex + 1);

  auto mix = ods::run_ra(in);
  Rational total(0);
  for (int v = 0; v < in.n(); ++v) total += ods::expected_cost_per_vertex(view, v);
  j["per_vertex_cost_sum"] = total.str();
  j["expected_cost"] = mix.expected_cost.str();
  j["per_vertex_costs_consistent"] = total == mix.expected_cost;

  ods::ExactMixtureOracle oracle;
  auto pair = ods::check_pair_probability(in, oracle);
  j["pair_probability_ok"] = pair.ok;

  int copt = ods::min_dominating_set_tree(view).size;
  Rational ratio = mix.expected_cost / Rational(copt);
  j["c_opt"] = copt;
  j["ratio"] = ratio.str();
  j["ratio_at_most_5_2"] = ratio <= Rational(5, 2);

  std::vector<ods::VertexSet> opts;
  if (all_opt && in.n() <= 14) {
    opts = ods::enumerate_optimal_sets(in);
  } else {
    opts.push_back(ods::leaf_free_optimal(view, ods::min_dominating_set_tree(view).witness));
  }
  auto props = ods::check_properties(in, opts);
  for (int p = 1; p <= ods::kNumProperties; ++p) {
    j["properties"]["p" + std::to_string(p)]["exists"] = props.exists[p];
    j["properties"]["p" + std::to_string(p)]["forall"] = props.forall[p];
  }

  bool deg13 = true;
  for (int v = 0; v < view.n; ++v) deg13 = deg13 && (view.degree[v] == 1 || view.degree[v] == 3);
  j["degree13"] = deg13;
  if (deg13 && view.n >= 4) {
    auto asg = ods::block_routine(view);
    auto cls = ods::classify_blocks(view, asg, opts.front());
    auto ids = ods::check_counting_identities(cls, view.n);
    j["blocks"]["counts"] = {{"b1_0", cls.b1_0},   {"b1_1", cls.b1_1},   {"b2", cls.nb2},
                             {"b3", cls.nb3},      {"b4_000", cls.b4_000}, {"b4_100", cls.b4_100},
                             {"b4_010", cls.b4_010}};
    j["blocks"]["forbidden"] = cls.forbidden;
    j["blocks"]["leaf_identity"] = ids.leaf_identity;
    j["blocks"]["b1_bounds_checked"] = ids.bounds_checked;
    j["blocks"]["b1_bounds_ok"] = ids.b1_0_bound && ids.b1_1_bound;
    auto audit = ods::block_cost_audit(view, asg);
    j["blocks"]["cost_bounds_ok"] = audit.all_ok;
  }

  bool all_ok = memb.ok() && total == mix.expected_cost && pair.ok &&
                ratio <= Rational(5, 2);
  j["ok"] = all_ok;
  if (!all_ok) g_exit = 1;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online dominating sets on trees: algorithms, adversaries, verification"};
  app.require_subcommand(1);

  std::string input_path, output_path, format = "json";
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", input_path, "instance JSON file")->required();
    sub->add_option("--output", output_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "json|csv (csv for tabular reports)");
    sub->add_option("--seed", seed, "seed for randomized modes");
  };

  // validate
  auto* c_validate = app.add_subcommand("validate", "check instance invariants");
  add_common(c_validate, true);

  // run
  auto* c_run = app.add_subcommand("run", "run an online algorithm");
  std::string alg = "ra";
  c_run->add_option("--alg", alg, "a|b|ra|ra-sample|greedy|always-new|never-new")->required();
  add_common(c_run, true);

  // opt
  auto* c_opt = app.add_subcommand("opt", "exact offline optimum");
  bool do_enumerate = false;
  c_opt->add_flag("--enumerate", do_enumerate, "list all optimal sets (small n)");
  add_common(c_opt, true);

  // blocks
  auto* c_blocks = app.add_subcommand("blocks", "block partition and classification");
  add_common(c_blocks, true);

  // check-lemmas
  auto* c_lemmas = app.add_subcommand("check-lemmas", "structural checks on one instance");
  bool all_opt = false;
  c_lemmas->add_flag("--all-opt", all_opt, "quantify over all optimal sets (small n)");
  add_common(c_lemmas, true);

  // normalize
  auto* c_norm = app.add_subcommand("normalize", "apply worst-case transformations");
  std::string target = "all";
  c_norm->add_option("--target", target, "p1|p2|p3|p4|p5|p6|all")->required();
  add_common(c_norm, true);

  // adversary-det
  auto* c_det = app.add_subcommand("adversary-det", "deterministic lower-bound adversary");
  std::string det_alg = "a";
  ods::AdversaryParams params;
  c_det->add_option("--alg", det_alg, "a|b|greedy|always-new|never-new|ra-sample")->required();
  c_det->add_option("--max-length", params.max_length, "chain cap, 2 mod 3");
  c_det->add_option("--max-t0", params.max_t0, "t0-set budget per base");
  c_det->add_option("--max-t1", params.max_t1, "base budget");
  add_common(c_det, false);

  // adversary-rand
  auto* c_rand = app.add_subcommand("adversary-rand", "randomized lower-bound adversary");
  std::string rand_alg = "ra";
  int m = 10, trials = 10000;
  c_rand->add_option("--alg", rand_alg, "ra (exact) or ra-sample (monte carlo)");
  c_rand->add_option("--m", m, "number of path pairs")->required();
  c_rand->add_option("--trials", trials, "monte carlo trials");
  add_common(c_rand, false);

  // generate
  auto* c_gen = app.add_subcommand("generate", "emit a generated instance");
  std::string kind = "uniform-attachment", order = "bfs";
  int gen_n = 10;
  c_gen->add_option("--kind", kind, "uniform-attachment|path|star|degree13-tree|caterpillar");
  c_gen->add_option("--n", gen_n, "vertex count")->required();
  c_gen->add_option("--order", order, "bfs|dfs|random-valid");
  add_common(c_gen, false);

  // sweep
  auto* c_sweep = app.add_subcommand("sweep", "exhaustive verification of all small instances");
  int max_n = 8;
  c_sweep->add_option("--max-n", max_n, "largest instance size (<= 12)")->required();
  add_common(c_sweep, false);

  // experiment
  auto* c_exp = app.add_subcommand("experiment", "batch ratio measurements");
  std::string exp_kind = "uniform-attachment", exp_order = "random-valid";
  int exp_n = 50, count = 100, jobs = 0;
  std::vector<std::string> exp_algs;
  c_exp->add_option("--kind", exp_kind, "generator family");
  c_exp->add_option("--n", exp_n, "vertex count per instance");
  c_exp->add_option("--count", count, "number of instances");
  c_exp->add_option("--order", exp_order, "reveal order policy");
  c_exp->add_option("--alg", exp_algs, "algorithms (repeatable)");
  c_exp->add_option("--jobs", jobs, "worker threads");
  add_common(c_exp, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_validate) {
      auto in = ods::load_instance(input_path);
      auto res = ods::validate(in);
      ods::json j;
      j["ok"] = res.ok;
      j["trivial_size"] = res.trivial_size;
      if (res.trivial_size) j["note"] = "single-vertex instance; ratio computations refuse it";
      for (const auto& v : res.violations)
        j["violations"].push_back({{"index", v.index + 1}, {"what", v.what}});
      emit_json(j, output_path);
      return res.ok ? 0 : 1;
    }

    if (*c_run) {
      auto in = ods::load_instance(input_path);
      ods::json j;
      j["alg"] = alg;
      if (alg == "ra") {
        auto mix = ods::run_ra(in);
        j["arm_a"] = trace_to_json(mix.arm_a);
        j["arm_b"] = trace_to_json(mix.arm_b);
        j["expected_cost"] = mix.expected_cost.str();
        j["expected_cost_float"] = mix.expected_cost.to_double();
      } else if (alg == "ra-sample") {
        j["seed"] = seed;
        j["trace"] = trace_to_json(ods::run_ra_sampled(in, seed));
      } else {
        j["trace"] = trace_to_json(ods::run_online(in, ods::make_algorithm(alg, seed)));
      }
      emit_json(j, output_path);
      return 0;
    }

    if (*c_opt) {
      auto in = ods::load_instance(input_path);
      ods::TreeView view(in);
      auto r = ods::min_dominating_set_tree(view);
      ods::json j;
      j["size"] = r.size;
      j["witness"] = set_to_json(r.witness);
      if (do_enumerate) {
        auto all = ods::enumerate_optimal_sets(view);
        for (const auto& s : all) j["all_optimal_sets"].push_back(set_to_json(s));
      }
      emit_json(j, output_path);
      return 0;
    }

    if (*c_blocks) {
      auto in = ods::load_instance(input_path);
      ods::TreeView view(in);
      auto asg = ods::block_routine(view);
      ods::json j;
      for (const auto& blk : asg.blocks) {
        ods::json b = ods::json::array();
        for (int v : blk) b.push_back(v + 1);
        j["blocks"].push_back(b);
      }
      bool deg13 = true;
      for (int v = 0; v < view.n; ++v)
        deg13 = deg13 && (view.degree[v] == 1 || view.degree[v] == 3);
      if (deg13 && view.n >= 2) {
        auto witness =
            ods::leaf_free_optimal(view, ods::min_dominating_set_tree(view).witness);
        auto cls = ods::classify_blocks(view, asg, witness);
        j["counts"] = {{"b1_0", cls.b1_0},     {"b1_1", cls.b1_1},     {"b2", cls.nb2},
                       {"b3", cls.nb3},        {"b4_000", cls.b4_000}, {"b4_100", cls.b4_100},
                       {"b4_010", cls.b4_010}, {"forbidden", cls.forbidden}};
        auto ids = ods::check_counting_identities(cls, view.n);
        j["identities_ok"] = ids.violations.empty();
        if (!ids.violations.empty()) g_exit = 1;
      } else {
        j["note"] = "classification needs all degrees in {1,3}";
      }
      emit_json(j, output_path);
      return g_exit;
    }

    if (*c_lemmas) {
      auto in = ods::load_instance(input_path);
      emit_json(check_lemmas_json(in, all_opt), output_path);
      return g_exit;
    }

    if (*c_norm) {
      auto in = ods::load_instance(input_path);
      ods::json j;
      if (target == "all") {
        auto run = ods::normalize(in);
        j["result"] = ods::instance_to_json(run.result);
        for (const auto& e : run.log)
          j["log"].push_back({{"note", e.note},
                              {"ratio_before", e.ratio_before.str()},
                              {"ratio_after", e.ratio_after.str()}});
      } else {
        try {
          auto res = ods::normalize_step(in, ods::norm_target_from_string(target));
          j["note"] = res.note;
          for (const auto& d : res.derived) j["derived"].push_back(ods::instance_to_json(d));
        } catch (const ods::NormalizeError& e) {
          j["note"] = e.what();
          j["applied"] = false;
        }
      }
      emit_json(j, output_path);
      return 0;
    }

    if (*c_det) {
      auto tr = ods::run_det_adversary(det_alg, params, seed);
      auto verdict = ods::verify_ratio_cases(tr);
      ods::json j;
      j["alg"] = det_alg;
      j["termination_case"] = tr.termination;
      j["on_cost"] = tr.on_cost;
      j["on_cost_accounted"] = tr.on_cost_accounted;
      j["off_cost"] = tr.off_cost;
      j["c_opt"] = verdict.c_opt;
      j["ratio_accounted"] = verdict.ratio_accounted.str();
      j["ratio_accounted_float"] = verdict.ratio_accounted.to_double();
      j["ratio_actual"] = verdict.ratio_actual.str();
      j["verified"] = verdict.ok;
      j["problems"] = verdict.problems;
      j["final_input"] = ods::instance_to_json(tr.input);
      for (const auto& bl : tr.bases) {
        ods::json bj;
        bj["base"] = bl.base + 1;
        for (const auto& t : bl.tsets) {
          ods::json tj;
          tj["rank"] = t.arrival_rank;
          tj["kind"] = ods::tkind_name(t.kind);
          tj["length"] = t.length;
          tj["repartition"] = t.from_repartition;
          bj["tsets"].push_back(tj);
        }
        j["bases"].push_back(bj);
      }
      emit_json(j, output_path);
      return verdict.ok ? 0 : 1;
    }

    if (*c_rand) {
      ods::json j;
      j["m"] = m;
      if (rand_alg == "ra") {
        ods::ExactMixtureOracle oracle;
        auto tr = ods::build_rand_adversary(m, oracle);
        auto ev = ods::evaluate_rand_adversary_exact(tr);
        j["expected_cost"] = ev.expected_cost.str();
        j["c_opt"] = ev.c_opt;
        j["ratio"] = ev.ratio.str();
        j["ratio_float"] = ev.ratio.to_double();
        j["off_dominates"] = ev.off_dominates;
        j["opt_at_most_m"] = ev.opt_at_most_m;
        j["final_input"] = ods::instance_to_json(tr.input);
        for (const auto& p : tr.pairs)
          j["pairs"].push_back({{"pair", p.index},
                                {"case", p.case_label},
                                {"pendant_at", p.low + 1}});
        if (!(ev.off_dominates && ev.opt_at_most_m)) g_exit = 1;
      } else {
        ods::AlgorithmFactory factory = [&](std::uint64_t s) {
          return ods::make_algorithm(rand_alg, s);
        };
        ods::MonteCarloOracle oracle(factory, trials, seed);
        auto tr = ods::build_rand_adversary(m, oracle);
        auto ev = ods::evaluate_rand_adversary_sampled(tr, factory, trials, seed);
        j["alg"] = rand_alg;
        j["trials"] = trials;
        j["estimate"] = ev.estimate;
        j["radius"] = ev.radius;
        j["c_opt"] = ev.c_opt;
        j["ratio_low"] = ev.ratio_low;
        j["off_dominates"] = ev.off_dominates;
        j["final_input"] = ods::instance_to_json(tr.input);
        if (!ev.off_dominates) g_exit = 1;
      }
      emit_json(j, output_path);
      return g_exit;
    }

    if (*c_gen) {
      ods::GeneratorSpec spec;
      spec.kind = ods::gen_kind_from_string(kind);
      spec.n = gen_n;
      spec.seed = seed;
      spec.order = ods::reveal_order_from_string(order);
      emit_json(ods::instance_to_json(ods::generate(spec)), output_path);
      return 0;
    }

    if (*c_sweep) {
      auto rep = ods::exhaustive_small_sweep(max_n);
      ods::json j;
      j["instances"] = rep.instances;
      j["violations"] = rep.violations;
      j["max_ratio"] = rep.max_ratio.str();
      j["first_violations"] = rep.first_violations;
      emit_json(j, output_path);
      return rep.violations == 0 ? 0 : 1;
    }

    if (*c_exp) {
      if (exp_algs.empty()) exp_algs = {"ra"};
      std::vector<ods::GeneratorSpec> specs;
      for (int i = 0; i < count; ++i) {
        ods::GeneratorSpec s;
        s.kind = ods::gen_kind_from_string(exp_kind);
        s.n = exp_n;
        s.seed = seed + static_cast<std::uint64_t>(i);
        s.order = ods::reveal_order_from_string(exp_order);
        specs.push_back(s);
      }
      auto rep = ods::run_experiment(specs, exp_algs, seed, jobs);
      if (format == "csv")
        emit(ods::experiment_csv(rep), output_path);
      else
        emit_json(ods::experiment_json(rep), output_path);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
