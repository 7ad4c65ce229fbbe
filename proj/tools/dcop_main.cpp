#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcop/bench.hpp"
#include "dcop/consistency.hpp"
#include "dcop/generator.hpp"
#include "dcop/io.hpp"
#include "dcop/result.hpp"

namespace {

struct SweepRange {
  int lo = 0;
  int hi = 0;
};

SweepRange parse_sweep(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--sweep", "expected a..b, got \"" + text + "\"");
  SweepRange r;
  try {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--sweep", "expected a..b, got \"" + text + "\"");
  }
  if (r.lo < 2 || r.hi < r.lo)
    throw CLI::ValidationError("--sweep", "need 2 <= a <= b, got \"" + text + "\"");
  return r;
}

void add_generator_flags(CLI::App* cmd, dcop::GeneratorConfig& cfg) {
  cmd->add_option("--n", cfg.n_vars, "variable count")->capture_default_str();
  cmd->add_option("--domain", cfg.domain_size, "domain size")->capture_default_str();
  cmd->add_option("--density", cfg.graph_density, "edge probability")->capture_default_str();
  cmd->add_option("--hard-ratio", cfg.hard_ratio, "fraction of hard factors")
      ->capture_default_str();
  cmd->add_option("--tightness", cfg.hard_tightness, "allowed-pair probability")
      ->capture_default_str();
  cmd->add_option("--utility-max", cfg.utility_max, "largest soft utility")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
}

// Regenerates from successive attempt seeds until the arc-consistency
// screen passes; mirrors what the bench harness does.
dcop::Instance generate_screened(const dcop::GeneratorConfig& base, std::uint64_t base_seed,
                                 int n, int k, std::uint64_t* seed_out) {
  for (int attempt = 0; attempt <= 1000; ++attempt) {
    dcop::GeneratorConfig cfg = base;
    cfg.n_vars = n;
    cfg.seed = dcop::instance_seed(base_seed, n, k, attempt);
    dcop::Instance inst = dcop::generate(cfg);
    if (!dcop::enforce_arc_consistency(inst).second.infeasible) {
      *seed_out = cfg.seed;
      return inst;
    }
  }
  throw std::runtime_error("no arc-consistent instance after 1000 attempts at n=" +
                           std::to_string(n));
}

int cmd_generate(const dcop::GeneratorConfig& cfg, const std::string& out_path,
                 const std::string& sweep, int instances_per_point) {
  if (sweep.empty()) {
    dcop::Instance inst = dcop::generate(cfg);
    if (out_path.empty()) {
      dcop::serialize_instance(inst, std::cout);
    } else {
      dcop::save_instance(inst, out_path);
      std::cout << "wrote " << out_path << " seed=" << cfg.seed << " n=" << inst.num_vars()
                << " factors=" << inst.num_factors() << '\n';
    }
    return 0;
  }
  SweepRange range = parse_sweep(sweep);
  if (out_path.empty()) throw std::runtime_error("--sweep generation needs --out <directory>");
  std::filesystem::create_directories(out_path);
  for (int n = range.lo; n <= range.hi; ++n)
    for (int k = 0; k < instances_per_point; ++k) {
      std::uint64_t seed = 0;
      dcop::Instance inst = generate_screened(cfg, cfg.seed, n, k, &seed);
      std::string name = dcop::bench_instance_id(n, k) + ".dcop";
      dcop::save_instance(inst, (std::filesystem::path(out_path) / name).string());
      std::cout << name << " seed=" << seed << " n=" << inst.num_vars()
                << " factors=" << inst.num_factors() << '\n';
    }
  return 0;
}

int cmd_solve(const std::string& path, const std::string& alg_name, const std::string& out_path) {
  auto alg = dcop::algorithm_from_name(alg_name);
  if (!alg) throw std::runtime_error("unknown algorithm \"" + alg_name + "\"");
  dcop::Instance inst = dcop::load_instance(path);
  dcop::SolveResult r = dcop::run_algorithm(*alg, inst, 10'000'000);
  std::cout << "algorithm=" << dcop::algorithm_name(r.algorithm)
            << " value=" << dcop::format_utility(r.value)
            << " feasible=" << (r.feasible ? "true" : "false")
            << " vm=" << dcop::format_utility(r.bound.tree_value)
            << " B=" << dcop::format_number(r.bound.removed_weight)
            << " upper_bound=" << dcop::format_utility(r.bound.upper_bound)
            << " wall_ms=" << dcop::format_number(r.wall_ms) << '\n';
  if (!out_path.empty()) {
    std::string id = std::filesystem::path(path).stem().string();
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    dcop::write_results_csv({dcop::make_record(id, 0, inst, r)}, out);
  }
  return r.feasible ? 0 : 2;
}

int cmd_bench(dcop::BenchPlan plan, const std::string& sweep, const std::string& out_path) {
  SweepRange range = parse_sweep(sweep);
  plan.node_counts.resize(range.hi - range.lo + 1);
  std::iota(plan.node_counts.begin(), plan.node_counts.end(), range.lo);
  dcop::BenchOutput out = dcop::run_bench(plan);
  if (out_path.empty()) {
    dcop::write_results_csv(out.rows, std::cout);
    dcop::write_bench_summary(plan, out, std::cerr);
  } else {
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + out_path);
    dcop::write_results_csv(out.rows, csv);
    dcop::write_bench_summary(plan, out, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DCOP solvers: exact max-sum on trees, bounded max-sum, and its"
               " tie-breaking refinement, with a seeded benchmark harness"};
  app.require_subcommand(1);

  dcop::GeneratorConfig gen_cfg;
  std::string gen_out, gen_sweep;
  int gen_ipp = 20;
  CLI::App* gen = app.add_subcommand("generate", "write canonical instance files");
  add_generator_flags(gen, gen_cfg);
  gen->add_option("--out", gen_out, "output file, or directory with --sweep");
  gen->add_option("--sweep", gen_sweep, "node-count range a..b");
  gen->add_option("--instances-per-point", gen_ipp, "instances per node count")
      ->capture_default_str();

  std::string solve_path, solve_alg, solve_out;
  CLI::App* solve = app.add_subcommand("solve", "run one algorithm on one instance");
  solve->add_option("instance", solve_path, "instance file")->required();
  solve->add_option("--alg", solve_alg, "maxsum-tree | bms | hbms | exact")
      ->required()
      ->check(CLI::IsMember({"maxsum-tree", "bms", "hbms", "exact"}));
  solve->add_option("--out", solve_out, "also write a one-row CSV");

  dcop::BenchPlan plan;
  plan.base.domain_size = 10;
  std::string bench_sweep = "5..15", bench_out;
  std::vector<std::string> bench_algs{"bms", "hbms"};
  CLI::App* bench = app.add_subcommand("bench", "paired sweep with CSV and summary");
  bench->add_option("--sweep", bench_sweep, "node-count range a..b")->capture_default_str();
  bench->add_option("--instances-per-point", plan.instances_per_point, "instances per point")
      ->capture_default_str();
  bench->add_option("--domain", plan.base.domain_size, "domain size")->capture_default_str();
  bench->add_option("--density", plan.base.graph_density, "edge probability")
      ->capture_default_str();
  bench->add_option("--hard-ratio", plan.base.hard_ratio, "fraction of hard factors")
      ->capture_default_str();
  bench->add_option("--tightness", plan.base.hard_tightness, "allowed-pair probability")
      ->capture_default_str();
  bench->add_option("--utility-max", plan.base.utility_max, "largest soft utility")
      ->capture_default_str();
  bench->add_option("--seed", plan.base_seed, "base seed")->capture_default_str();
  bench->add_option("--alg", bench_algs, "algorithms to run (repeatable)")
      ->capture_default_str()
      ->check(CLI::IsMember({"maxsum-tree", "bms", "hbms", "exact"}));
  bench->add_option("--out", bench_out, "CSV path (default: CSV to stdout, summary to stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_cfg, gen_out, gen_sweep, gen_ipp);
    if (solve->parsed()) return cmd_solve(solve_path, solve_alg, solve_out);
    plan.algorithms.clear();
    for (const std::string& name : bench_algs)
      plan.algorithms.push_back(*dcop::algorithm_from_name(name));
    return cmd_bench(std::move(plan), bench_sweep, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
