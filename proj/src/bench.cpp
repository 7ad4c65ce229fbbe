#include "dcop/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "dcop/bms.hpp"
#include "dcop/consistency.hpp"
#include "dcop/hbms.hpp"
#include "dcop/io.hpp"
#include "dcop/oracle.hpp"
#include "dcop/rng.hpp"

namespace dcop {

std::uint64_t instance_seed(std::uint64_t base_seed, int n, int k, int attempt) {
  std::uint64_t stream = (static_cast<std::uint64_t>(n) << 32) |
                         (static_cast<std::uint64_t>(k) << 16) |
                         static_cast<std::uint64_t>(attempt);
  return SplitStream(base_seed, stream).next();
}

std::string bench_instance_id(int n, int k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "n%02d_k%03d", n, k);
  return buf;
}

SolveResult run_algorithm(Algorithm alg, const Instance& inst, long long oracle_budget) {
  auto t0 = std::chrono::steady_clock::now();
  SolveResult r;
  switch (alg) {
    case Algorithm::MaxsumTree:
      r = solve_maxsum_tree(inst);
      break;
    case Algorithm::Bms:
      r = solve_bms(inst);
      break;
    case Algorithm::Hbms:
      r = solve_hbms(inst).first;
      break;
    case Algorithm::Exact: {
      OracleResult o = solve_exact(inst, oracle_budget);
      r.algorithm = Algorithm::Exact;
      r.assignment = o.assignment;
      r.value = o.value;
      r.feasible = o.value.is_finite();
      r.bound.tree_value = o.value;
      r.bound.removed_weight = 0.0;
      r.bound.upper_bound = o.value;
      if (r.feasible && o.value.finite() > 0.0) r.bound.approximation_ratio = 1.0;
      break;
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

namespace {

ImprovementStats summarize(std::vector<double> xs) {
  ImprovementStats s;
  s.pairs = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  double total = 0.0;
  for (double x : xs) total += x;
  s.mean = total / s.pairs;
  std::sort(xs.begin(), xs.end());
  s.min = xs.front();
  s.max = xs.back();
  s.median = s.pairs % 2 ? xs[s.pairs / 2] : (xs[s.pairs / 2 - 1] + xs[s.pairs / 2]) / 2.0;
  return s;
}

}  // namespace

BenchOutput run_bench(const BenchPlan& plan) {
  if (plan.node_counts.empty()) throw std::invalid_argument("bench plan has no node counts");
  if (plan.instances_per_point < 1)
    throw std::invalid_argument("instances per point must be at least 1");
  if (plan.algorithms.empty()) throw std::invalid_argument("bench plan has no algorithms");

  const bool want_exact = std::count(plan.algorithms.begin(), plan.algorithms.end(),
                                     Algorithm::Exact) > 0;
  const bool paired = std::count(plan.algorithms.begin(), plan.algorithms.end(),
                                 Algorithm::Bms) > 0 &&
                      std::count(plan.algorithms.begin(), plan.algorithms.end(),
                                 Algorithm::Hbms) > 0;

  BenchOutput out;
  for (int n : plan.node_counts) {
    BenchPointSummary point;
    point.n = n;
    std::vector<double> point_improvements;
    for (int k = 0; k < plan.instances_per_point; ++k) {
      Instance inst;
      std::uint64_t seed = 0;
      for (int attempt = 0;; ++attempt) {
        if (attempt > 1000)
          throw std::runtime_error("no feasible instance after 1000 attempts at n=" +
                                   std::to_string(n));
        seed = instance_seed(plan.base_seed, n, k, attempt);
        GeneratorConfig cfg = plan.base;
        cfg.n_vars = n;
        cfg.seed = seed;
        inst = generate(cfg);
        if (enforce_arc_consistency(inst).second.infeasible) {
          ++point.regenerated;
          continue;
        }
        if (want_exact && solve_exact(inst, plan.oracle_budget).value.is_forbidden()) {
          ++point.regenerated;
          continue;
        }
        break;
      }
      ++point.kept;
      const std::string id = bench_instance_id(n, k);
      Utility bms_value = Utility::forbidden();
      Utility hbms_value = Utility::forbidden();
      bool bms_ok = false, hbms_ok = false;
      for (Algorithm alg : plan.algorithms) {
        SolveResult r = run_algorithm(alg, inst, plan.oracle_budget);
        if (alg == Algorithm::Bms) {
          bms_ok = r.feasible;
          bms_value = r.value;
        } else if (alg == Algorithm::Hbms) {
          hbms_ok = r.feasible;
          hbms_value = r.value;
        }
        if (!r.feasible) ++point.infeasible[algorithm_name(alg)];
        ResultRecord rec = make_record(id, seed, inst, r);
        rec.wall_ms = 0.0;
        out.rows.push_back(std::move(rec));
      }
      if (paired && bms_ok && hbms_ok && bms_value.finite() > 0.0)
        point_improvements.push_back((hbms_value.finite() - bms_value.finite()) /
                                     bms_value.finite() * 100.0);
    }
    if (paired) point.improvement = summarize(point_improvements);
    out.improvements.insert(out.improvements.end(), point_improvements.begin(),
                            point_improvements.end());
    out.points.push_back(std::move(point));
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const ResultRecord& a, const ResultRecord& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.algorithm < b.algorithm;
  });
  if (paired) out.overall = summarize(out.improvements);
  return out;
}

void write_bench_summary(const BenchPlan& plan, const BenchOutput& out, std::ostream& os) {
  os << "bench base-seed=" << plan.base_seed
     << " instances-per-point=" << plan.instances_per_point << '\n';
  for (const BenchPointSummary& p : out.points) {
    os << "n=" << p.n << " kept=" << p.kept << " regenerated=" << p.regenerated;
    for (const auto& [alg, count] : p.infeasible) os << ' ' << alg << "-infeasible=" << count;
    if (p.improvement) {
      const ImprovementStats& s = *p.improvement;
      os << " pairs=" << s.pairs;
      if (s.pairs > 0)
        os << " improvement% mean=" << format_number(s.mean)
           << " median=" << format_number(s.median) << " min=" << format_number(s.min)
           << " max=" << format_number(s.max);
    }
    os << '\n';
  }
  if (out.overall) {
    const ImprovementStats& s = *out.overall;
    os << "overall pairs=" << s.pairs;
    if (s.pairs > 0)
      os << " improvement% mean=" << format_number(s.mean)
         << " median=" << format_number(s.median) << " min=" << format_number(s.min)
         << " max=" << format_number(s.max);
    os << '\n';
    os << "improvement-distribution";
    std::vector<double> sorted = out.improvements;
    std::sort(sorted.begin(), sorted.end());
    for (double x : sorted) os << ' ' << format_number(x);
    os << '\n';
  }
}

}  // namespace dcop
