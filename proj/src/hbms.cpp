#include "dcop/hbms.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "dcop/io.hpp"

namespace dcop {

namespace {

// Table positions (in `from` domains) of the values kept per variable.
std::vector<int> positions_of(const DomainSet& from, const std::vector<Value>& keep) {
  std::vector<int> pos;
  pos.reserve(keep.size());
  for (Value v : keep) {
    int p = from.index_of(v);
    assert(p >= 0);
    pos.push_back(p);
  }
  return pos;
}

std::vector<Utility> slice_table(const Factor& f, const std::vector<int>& rows,
                                 const std::vector<int>& cols) {
  std::vector<Utility> out;
  if (f.arity() == 1) {
    out.reserve(rows.size());
    for (int r : rows) out.push_back(f.at(r));
  } else {
    out.reserve(rows.size() * cols.size());
    for (int r : rows)
      for (int c : cols) out.push_back(f.at(r, c));
  }
  return out;
}

// Domains replaced by the given value subsets, every table re-sliced.
Instance restrict_domains(const Instance& inst, const std::vector<std::vector<Value>>& keep) {
  Instance out;
  out.var_names = inst.var_names;
  out.agent_of = inst.agent_of;
  out.domains.resize(inst.num_vars());
  std::vector<std::vector<int>> pos(inst.num_vars());
  for (int v = 0; v < inst.num_vars(); ++v) {
    pos[v] = positions_of(inst.domains[v], keep[v]);
    out.domains[v].values = keep[v];
  }
  out.factors.reserve(inst.num_factors());
  for (const Factor& f : inst.factors) {
    Factor g;
    g.id = f.id;
    g.name = f.name;
    g.kind = f.kind;
    g.scope = f.scope;
    if (f.arity() == 1) {
      g.table = slice_table(f, pos[f.scope[0]], {});
      g.cols = 1;
    } else {
      g.table = slice_table(f, pos[f.scope[0]], pos[f.scope[1]]);
      g.cols = static_cast<int>(pos[f.scope[1]].size());
    }
    out.factors.push_back(std::move(g));
  }
  return out;
}

class PhaseClock {
 public:
  explicit PhaseClock(double* slot)
      : slot_(slot), start_(std::chrono::steady_clock::now()) {}
  ~PhaseClock() {
    auto end = std::chrono::steady_clock::now();
    *slot_ += std::chrono::duration<double, std::milli>(end - start_).count();
  }

 private:
  double* slot_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SubProblem build_tiebreak_subproblem(const Instance& host,
                                     const std::vector<RemovedDependency>& removed,
                                     const std::vector<std::vector<Value>>& tie_sets) {
  SubProblem sub;
  std::vector<int> sub_id(host.num_vars(), -1);
  for (const RemovedDependency& dep : removed)
    for (VariableId v : host.factors[dep.factor].scope)
      if (sub_id[v] < 0) {
        sub_id[v] = static_cast<int>(sub.var_of.size());
        sub.var_of.push_back(v);
      }
  // var_of is ascending over host ids for a canonical sub-instance.
  std::sort(sub.var_of.begin(), sub.var_of.end());
  for (size_t i = 0; i < sub.var_of.size(); ++i) sub_id[sub.var_of[i]] = static_cast<int>(i);

  for (VariableId v : sub.var_of) {
    assert(!tie_sets[v].empty());
    sub.instance.var_names.push_back(host.var_names[v]);
    sub.instance.domains.push_back(DomainSet{tie_sets[v]});
    sub.instance.agent_of.push_back(host.agent_of[v]);
  }
  for (const RemovedDependency& dep : removed) {
    const Factor& f = host.factors[dep.factor];
    Factor g;
    g.id = sub.instance.num_factors();
    g.name = f.name;
    g.kind = f.kind;
    g.scope = {sub_id[f.scope[0]], sub_id[f.scope[1]]};
    auto rows = positions_of(host.domains[f.scope[0]], tie_sets[f.scope[0]]);
    auto cols = positions_of(host.domains[f.scope[1]], tie_sets[f.scope[1]]);
    g.table = slice_table(f, rows, cols);
    g.cols = static_cast<int>(cols.size());
    sub.instance.factors.push_back(std::move(g));
  }
  return sub;
}

PriorityTable compute_priorities(const SubProblem& sub,
                                 const std::vector<std::vector<Score>>& sub_marginals,
                                 int n_vars_total) {
  PriorityTable table(n_vars_total);
  for (size_t s = 0; s < sub.var_of.size(); ++s) {
    const DomainSet& dom = sub.instance.domains[s];
    for (int p = 0; p < dom.size(); ++p)
      table[sub.var_of[s]][dom.values[p]] = sub_marginals[s][p].util;
  }
  return table;
}

std::pair<SolveResult, HbmsTrace> solve_hbms(const Instance& inst) {
  SolveResult r;
  r.algorithm = Algorithm::Hbms;
  HbmsTrace t;
  t.priorities.assign(inst.num_vars(), {});

  Instance pruned;
  {
    PhaseClock clock(&t.phase_ms[0]);
    auto [p, report] = enforce_arc_consistency(inst);
    pruned = std::move(p);
    t.prune = std::move(report);
  }
  if (t.prune.infeasible) return {r, t};

  BmsArtifacts art;
  {
    PhaseClock clock(&t.phase_ms[1]);
    FactorGraph g0 = build_factor_graph(inst);
    t.removed_weight_before =
        build_spanning_structure(inst, g0, edge_impacts(inst, g0)).removed_weight;
    art = run_bms_pipeline(pruned);
    t.removed_weight_after = art.structure.removed_weight;
    t.tie_sets = extract_tie_sets(pruned, art.tree, tie_tolerance_for(pruned));
  }

  if (art.decoded) {
    SubProblem sub;
    {
      PhaseClock clock(&t.phase_ms[2]);
      sub = build_tiebreak_subproblem(pruned, art.structure.removed, t.tie_sets);
      t.sub_vars = sub.instance.num_vars();
      t.sub_factors = sub.instance.num_factors();
      if (t.sub_factors > 0) {
        BmsArtifacts sub_art = run_bms_pipeline(sub.instance);
        t.priorities = compute_priorities(sub, sub_art.tree.marginals, inst.num_vars());
      }
    }
    {
      PhaseClock clock(&t.phase_ms[3]);
      Instance restricted = restrict_domains(art.tree_instance, t.tie_sets);
      TiePreference pref(restricted.num_vars());
      for (int v = 0; v < restricted.num_vars(); ++v) {
        const DomainSet& dom = restricted.domains[v];
        pref[v].assign(dom.size(), 0.0);
        const auto& prio = t.priorities[v];
        for (int p = 0; p < dom.size(); ++p) {
          auto it = prio.find(dom.values[p]);
          if (it == prio.end()) continue;
          pref[v][p] = it->second.is_finite() ? it->second.finite()
                                              : -std::numeric_limits<double>::infinity();
        }
      }
      FactorGraph rg = build_factor_graph(restricted);
      TreeSolve rt = run_tree_maxsum(restricted, rg, &pref);
      if (auto decoded = decode_assignment(restricted, rg, rt)) {
        t.assignment = std::move(decoded);
      } else {
        t.assignment = art.decoded;
        t.phase4_fallback = true;
      }
    }
  }

  r.bound.tree_value = art.tree_value;
  r.bound.removed_weight = art.structure.removed_weight;
  r.bound.upper_bound = art.tree_value + Utility(art.structure.removed_weight);
  if (art.tree_value.is_finite() && art.tree_value.finite() > 0.0)
    r.bound.approximation_ratio = r.bound.upper_bound.finite() / art.tree_value.finite();
  if (t.assignment) {
    r.assignment = t.assignment;
    r.value = evaluate(inst, *t.assignment);
    r.feasible = r.value.is_finite();
  }
  return {r, t};
}

std::string trace_repr(const Instance& inst, const HbmsTrace& t) {
  std::ostringstream out;
  out << "hbms-trace\n";
  out << "prune infeasible=" << (t.prune.infeasible ? 1 : 0) << '\n';
  for (size_t v = 0; v < t.prune.removed.size(); ++v) {
    if (t.prune.removed[v].empty()) continue;
    out << "pruned " << inst.var_names[v];
    for (Value x : t.prune.removed[v]) out << ' ' << x;
    out << '\n';
  }
  out << "B before=" << format_number(t.removed_weight_before)
      << " after=" << format_number(t.removed_weight_after) << '\n';
  for (size_t v = 0; v < t.tie_sets.size(); ++v) {
    out << "ties " << inst.var_names[v];
    for (Value x : t.tie_sets[v]) out << ' ' << x;
    out << '\n';
  }
  out << "sub vars=" << t.sub_vars << " factors=" << t.sub_factors << '\n';
  for (size_t v = 0; v < t.priorities.size(); ++v) {
    if (t.priorities[v].empty()) continue;
    out << "prio " << inst.var_names[v];
    for (const auto& [value, util] : t.priorities[v])
      out << ' ' << value << ':' << format_utility(util);
    out << '\n';
  }
  out << "assignment";
  if (t.assignment)
    for (Value x : *t.assignment) out << ' ' << x;
  else
    out << " none";
  out << '\n';
  out << "fallback=" << (t.phase4_fallback ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace dcop
