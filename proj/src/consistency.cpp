#include "dcop/consistency.hpp"

#include <deque>
#include <stdexcept>

namespace dcop {

namespace {

// Does value position tpos of the target slot still have an allowed
// partner among the other variable's live positions?
bool has_support(const Factor& f, int tslot, int tpos, const std::vector<char>& other_alive) {
  int n_other = static_cast<int>(other_alive.size());
  for (int o = 0; o < n_other; ++o) {
    if (!other_alive[o]) continue;
    Utility entry = tslot == 0 ? f.at(tpos, o) : f.at(o, tpos);
    if (entry.is_finite()) return true;
  }
  return false;
}

// Drops unsupported live positions of the target; true when any dropped.
bool revise_masked(const Factor& f, int tslot, std::vector<char>& target_alive,
                   const std::vector<char>& other_alive) {
  bool changed = false;
  for (size_t t = 0; t < target_alive.size(); ++t) {
    if (!target_alive[t]) continue;
    if (!has_support(f, tslot, static_cast<int>(t), other_alive)) {
      target_alive[t] = 0;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

std::pair<DomainSet, bool> revise(const Instance& inst, int factor_id, VariableId target) {
  const Factor& f = inst.factors[factor_id];
  if (f.kind != FactorKind::Hard)
    throw std::invalid_argument("revise applies to hard factors only: " + f.name);
  if (f.arity() != 2) throw std::invalid_argument("revise needs a binary factor: " + f.name);
  int tslot = f.scope[0] == target ? 0 : f.scope[1] == target ? 1 : -1;
  if (tslot < 0) throw std::invalid_argument("target not in factor scope: " + f.name);

  std::vector<char> target_alive(inst.domains[target].size(), 1);
  std::vector<char> other_alive(inst.domains[f.scope[1 - tslot]].size(), 1);
  bool changed = revise_masked(f, tslot, target_alive, other_alive);
  DomainSet out;
  for (size_t i = 0; i < target_alive.size(); ++i)
    if (target_alive[i]) out.values.push_back(inst.domains[target].values[i]);
  return {std::move(out), changed};
}

std::pair<Instance, PruneReport> enforce_arc_consistency(const Instance& inst) {
  const int n = inst.num_vars();
  const int m = inst.num_factors();
  PruneReport report;
  report.removed.resize(n);

  std::vector<std::vector<char>> alive(n);
  for (int v = 0; v < n; ++v) alive[v].assign(inst.domains[v].size(), 1);

  // Incident hard factors per variable, as (factor, slot of the variable).
  std::vector<std::vector<std::pair<int, int>>> hard_at(n);
  for (int fi = 0; fi < m; ++fi) {
    const Factor& f = inst.factors[fi];
    if (f.kind != FactorKind::Hard || f.arity() != 2) continue;
    hard_at[f.scope[0]].emplace_back(fi, 0);
    hard_at[f.scope[1]].emplace_back(fi, 1);
  }

  std::deque<std::pair<int, int>> work;  // (factor, target slot)
  std::vector<char> queued(static_cast<size_t>(m) * 2, 0);
  auto enqueue = [&](int fi, int tslot) {
    if (queued[static_cast<size_t>(fi) * 2 + tslot]) return;
    queued[static_cast<size_t>(fi) * 2 + tslot] = 1;
    work.emplace_back(fi, tslot);
  };
  for (int fi = 0; fi < m; ++fi) {
    const Factor& f = inst.factors[fi];
    if (f.kind != FactorKind::Hard || f.arity() != 2) continue;
    enqueue(fi, 0);
    enqueue(fi, 1);
  }

  while (!work.empty() && !report.infeasible) {
    auto [fi, tslot] = work.front();
    work.pop_front();
    queued[static_cast<size_t>(fi) * 2 + tslot] = 0;
    const Factor& f = inst.factors[fi];
    int target = f.scope[tslot];
    int other = f.scope[1 - tslot];
    ++report.revisions;
    if (!revise_masked(f, tslot, alive[target], alive[other])) continue;
    bool empty = true;
    for (char c : alive[target])
      if (c) {
        empty = false;
        break;
      }
    if (empty) {
      report.infeasible = true;
      break;
    }
    // The target shrank: the far side of every other hard factor on it
    // may have lost support. The revising factor itself cannot have (a
    // dropped value supported nobody on that factor).
    for (auto [gi, gslot] : hard_at[target])
      if (gi != fi) enqueue(gi, 1 - gslot);
  }

  Instance out;
  out.var_names = inst.var_names;
  out.agent_of = inst.agent_of;
  out.domains.resize(n);
  for (int v = 0; v < n; ++v) {
    for (size_t i = 0; i < alive[v].size(); ++i) {
      Value val = inst.domains[v].values[i];
      if (alive[v][i])
        out.domains[v].values.push_back(val);
      else
        report.removed[v].push_back(val);
    }
  }
  out.factors.reserve(m);
  for (const Factor& f : inst.factors) {
    Factor g;
    g.id = f.id;
    g.name = f.name;
    g.kind = f.kind;
    g.scope = f.scope;
    if (f.arity() == 1) {
      const auto& a = alive[f.scope[0]];
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) g.table.push_back(f.at(static_cast<int>(i)));
      g.cols = 1;
    } else {
      const auto& ra = alive[f.scope[0]];
      const auto& ca = alive[f.scope[1]];
      g.cols = out.domains[f.scope[1]].size();
      for (size_t i = 0; i < ra.size(); ++i) {
        if (!ra[i]) continue;
        for (size_t j = 0; j < ca.size(); ++j)
          if (ca[j]) g.table.push_back(f.at(static_cast<int>(i), static_cast<int>(j)));
      }
    }
    out.factors.push_back(std::move(g));
  }
  return {std::move(out), std::move(report)};
}

}  // namespace dcop
