#include "dcop/maxsum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcop {

void normalize_payload(std::vector<Score>& payload) {
  Utility best = Utility::forbidden();
  for (const Score& s : payload) best = max(best, s.util);
  if (best.is_forbidden() || best == Utility(0.0)) return;
  for (Score& s : payload) s.util = s.util - best.finite();
}

std::vector<Score> combine_payloads(int domain_size,
                                    const std::vector<std::vector<Score>>& incoming) {
  std::vector<Score> out(domain_size);
  for (const auto& msg : incoming) {
    assert(static_cast<int>(msg.size()) == domain_size);
    for (int i = 0; i < domain_size; ++i) out[i] += msg[i];
  }
  normalize_payload(out);
  return out;
}

std::vector<Score> eliminate_through_factor(const Factor& f, int target_slot,
                                            const std::vector<Score>& incoming) {
  if (f.arity() == 1) {
    assert(target_slot == 0);
    std::vector<Score> out(f.table.size());
    for (size_t i = 0; i < f.table.size(); ++i) out[i] = Score{f.table[i], 0.0};
    normalize_payload(out);
    return out;
  }
  const int target_size = target_slot == 0 ? f.rows() : f.cols;
  const int other_size = target_slot == 0 ? f.cols : f.rows();
  assert(static_cast<int>(incoming.size()) == other_size);
  std::vector<Score> out(target_size);
  for (int t = 0; t < target_size; ++t) {
    Score best{Utility::forbidden(), 0.0};
    bool any = false;
    for (int o = 0; o < other_size; ++o) {
      Utility entry = target_slot == 0 ? f.at(t, o) : f.at(o, t);
      Score cand{entry + incoming[o].util, incoming[o].pref};
      if (!any || best < cand) {
        best = cand;
        any = true;
      }
    }
    out[t] = best;
  }
  normalize_payload(out);
  return out;
}

namespace {

std::vector<Score> local_term(const Instance& inst, const TiePreference* pref, int v) {
  std::vector<Score> out(inst.domains[v].size());
  if (pref) {
    assert((*pref)[v].size() == out.size());
    for (size_t i = 0; i < out.size(); ++i) out[i].pref = (*pref)[v][i];
  }
  return out;
}

}  // namespace

TreeSolve run_tree_maxsum(const Instance& inst, const FactorGraph& g, const TiePreference* pref) {
  if (!g.acyclic) throw std::invalid_argument("max-sum schedule requires an acyclic factor graph");
  TreeSolve ts;
  const int n_nodes = g.n_nodes();
  ts.parent.assign(n_nodes, -1);
  ts.order.reserve(n_nodes);
  std::vector<char> seen(n_nodes, 0);
  // ts.order doubles as the BFS queue; component roots are the smallest
  // variable ids. Factor-only components cannot exist.
  for (int root = 0; root < g.n_vars; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    size_t head = ts.order.size();
    ts.order.push_back(root);
    while (head < ts.order.size()) {
      int node = ts.order[head++];
      if (node < g.n_vars) {
        for (auto [f, slot] : g.var_edges[node]) {
          (void)slot;
          int fn = g.factor_node(f);
          if (!seen[fn]) {
            seen[fn] = 1;
            ts.parent[fn] = node;
            ts.order.push_back(fn);
          }
        }
      } else {
        for (VariableId v : inst.factors[node - g.n_vars].scope) {
          if (!seen[v]) {
            seen[v] = 1;
            ts.parent[v] = node;
            ts.order.push_back(v);
          }
        }
      }
    }
  }

  ts.var_to_factor.resize(g.n_edges);
  ts.factor_to_var.resize(g.n_edges);

  auto var_message = [&](int v, int skip_factor) {
    std::vector<Score> out = local_term(inst, pref, v);
    for (auto [f, slot] : g.var_edges[v]) {
      if (f == skip_factor) continue;
      const auto& msg = ts.factor_to_var[g.edge_id(f, slot)];
      for (size_t i = 0; i < out.size(); ++i) out[i] += msg[i];
    }
    normalize_payload(out);
    return out;
  };

  // Upward: children before parents, so every needed child message exists.
  for (auto it = ts.order.rbegin(); it != ts.order.rend(); ++it) {
    int node = *it;
    int par = ts.parent[node];
    if (par < 0) continue;
    if (node < g.n_vars) {
      int f = par - g.n_vars;
      const Factor& fac = inst.factors[f];
      int slot = fac.scope[0] == node ? 0 : 1;
      ts.var_to_factor[g.edge_id(f, slot)] = var_message(node, f);
    } else {
      int f = node - g.n_vars;
      const Factor& fac = inst.factors[f];
      int pslot = fac.scope[0] == par ? 0 : 1;
      const std::vector<Score> none;
      const auto& incoming =
          fac.arity() == 1 ? none : ts.var_to_factor[g.edge_id(f, 1 - pslot)];
      ts.factor_to_var[g.edge_id(f, pslot)] = eliminate_through_factor(fac, pslot, incoming);
    }
  }

  // Downward: parents first, filling the remaining direction of each edge.
  for (int node : ts.order) {
    if (node < g.n_vars) {
      for (auto [f, slot] : g.var_edges[node]) {
        if (ts.parent[g.factor_node(f)] != node) continue;
        ts.var_to_factor[g.edge_id(f, slot)] = var_message(node, f);
      }
    } else {
      int f = node - g.n_vars;
      const Factor& fac = inst.factors[f];
      for (int slot = 0; slot < fac.arity(); ++slot) {
        if (ts.parent[fac.scope[slot]] != node) continue;
        ts.factor_to_var[g.edge_id(f, slot)] =
            eliminate_through_factor(fac, slot, ts.var_to_factor[g.edge_id(f, 1 - slot)]);
      }
    }
  }

  ts.marginals.resize(g.n_vars);
  for (int v = 0; v < g.n_vars; ++v) ts.marginals[v] = var_message(v, -1);
  return ts;
}

double tie_tolerance_for(const Instance& inst) {
  return instance_is_integral(inst) ? 0.0 : 1e-9;
}

std::vector<std::vector<Value>> extract_tie_sets(const Instance& inst, const TreeSolve& solve,
                                                 double tol) {
  std::vector<std::vector<Value>> ties(inst.num_vars());
  for (int v = 0; v < inst.num_vars(); ++v) {
    const auto& z = solve.marginals[v];
    Utility zmax = Utility::forbidden();
    for (const Score& s : z) zmax = max(zmax, s.util);
    if (zmax.is_forbidden()) continue;
    double slack = tol == 0.0 ? 0.0 : tol * std::max(1.0, std::abs(zmax.finite()));
    for (size_t i = 0; i < z.size(); ++i)
      if (z[i].util.is_finite() && z[i].util.finite() >= zmax.finite() - slack)
        ties[v].push_back(inst.domains[v].values[i]);
  }
  return ties;
}

std::optional<Assignment> decode_assignment(const Instance& inst, const FactorGraph& g,
                                            const TreeSolve& solve) {
  Assignment a(g.n_vars, 0);
  std::vector<int> chosen(g.n_vars, -1);
  for (int node : solve.order) {
    if (node >= g.n_vars) continue;
    const int v = node;
    int best = -1;
    Score best_score;
    if (solve.parent[v] < 0) {
      const auto& z = solve.marginals[v];
      for (int i = 0; i < static_cast<int>(z.size()); ++i)
        if (z[i].util.is_finite() && (best < 0 || best_score < z[i])) {
          best = i;
          best_score = z[i];
        }
    } else {
      const int f = solve.parent[v] - g.n_vars;
      const Factor& fac = inst.factors[f];
      const int vslot = fac.scope[0] == v ? 0 : 1;
      const int opos = chosen[fac.scope[1 - vslot]];  // parent var, assigned earlier
      const auto& sub = solve.var_to_factor[g.edge_id(f, vslot)];
      for (int i = 0; i < inst.domains[v].size(); ++i) {
        Utility entry = vslot == 0 ? fac.at(i, opos) : fac.at(opos, i);
        Score cand{entry + sub[i].util, sub[i].pref};
        if (cand.util.is_finite() && (best < 0 || best_score < cand)) {
          best = i;
          best_score = cand;
        }
      }
    }
    if (best < 0) return std::nullopt;
    chosen[v] = best;
    a[v] = inst.domains[v].values[best];
  }
  return a;
}

}  // namespace dcop
