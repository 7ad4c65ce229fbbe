#include "dcop/bms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dcop {

double edge_impact(const Factor& f, int variable_slot) {
  if (f.arity() == 1) return 0.0;
  assert(variable_slot == 0 || variable_slot == 1);
  const int n_mine = variable_slot == 0 ? f.rows() : f.cols;
  const int n_other = variable_slot == 0 ? f.cols : f.rows();
  double worst = 0.0;
  for (int o = 0; o < n_other; ++o) {
    Utility lo = Utility::forbidden();
    Utility hi = Utility::forbidden();
    bool any = false;
    for (int t = 0; t < n_mine; ++t) {
      Utility entry = variable_slot == 0 ? f.at(t, o) : f.at(o, t);
      if (entry.is_forbidden()) continue;
      if (!any) {
        lo = hi = entry;
        any = true;
      } else {
        lo = min(lo, entry);
        hi = max(hi, entry);
      }
    }
    if (any) worst = std::max(worst, hi.finite() - lo.finite());
  }
  return worst;
}

std::vector<EdgeWeight> edge_impacts(const Instance& inst, const FactorGraph& g) {
  std::vector<EdgeWeight> out(g.n_edges);
  for (int fi = 0; fi < g.n_factors; ++fi) {
    const Factor& f = inst.factors[fi];
    for (int slot = 0; slot < f.arity(); ++slot)
      out[g.edge_id(fi, slot)] = {fi, f.scope[slot], edge_impact(f, slot)};
  }
  return out;
}

std::vector<Utility> reduce_removed_factor(const Factor& f, int removed_slot) {
  assert(f.arity() == 2);
  const int n_kept = removed_slot == 0 ? f.cols : f.rows();
  const int n_removed = removed_slot == 0 ? f.rows() : f.cols;
  std::vector<Utility> out(n_kept, Utility::forbidden());
  for (int k = 0; k < n_kept; ++k) {
    Utility lo = Utility::forbidden();
    bool any = false;
    for (int r = 0; r < n_removed; ++r) {
      Utility entry = removed_slot == 0 ? f.at(r, k) : f.at(k, r);
      if (entry.is_forbidden()) continue;
      lo = any ? min(lo, entry) : entry;
      any = true;
    }
    if (any) out[k] = lo;
  }
  return out;
}

SpanningStructure build_spanning_structure(const Instance& inst, const FactorGraph& g,
                                           const std::vector<EdgeWeight>& weights) {
  assert(static_cast<int>(weights.size()) == g.n_edges);
  std::vector<int> order(g.n_edges);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a].weight != weights[b].weight) return weights[a].weight > weights[b].weight;
    if (weights[a].factor != weights[b].factor) return weights[a].factor < weights[b].factor;
    return weights[a].variable < weights[b].variable;
  });

  std::vector<int> parent(g.n_nodes());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  SpanningStructure s;
  s.edge_kept.assign(g.n_edges, 0);
  for (int e : order) {
    int a = find(weights[e].variable);
    int b = find(g.factor_node(weights[e].factor));
    if (a != b) {
      parent[a] = b;
      s.edge_kept[e] = 1;
    }
  }
  for (int fi = 0; fi < g.n_factors; ++fi) {
    const Factor& f = inst.factors[fi];
    for (int slot = 0; slot < f.arity(); ++slot) {
      int e = g.edge_id(fi, slot);
      if (s.edge_kept[e]) continue;
      // A factor node's first considered edge always joins two distinct
      // components, so a binary factor sheds at most one edge.
      assert(f.arity() == 2);
      RemovedDependency dep;
      dep.factor = fi;
      dep.removed_variable = f.scope[slot];
      dep.weight = weights[e].weight;
      dep.reduction = reduce_removed_factor(f, slot);
      s.removed_weight += dep.weight;
      s.removed.push_back(std::move(dep));
    }
  }
  return s;
}

Instance reduce_to_tree(const Instance& inst, const SpanningStructure& s) {
  Instance out;
  out.var_names = inst.var_names;
  out.domains = inst.domains;
  out.agent_of = inst.agent_of;
  out.factors = inst.factors;
  for (const RemovedDependency& dep : s.removed) {
    Factor& f = out.factors[dep.factor];
    int removed_slot = f.scope[0] == dep.removed_variable ? 0 : 1;
    f.scope = {f.scope[1 - removed_slot]};
    f.table = dep.reduction;
    f.cols = 1;
  }
  return out;
}

BmsArtifacts run_bms_pipeline(const Instance& inst, const TiePreference* pref) {
  BmsArtifacts art;
  art.graph = build_factor_graph(inst);
  art.weights = edge_impacts(inst, art.graph);
  art.structure = build_spanning_structure(inst, art.graph, art.weights);
  art.tree_instance = reduce_to_tree(inst, art.structure);
  art.tree_graph = build_factor_graph(art.tree_instance);
  assert(art.tree_graph.acyclic);
  art.tree = run_tree_maxsum(art.tree_instance, art.tree_graph, pref);
  art.decoded = decode_assignment(art.tree_instance, art.tree_graph, art.tree);
  if (art.decoded) art.tree_value = evaluate(art.tree_instance, *art.decoded);
  return art;
}

SolveResult finish_result(Algorithm alg, const Instance& original, const BmsArtifacts& art) {
  SolveResult r;
  r.algorithm = alg;
  r.bound.tree_value = art.tree_value;
  r.bound.removed_weight = art.structure.removed_weight;
  r.bound.upper_bound = art.tree_value + Utility(art.structure.removed_weight);
  if (art.decoded) {
    r.assignment = art.decoded;
    r.value = evaluate(original, *art.decoded);
    r.feasible = r.value.is_finite();
  }
  if (art.tree_value.is_finite() && art.tree_value.finite() > 0.0)
    r.bound.approximation_ratio = r.bound.upper_bound.finite() / art.tree_value.finite();
  return r;
}

SolveResult solve_bms(const Instance& inst) {
  return finish_result(Algorithm::Bms, inst, run_bms_pipeline(inst));
}

SolveResult solve_maxsum_tree(const Instance& inst) {
  FactorGraph g = build_factor_graph(inst);
  if (!g.acyclic)
    throw std::invalid_argument("maxsum-tree requires an acyclic instance; use bms or hbms");
  return finish_result(Algorithm::MaxsumTree, inst, run_bms_pipeline(inst));
}

}  // namespace dcop
