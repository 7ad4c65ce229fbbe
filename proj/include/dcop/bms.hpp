#pragma once

#include <optional>
#include <vector>

#include "dcop/factor_graph.hpp"
#include "dcop/maxsum.hpp"
#include "dcop/model.hpp"
#include "dcop/result.hpp"

namespace dcop {

struct EdgeWeight {
  int factor = -1;
  VariableId variable = -1;
  double weight = 0.0;
};

// Largest spread the factor can contribute through `variable_slot`: the
// max over the other variable's values of (max - min) across this
// variable's finite entries. Forbidden entries never enter the spread; a
// column with no finite entry is skipped (it cannot carry any value).
// Unary factors have impact 0 (a degree-one edge closes no cycle).
double edge_impact(const Factor& f, int variable_slot);

// Impact of every factor-graph edge, indexed by edge id.
std::vector<EdgeWeight> edge_impacts(const Instance& inst, const FactorGraph& g);

struct RemovedDependency {
  int factor = -1;
  VariableId removed_variable = -1;
  double weight = 0.0;
  std::vector<Utility> reduction;  // over the surviving variable's domain
};

struct SpanningStructure {
  std::vector<char> edge_kept;            // by edge id
  std::vector<RemovedDependency> removed;  // ascending factor id
  double removed_weight = 0.0;
};

// Maximum-weight spanning forest over the factor-graph edges (greedy with
// union-find), so the total removed weight is minimal. Ties: smaller
// factor id, then smaller variable id, is kept first. A binary factor can
// lose at most one of its two edges; losing one turns it into the
// pessimistic unary reduction on its surviving variable.
SpanningStructure build_spanning_structure(const Instance& inst, const FactorGraph& g,
                                           const std::vector<EdgeWeight>& weights);

// Min over the removed slot's values, finite entries only; a surviving
// value whose entries are all forbidden stays forbidden.
std::vector<Utility> reduce_removed_factor(const Factor& f, int removed_slot);

// Same factor list, ids and order preserved; factors that lost an edge
// appear as their unary reductions.
Instance reduce_to_tree(const Instance& inst, const SpanningStructure& s);

struct BmsArtifacts {
  FactorGraph graph;
  std::vector<EdgeWeight> weights;
  SpanningStructure structure;
  Instance tree_instance;
  FactorGraph tree_graph;
  TreeSolve tree;
  std::optional<Assignment> decoded;
  Utility tree_value = Utility::forbidden();
};

BmsArtifacts run_bms_pipeline(const Instance& inst, const TiePreference* pref = nullptr);

// Assemble a SolveResult from pipeline artifacts: the decoded assignment
// is valued on `original`, the bound on the reduced tree.
SolveResult finish_result(Algorithm alg, const Instance& original, const BmsArtifacts& art);

SolveResult solve_bms(const Instance& inst);

// Plain exact max-sum for instances that are already acyclic; throws
// std::invalid_argument on a cyclic graph.
SolveResult solve_maxsum_tree(const Instance& inst);

}  // namespace dcop
