#pragma once

#include <optional>
#include <vector>

#include "dcop/factor_graph.hpp"
#include "dcop/model.hpp"

namespace dcop {

// Message entry with a secondary tie channel. Ordering is lexicographic:
// utility decides, preference only separates exact utility ties. Running
// the engine with all preferences zero reduces to plain max-sum.
struct Score {
  Utility util = 0.0;
  double pref = 0.0;

  friend Score operator+(Score a, Score b) { return {a.util + b.util, a.pref + b.pref}; }
  Score& operator+=(Score b) {
    util += b.util;
    pref += b.pref;
    return *this;
  }
  friend bool operator<(Score a, Score b) {
    if (a.util != b.util) return a.util < b.util;
    return a.pref < b.pref;
  }
  friend bool operator==(Score a, Score b) { return a.util == b.util && a.pref == b.pref; }
};

// Per-variable, per-domain-position additive tie preference.
using TiePreference = std::vector<std::vector<double>>;

// Subtract the maximum finite utility so it becomes 0; an all-forbidden
// payload is left untouched. The preference channel is never rescaled.
void normalize_payload(std::vector<Score>& payload);

// Sum of incoming payloads over a domain of the given size (zeros when
// empty), normalized. This is the variable-side message computation.
std::vector<Score> combine_payloads(int domain_size, const std::vector<std::vector<Score>>& incoming);

// Max-plus elimination of the factor's other variable; `incoming` is that
// variable's message (ignored and may be empty for unary factors).
std::vector<Score> eliminate_through_factor(const Factor& f, int target_slot,
                                            const std::vector<Score>& incoming);

struct TreeSolve {
  std::vector<int> order;   // all nodes, every parent before its children
  std::vector<int> parent;  // node -> parent node, -1 at component roots
  std::vector<std::vector<Score>> var_to_factor;  // by edge id
  std::vector<std::vector<Score>> factor_to_var;  // by edge id
  std::vector<std::vector<Score>> marginals;      // by variable
};

// Exact two-pass schedule over an acyclic (possibly disconnected) graph.
// Throws std::invalid_argument on a cyclic graph.
TreeSolve run_tree_maxsum(const Instance& inst, const FactorGraph& g,
                          const TiePreference* pref = nullptr);

// 0 for all-integer instances (exact equality), else a relative epsilon.
double tie_tolerance_for(const Instance& inst);

// Values attaining the maximum marginal, per variable; empty set when a
// variable's marginal is all-forbidden (infeasible component).
std::vector<std::vector<Value>> extract_tie_sets(const Instance& inst, const TreeSolve& solve,
                                                 double tol);

// Root argmax plus downward consistent argmax along tree edges. Ties fall
// to the preference channel, then to the smallest domain value. Returns
// nothing when a dead end is hit (no feasible tree assignment).
std::optional<Assignment> decode_assignment(const Instance& inst, const FactorGraph& g,
                                            const TreeSolve& solve);

}  // namespace dcop
