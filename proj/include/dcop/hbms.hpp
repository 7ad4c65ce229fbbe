#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcop/bms.hpp"
#include "dcop/consistency.hpp"

namespace dcop {

// Per variable: tie value -> marginal it earned in the phase-3 sub-solve,
// comparable within a variable up to a common shift. Forbidden marks a tie
// value that no feasible sub-assignment uses. Variables outside the
// sub-problem keep an empty map.
using PriorityTable = std::vector<std::map<Value, Utility>>;

struct SubProblem {
  Instance instance;
  std::vector<VariableId> var_of;  // sub variable -> variable id in the host
};

// The smaller problem spanned by the factors that lost a dependency:
// their scope variables with domains cut down to the tie sets, tables
// re-sliced to match. Tie sets must be non-empty for the involved
// variables. A hard factor left with no allowed pair is kept; it drives
// the offending priorities to forbidden rather than failing.
SubProblem build_tiebreak_subproblem(const Instance& host,
                                     const std::vector<RemovedDependency>& removed,
                                     const std::vector<std::vector<Value>>& tie_sets);

PriorityTable compute_priorities(const SubProblem& sub,
                                 const std::vector<std::vector<Score>>& sub_marginals,
                                 int n_vars_total);

struct HbmsTrace {
  PruneReport prune;
  double removed_weight_before = 0.0;  // spanning removal total, unpruned
  double removed_weight_after = 0.0;
  std::vector<std::vector<Value>> tie_sets;
  int sub_vars = 0;
  int sub_factors = 0;
  PriorityTable priorities;
  std::optional<Assignment> assignment;
  bool phase4_fallback = false;
  double phase_ms[4] = {0.0, 0.0, 0.0, 0.0};
};

// Canonical text form of the trace; wall times are deliberately excluded
// so equal inputs give equal bytes.
std::string trace_repr(const Instance& inst, const HbmsTrace& t);

std::pair<SolveResult, HbmsTrace> solve_hbms(const Instance& inst);

}  // namespace dcop
