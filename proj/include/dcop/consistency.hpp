#pragma once

#include <utility>
#include <vector>

#include "dcop/model.hpp"

namespace dcop {

struct PruneReport {
  std::vector<std::vector<Value>> removed;  // per variable, ascending
  bool infeasible = false;                  // some domain emptied
  long revisions = 0;

  bool any_removed() const {
    for (const auto& r : removed)
      if (!r.empty()) return true;
    return false;
  }
};

// Single support check of one hard binary factor against one of its scope
// variables: returns the target's domain with unsupported values removed.
// Throws std::invalid_argument on a soft factor or a foreign target.
std::pair<DomainSet, bool> revise(const Instance& inst, int factor_id, VariableId target);

// AC-3 to fixpoint over the hard factors: FIFO worklist seeded in factor
// id order, neighbors re-enqueued on every domain change. The returned
// instance has pruned domains and re-sliced factor tables; when a domain
// empties the report says infeasible and the instance is the partially
// pruned one (not valid for solving).
std::pair<Instance, PruneReport> enforce_arc_consistency(const Instance& inst);

}  // namespace dcop
