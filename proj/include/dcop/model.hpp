#pragma once

#include <string>
#include <vector>

#include "dcop/utility.hpp"

namespace dcop {

using VariableId = int;
using Value = int;

// Finite domain of a variable, kept strictly increasing so that value
// lookups and serialized output are canonical.
struct DomainSet {
  std::vector<Value> values;

  int size() const { return static_cast<int>(values.size()); }
  bool empty() const { return values.empty(); }
  // Position of v in the domain, -1 if absent.
  int index_of(Value v) const;
  bool contains(Value v) const { return index_of(v) >= 0; }
};

enum class FactorKind { Soft, Hard };

// Utility table over one or two variables. Binary factors are what
// instance files carry; unary factors arise internally (dependency
// reductions and restricted re-solves).
struct Factor {
  int id = -1;
  std::string name;
  FactorKind kind = FactorKind::Soft;
  std::vector<VariableId> scope;  // 1 or 2 distinct variables
  std::vector<Utility> table;     // row-major: scope[0] varies slowest
  int cols = 1;                   // row length; 1 for unary factors

  int arity() const { return static_cast<int>(scope.size()); }
  int rows() const { return static_cast<int>(table.size()) / cols; }

  Utility at(int i) const {
    assert(arity() == 1);
    return table[static_cast<size_t>(i)];
  }
  Utility at(int i, int j) const {
    assert(arity() == 2);
    return table[static_cast<size_t>(i) * cols + j];
  }
  Utility& at(int i, int j) {
    assert(arity() == 2);
    return table[static_cast<size_t>(i) * cols + j];
  }
};

struct Instance {
  std::vector<std::string> var_names;
  std::vector<DomainSet> domains;
  std::vector<Factor> factors;
  std::vector<int> agent_of;  // owning agent per variable (metadata only)

  int num_vars() const { return static_cast<int>(var_names.size()); }
  int num_factors() const { return static_cast<int>(factors.size()); }
};

// Total assignment, indexed by variable id, entries are domain values.
using Assignment = std::vector<Value>;

// Sum of all factor tables at the assignment; forbidden as soon as any
// hard factor forbids its pair.
Utility evaluate(const Instance& inst, const Assignment& a);
bool is_feasible(const Instance& inst, const Assignment& a);

// True when every finite table entry is an integer (generated benchmark
// instances are; hand-written real-valued ones need not be).
bool instance_is_integral(const Instance& inst);

// Structural checks: scope ids in range and distinct, table sizes match
// the domain product, domains non-empty and strictly increasing, factor
// ids equal to their position. Throws std::invalid_argument.
void validate_instance(const Instance& inst);

}  // namespace dcop
