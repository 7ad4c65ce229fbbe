#pragma once

#include <optional>
#include <stdexcept>

#include "dcop/model.hpp"

namespace dcop {

struct OracleResult {
  Utility value = Utility::forbidden();  // forbidden iff no feasible assignment
  std::optional<Assignment> assignment;  // lexicographically first optimum
  long long optima_count = 0;
  long long explored = 0;  // complete assignments reached after pruning
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive depth-first search in variable id order, values ascending,
// with hard-constraint forward pruning. Refuses instances whose full
// assignment space exceeds the budget rather than answering approximately.
OracleResult solve_exact(const Instance& inst, long long budget = 10'000'000);

}  // namespace dcop
