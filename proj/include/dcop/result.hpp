#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dcop/model.hpp"

namespace dcop {

enum class Algorithm { MaxsumTree, Bms, Hbms, Exact };

const char* algorithm_name(Algorithm alg);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// Bound bookkeeping for the approximate solvers: value of the relaxed
// acyclic problem, total weight removed to obtain it, and the resulting
// upper bound on the true optimum.
struct BoundReport {
  Utility tree_value = Utility::forbidden();
  double removed_weight = 0.0;
  Utility upper_bound = Utility::forbidden();
  // upper_bound / value when both are finite and value > 0.
  std::optional<double> approximation_ratio;
};

struct SolveResult {
  Algorithm algorithm = Algorithm::Exact;
  std::optional<Assignment> assignment;  // absent when no feasible decode exists
  Utility value = Utility::forbidden();  // objective on the instance as given
  bool feasible = false;
  BoundReport bound;
  double wall_ms = 0.0;
};

// One CSV row of a benchmark run.
struct ResultRecord {
  std::string instance_id;
  std::uint64_t seed = 0;
  int n_vars = 0;
  int n_factors = 0;
  std::string algorithm;
  Utility value = Utility::forbidden();
  bool feasible = false;
  Utility tree_value = Utility::forbidden();
  double removed_weight = 0.0;
  Utility upper_bound = Utility::forbidden();
  double wall_ms = 0.0;
};

ResultRecord make_record(const std::string& instance_id, std::uint64_t seed,
                         const Instance& inst, const SolveResult& r);

}  // namespace dcop
