#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dcop/bms.hpp"
#include "dcop/model.hpp"

namespace dcop::test {

// Builders for hand-written instances. Factors get ids and names
// automatically; returns the factor id.
Instance new_instance(std::vector<std::vector<Value>> domains);
int add_soft(Instance& inst, int a, int b, const std::vector<std::vector<double>>& rows);
int add_hard(Instance& inst, int a, int b, const std::vector<std::pair<Value, Value>>& allowed);
int add_unary(Instance& inst, int v, const std::vector<double>& table);

struct FlatResult {
  Utility value = Utility::forbidden();
  std::optional<Assignment> assignment;
  long long optima = 0;
};

// Second opinion on the optimum: plain odometer over all complete
// assignments, each valued through evaluate, no pruning or partial sums.
FlatResult flat_enumerate(const Instance& inst);

bool structurally_equal(const Instance& a, const Instance& b);

// Random instance without the generator's row/column repair, so hard
// factors can carry unsupported values and arc consistency has real work.
// Empty rows, disconnected graphs, and infeasible instances are all fair
// game here.
Instance random_unrepaired(std::uint64_t seed, int n, int d, double density, double hard_ratio,
                           double tightness);

// Removed-weight total of a spanning forest built by union-find over a
// randomly shuffled edge order; lower bound check material.
double random_forest_removed_total(const FactorGraph& g, const std::vector<EdgeWeight>& w,
                                   std::uint64_t seed);

// Minimum removable total over all maximal forests, by trying every edge
// subset; only sane for a handful of edges.
double best_forest_removed_total_exhaustive(const FactorGraph& g,
                                            const std::vector<EdgeWeight>& w);

}  // namespace dcop::test
