#pragma once

#include <utility>
#include <vector>

#include "dcop/model.hpp"

namespace dcop {

// Bipartite view of an instance. Node ids: variables are 0..n-1, factor
// nodes are n..n+m-1. Edges are (factor, slot) with slot indexing the
// factor's scope; ids are edge_base[factor] + slot.
struct FactorGraph {
  int n_vars = 0;
  int n_factors = 0;
  int n_edges = 0;
  std::vector<std::vector<std::pair<int, int>>> var_edges;  // var -> (factor, slot)
  std::vector<int> edge_base;                               // factor -> first edge id
  bool acyclic = false;
  int n_components = 0;

  int n_nodes() const { return n_vars + n_factors; }
  int factor_node(int f) const { return n_vars + f; }
  int edge_id(int f, int slot) const { return edge_base[f] + slot; }
};

FactorGraph build_factor_graph(const Instance& inst);

}  // namespace dcop
