#include "dcop/factor_graph.hpp"

#include <numeric>

namespace dcop {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // False when x and y were already connected.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

FactorGraph build_factor_graph(const Instance& inst) {
  FactorGraph g;
  g.n_vars = inst.num_vars();
  g.n_factors = inst.num_factors();
  g.var_edges.resize(g.n_vars);
  g.edge_base.resize(g.n_factors);
  UnionFind uf(g.n_nodes());
  bool cycle = false;
  for (int f = 0; f < g.n_factors; ++f) {
    g.edge_base[f] = g.n_edges;
    const Factor& fac = inst.factors[f];
    for (int slot = 0; slot < fac.arity(); ++slot) {
      g.var_edges[fac.scope[slot]].emplace_back(f, slot);
      if (!uf.unite(fac.scope[slot], g.factor_node(f))) cycle = true;
      ++g.n_edges;
    }
  }
  g.acyclic = !cycle;
  g.n_components = 0;
  for (int node = 0; node < g.n_nodes(); ++node)
    if (uf.find(node) == node) ++g.n_components;
  return g;
}

}  // namespace dcop
