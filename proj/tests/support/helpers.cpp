#include "support/helpers.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "dcop/rng.hpp"

namespace dcop::test {

Instance new_instance(std::vector<std::vector<Value>> domains) {
  Instance inst;
  for (size_t v = 0; v < domains.size(); ++v) {
    inst.var_names.push_back("x" + std::to_string(v));
    inst.domains.push_back(DomainSet{std::move(domains[v])});
    inst.agent_of.push_back(static_cast<int>(v));
  }
  return inst;
}

namespace {

Factor& new_factor(Instance& inst, FactorKind kind, std::vector<VariableId> scope) {
  Factor f;
  f.id = inst.num_factors();
  f.name = "f" + std::to_string(f.id);
  f.kind = kind;
  f.scope = std::move(scope);
  inst.factors.push_back(std::move(f));
  return inst.factors.back();
}

}  // namespace

int add_soft(Instance& inst, int a, int b, const std::vector<std::vector<double>>& rows) {
  Factor& f = new_factor(inst, FactorKind::Soft, {a, b});
  f.cols = inst.domains[b].size();
  assert(static_cast<int>(rows.size()) == inst.domains[a].size());
  for (const auto& row : rows) {
    assert(static_cast<int>(row.size()) == f.cols);
    for (double x : row) f.table.push_back(Utility(x));
  }
  return f.id;
}

int add_hard(Instance& inst, int a, int b, const std::vector<std::pair<Value, Value>>& allowed) {
  Factor& f = new_factor(inst, FactorKind::Hard, {a, b});
  f.cols = inst.domains[b].size();
  f.table.assign(static_cast<size_t>(inst.domains[a].size()) * f.cols, Utility::forbidden());
  for (auto [va, vb] : allowed) {
    int i = inst.domains[a].index_of(va);
    int j = inst.domains[b].index_of(vb);
    assert(i >= 0 && j >= 0);
    f.at(i, j) = Utility(0.0);
  }
  return f.id;
}

int add_unary(Instance& inst, int v, const std::vector<double>& table) {
  Factor& f = new_factor(inst, FactorKind::Soft, {v});
  f.cols = 1;
  assert(static_cast<int>(table.size()) == inst.domains[v].size());
  for (double x : table) f.table.push_back(Utility(x));
  return f.id;
}

FlatResult flat_enumerate(const Instance& inst) {
  const int n = inst.num_vars();
  FlatResult res;
  std::vector<int> pos(n, 0);
  Assignment a(n);
  for (;;) {
    for (int v = 0; v < n; ++v) a[v] = inst.domains[v].values[pos[v]];
    Utility u = evaluate(inst, a);
    if (u.is_finite()) {
      if (!res.assignment || u > res.value) {
        res.value = u;
        res.assignment = a;
        res.optima = 1;
      } else if (u == res.value) {
        ++res.optima;
      }
    }
    int v = n - 1;
    while (v >= 0 && pos[v] + 1 == inst.domains[v].size()) pos[v--] = 0;
    if (v < 0) break;
    ++pos[v];
  }
  return res;
}

bool structurally_equal(const Instance& a, const Instance& b) {
  if (a.var_names != b.var_names || a.agent_of != b.agent_of) return false;
  if (a.num_vars() != b.num_vars() || a.num_factors() != b.num_factors()) return false;
  for (int v = 0; v < a.num_vars(); ++v)
    if (a.domains[v].values != b.domains[v].values) return false;
  for (int fi = 0; fi < a.num_factors(); ++fi) {
    const Factor& fa = a.factors[fi];
    const Factor& fb = b.factors[fi];
    if (fa.id != fb.id || fa.name != fb.name || fa.kind != fb.kind || fa.scope != fb.scope ||
        fa.cols != fb.cols || fa.table.size() != fb.table.size())
      return false;
    for (size_t c = 0; c < fa.table.size(); ++c)
      if (fa.table[c].raw() != fb.table[c].raw()) return false;
  }
  return true;
}

Instance random_unrepaired(std::uint64_t seed, int n, int d, double density, double hard_ratio,
                           double tightness) {
  std::vector<std::vector<Value>> domains(n);
  for (auto& dom : domains) {
    dom.resize(d);
    std::iota(dom.begin(), dom.end(), 0);
  }
  Instance inst = new_instance(std::move(domains));
  SplitStream edges(seed, 0);
  SplitStream kinds(seed, 1);
  SplitStream tables(seed, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!edges.chance(density)) continue;
      if (kinds.chance(hard_ratio)) {
        std::vector<std::pair<Value, Value>> allowed;
        for (Value a = 0; a < d; ++a)
          for (Value b = 0; b < d; ++b)
            if (tables.chance(tightness)) allowed.emplace_back(a, b);
        if (allowed.empty()) allowed.emplace_back(0, 0);
        add_hard(inst, i, j, allowed);
      } else {
        std::vector<std::vector<double>> rows(d, std::vector<double>(d));
        for (auto& row : rows)
          for (double& x : row) x = static_cast<double>(tables.bounded(101));
        add_soft(inst, i, j, rows);
      }
    }
  if (inst.factors.empty() && n >= 2) {
    std::vector<std::vector<double>> rows(d, std::vector<double>(d));
    for (auto& row : rows)
      for (double& x : row) x = static_cast<double>(tables.bounded(101));
    add_soft(inst, 0, 1, rows);
  }
  return inst;
}

namespace {

struct Forest {
  std::vector<int> parent;
  explicit Forest(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

double random_forest_removed_total(const FactorGraph& g, const std::vector<EdgeWeight>& w,
                                   std::uint64_t seed) {
  std::vector<int> order(g.n_edges);
  std::iota(order.begin(), order.end(), 0);
  SplitStream rng(seed, 0);
  for (int i = g.n_edges - 1; i > 0; --i)
    std::swap(order[i], order[rng.bounded_int(i + 1)]);
  Forest uf(g.n_nodes());
  double removed = 0.0;
  for (int e : order)
    if (!uf.unite(w[e].variable, g.factor_node(w[e].factor))) removed += w[e].weight;
  return removed;
}

double best_forest_removed_total_exhaustive(const FactorGraph& g,
                                            const std::vector<EdgeWeight>& w) {
  assert(g.n_edges <= 20);
  // A maximal forest keeps (nodes - components) edges; find the kept set
  // of that size with the largest total weight.
  Forest full(g.n_nodes());
  for (int e = 0; e < g.n_edges; ++e) full.unite(w[e].variable, g.factor_node(w[e].factor));
  int components = 0;
  for (int node = 0; node < g.n_nodes(); ++node)
    if (full.find(node) == node) ++components;
  const int want = g.n_nodes() - components;

  double total = 0.0;
  for (int e = 0; e < g.n_edges; ++e) total += w[e].weight;
  double best_kept = -1.0;
  for (unsigned mask = 0; mask < (1u << g.n_edges); ++mask) {
    if (__builtin_popcount(mask) != want) continue;
    Forest uf(g.n_nodes());
    double kept = 0.0;
    bool ok = true;
    for (int e = 0; e < g.n_edges && ok; ++e) {
      if (!(mask & (1u << e))) continue;
      ok = uf.unite(w[e].variable, g.factor_node(w[e].factor));
      kept += w[e].weight;
    }
    if (ok) best_kept = std::max(best_kept, kept);
  }
  assert(best_kept >= 0.0);
  return total - best_kept;
}

}  // namespace dcop::test
