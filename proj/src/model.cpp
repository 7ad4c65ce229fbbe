#include "dcop/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dcop {

int DomainSet::index_of(Value v) const {
  auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it == values.end() || *it != v) return -1;
  return static_cast<int>(it - values.begin());
}

Utility evaluate(const Instance& inst, const Assignment& a) {
  assert(static_cast<int>(a.size()) == inst.num_vars());
  Utility total = 0.0;
  for (const Factor& f : inst.factors) {
    if (f.arity() == 1) {
      int i = inst.domains[f.scope[0]].index_of(a[f.scope[0]]);
      assert(i >= 0);
      total += f.at(i);
    } else {
      int i = inst.domains[f.scope[0]].index_of(a[f.scope[0]]);
      int j = inst.domains[f.scope[1]].index_of(a[f.scope[1]]);
      assert(i >= 0 && j >= 0);
      total += f.at(i, j);
    }
    if (total.is_forbidden()) return total;
  }
  return total;
}

bool is_feasible(const Instance& inst, const Assignment& a) {
  return evaluate(inst, a).is_finite();
}

bool instance_is_integral(const Instance& inst) {
  for (const Factor& f : inst.factors)
    for (Utility u : f.table)
      if (u.is_finite() && u.finite() != std::floor(u.finite())) return false;
  return true;
}

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("invalid instance: " + what);
}

}  // namespace

void validate_instance(const Instance& inst) {
  int n = inst.num_vars();
  if (static_cast<int>(inst.domains.size()) != n) fail("domain count != variable count");
  if (static_cast<int>(inst.agent_of.size()) != n) fail("agent count != variable count");
  for (int v = 0; v < n; ++v) {
    const DomainSet& d = inst.domains[v];
    if (d.empty()) fail("empty domain for " + inst.var_names[v]);
    for (size_t i = 1; i < d.values.size(); ++i)
      if (d.values[i - 1] >= d.values[i]) fail("domain not strictly increasing for " + inst.var_names[v]);
  }
  for (int fi = 0; fi < inst.num_factors(); ++fi) {
    const Factor& f = inst.factors[fi];
    if (f.id != fi) fail("factor id out of order: " + f.name);
    if (f.arity() != 1 && f.arity() != 2) fail("factor arity must be 1 or 2: " + f.name);
    for (VariableId v : f.scope)
      if (v < 0 || v >= n) fail("scope variable out of range: " + f.name);
    if (f.arity() == 2 && f.scope[0] == f.scope[1]) fail("repeated scope variable: " + f.name);
    int want_cols = f.arity() == 2 ? inst.domains[f.scope[1]].size() : 1;
    int want_rows = inst.domains[f.scope[0]].size();
    if (f.cols != want_cols || static_cast<int>(f.table.size()) != want_rows * want_cols)
      fail("table shape mismatch: " + f.name);
  }
}

}  // namespace dcop
