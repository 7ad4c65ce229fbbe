#include "dcop/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace dcop {

OracleResult solve_exact(const Instance& inst, long long budget) {
  const int n = inst.num_vars();
  long long space = 1;
  for (const DomainSet& d : inst.domains) {
    space *= d.size();
    if (space > budget)
      throw BudgetExceeded("assignment space exceeds budget of " + std::to_string(budget));
  }

  // Factors become checkable once their highest-id scope variable is set.
  std::vector<std::vector<const Factor*>> checks_at(n);
  for (const Factor& f : inst.factors) {
    int last = f.scope[0];
    for (VariableId v : f.scope) last = std::max(last, v);
    checks_at[last].push_back(&f);
  }

  OracleResult res;
  std::vector<int> pos(n, 0);
  Assignment current(n, 0);

  auto descend = [&](auto&& self, int v, Utility acc) -> void {
    if (v == n) {
      ++res.explored;
      if (acc > res.value) {
        res.value = acc;
        res.assignment = current;
        res.optima_count = 1;
      } else if (acc == res.value && acc.is_finite()) {
        ++res.optima_count;
      }
      return;
    }
    for (int i = 0; i < inst.domains[v].size(); ++i) {
      pos[v] = i;
      current[v] = inst.domains[v].values[i];
      Utility next = acc;
      for (const Factor* f : checks_at[v]) {
        if (f->arity() == 1)
          next += f->at(pos[f->scope[0]]);
        else
          next += f->at(pos[f->scope[0]], pos[f->scope[1]]);
        if (next.is_forbidden()) break;
      }
      if (next.is_forbidden()) continue;
      self(self, v + 1, next);
    }
  };
  descend(descend, 0, Utility(0.0));

  if (res.value.is_forbidden()) {
    res.assignment.reset();
    res.optima_count = 0;
  }
  return res;
}

}  // namespace dcop
