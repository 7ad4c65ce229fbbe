#include "dcop/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "dcop/rng.hpp"

namespace dcop {

void validate_config(const GeneratorConfig& cfg) {
  if (cfg.n_vars < 2) throw std::invalid_argument("n_vars must be at least 2");
  if (cfg.domain_size < 1) throw std::invalid_argument("domain_size must be at least 1");
  if (!(cfg.graph_density > 0.0 && cfg.graph_density <= 1.0))
    throw std::invalid_argument("graph_density must be in (0, 1]");
  if (!(cfg.hard_ratio >= 0.0 && cfg.hard_ratio <= 1.0))
    throw std::invalid_argument("hard_ratio must be in [0, 1]");
  if (!(cfg.hard_tightness >= 0.0 && cfg.hard_tightness <= 1.0))
    throw std::invalid_argument("hard_tightness must be in [0, 1]");
  if (cfg.utility_max < 0) throw std::invalid_argument("utility_max must be nonnegative");
}

namespace {

// Fixed stream ids; the per-factor table streams start after these.
enum : std::uint64_t { kEdgeStream = 0, kTreeStream = 1, kHardPickStream = 2, kTableStreamBase = 3 };

}  // namespace

Instance generate(const GeneratorConfig& cfg) {
  validate_config(cfg);
  const int n = cfg.n_vars;
  const int d = cfg.domain_size;

  std::vector<std::pair<int, int>> edges;
  {
    SplitStream rng(cfg.seed, kEdgeStream);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(cfg.graph_density)) edges.emplace_back(i, j);
  }
  {
    // Random-parent spanning tree forces connectivity. Each v contributes
    // a distinct second endpoint, so the additions cannot collide.
    SplitStream rng(cfg.seed, kTreeStream);
    const auto sampled_end = static_cast<std::ptrdiff_t>(edges.size());
    for (int v = 1; v < n; ++v) {
      int p = rng.bounded_int(v);
      if (!std::binary_search(edges.begin(), edges.begin() + sampled_end, std::make_pair(p, v)))
        edges.emplace_back(p, v);
    }
    std::sort(edges.begin(), edges.end());
  }

  const int m = static_cast<int>(edges.size());
  const int n_hard = static_cast<int>(std::llround(cfg.hard_ratio * m));
  std::vector<char> is_hard(m, 0);
  {
    SplitStream rng(cfg.seed, kHardPickStream);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < n_hard; ++k) {
      int pick = k + rng.bounded_int(m - k);
      std::swap(order[k], order[pick]);
      is_hard[order[k]] = 1;
    }
  }

  Instance inst;
  inst.var_names.reserve(n);
  for (int v = 0; v < n; ++v) inst.var_names.push_back("x" + std::to_string(v));
  DomainSet dom;
  dom.values.resize(d);
  std::iota(dom.values.begin(), dom.values.end(), 0);
  inst.domains.assign(n, dom);
  inst.agent_of.resize(n);
  std::iota(inst.agent_of.begin(), inst.agent_of.end(), 0);

  for (int fi = 0; fi < m; ++fi) {
    SplitStream rng(cfg.seed, kTableStreamBase + static_cast<std::uint64_t>(fi));
    Factor f;
    f.id = fi;
    f.name = "f" + std::to_string(fi);
    f.scope = {edges[fi].first, edges[fi].second};
    f.cols = d;
    f.table.reserve(static_cast<size_t>(d) * d);
    if (!is_hard[fi]) {
      f.kind = FactorKind::Soft;
      for (int c = 0; c < d * d; ++c)
        f.table.push_back(Utility(static_cast<double>(rng.bounded(cfg.utility_max + 1ull))));
    } else {
      f.kind = FactorKind::Hard;
      for (int c = 0; c < d * d; ++c)
        f.table.push_back(rng.chance(cfg.hard_tightness) ? Utility(0.0) : Utility::forbidden());
      // Repair: give every row, then every column, at least one allowed
      // pair. Column repair only adds entries, so rows stay covered.
      for (int i = 0; i < d; ++i) {
        bool any = false;
        for (int j = 0; j < d && !any; ++j) any = f.at(i, j).is_finite();
        if (!any) f.at(i, rng.bounded_int(d)) = Utility(0.0);
      }
      for (int j = 0; j < d; ++j) {
        bool any = false;
        for (int i = 0; i < d && !any; ++i) any = f.at(i, j).is_finite();
        if (!any) f.at(rng.bounded_int(d), j) = Utility(0.0);
      }
    }
    inst.factors.push_back(std::move(f));
  }
  return inst;
}

}  // namespace dcop
