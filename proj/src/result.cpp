#include "dcop/result.hpp"

namespace dcop {

const char* algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::MaxsumTree: return "maxsum-tree";
    case Algorithm::Bms: return "bms";
    case Algorithm::Hbms: return "hbms";
    case Algorithm::Exact: return "exact";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  if (name == "maxsum-tree") return Algorithm::MaxsumTree;
  if (name == "bms") return Algorithm::Bms;
  if (name == "hbms") return Algorithm::Hbms;
  if (name == "exact") return Algorithm::Exact;
  return std::nullopt;
}

ResultRecord make_record(const std::string& instance_id, std::uint64_t seed,
                         const Instance& inst, const SolveResult& r) {
  ResultRecord rec;
  rec.instance_id = instance_id;
  rec.seed = seed;
  rec.n_vars = inst.num_vars();
  rec.n_factors = inst.num_factors();
  rec.algorithm = algorithm_name(r.algorithm);
  rec.value = r.value;
  rec.feasible = r.feasible;
  rec.tree_value = r.bound.tree_value;
  rec.removed_weight = r.bound.removed_weight;
  rec.upper_bound = r.bound.upper_bound;
  rec.wall_ms = r.wall_ms;
  return rec;
}

}  // namespace dcop
