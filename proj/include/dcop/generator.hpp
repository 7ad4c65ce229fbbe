#pragma once

#include <cstdint>

#include "dcop/model.hpp"

namespace dcop {

struct GeneratorConfig {
  int n_vars = 10;
  int domain_size = 41;
  double graph_density = 0.4;
  double hard_ratio = 0.3;
  double hard_tightness = 0.5;
  int utility_max = 500;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument when a field is out of range.
void validate_config(const GeneratorConfig& cfg);

// Deterministic instance construction; see README for the exact stream
// layout. The variable graph is always connected, exactly
// round(hard_ratio * edge_count) factors are hard, and every hard factor
// row and column keeps at least one allowed pair.
Instance generate(const GeneratorConfig& cfg);

}  // namespace dcop
