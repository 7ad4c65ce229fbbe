#include <doctest.h>

#include "dcop/factor_graph.hpp"
#include "dcop/generator.hpp"
#include "support/helpers.hpp"

using namespace dcop;
using test::add_hard;
using test::add_soft;
using test::add_unary;
using test::new_instance;

TEST_CASE("single binary factor forms a three-node path") {
  Instance inst = new_instance({{0, 1}, {0, 1}});
  add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
  FactorGraph g = build_factor_graph(inst);
  CHECK(g.n_vars == 2);
  CHECK(g.n_factors == 1);
  CHECK(g.n_nodes() == 3);
  CHECK(g.n_edges == 2);
  CHECK(g.acyclic);
  CHECK(g.n_components == 1);
  REQUIRE(g.var_edges[0].size() == 1);
  CHECK(g.var_edges[0][0] == std::pair<int, int>{0, 0});
  CHECK(g.var_edges[1][0] == std::pair<int, int>{0, 1});
  CHECK(g.factor_node(0) == 2);
  CHECK(g.edge_id(0, 0) != g.edge_id(0, 1));
}

TEST_CASE("triangle of factors is cyclic") {
  Instance inst = new_instance({{0, 1}, {0, 1}, {0, 1}});
  add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
  add_soft(inst, 1, 2, {{1, 2}, {3, 4}});
  add_soft(inst, 0, 2, {{1, 2}, {3, 4}});
  FactorGraph g = build_factor_graph(inst);
  CHECK(g.n_nodes() == 6);
  CHECK(g.n_edges == 6);
  CHECK_FALSE(g.acyclic);
  CHECK(g.n_components == 1);
}

TEST_CASE("unary factors hang off one variable without creating cycles") {
  Instance inst = new_instance({{0, 1}, {0, 1}});
  add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
  add_unary(inst, 0, {5, 6});
  FactorGraph g = build_factor_graph(inst);
  CHECK(g.n_edges == 3);
  CHECK(g.acyclic);
  CHECK(g.var_edges[0].size() == 2);
}

TEST_CASE("parallel factors on one pair count as a cycle") {
  Instance inst = new_instance({{0, 1}, {0, 1}});
  add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
  add_hard(inst, 0, 1, {{0, 0}});
  FactorGraph g = build_factor_graph(inst);
  CHECK_FALSE(g.acyclic);
  CHECK(g.n_components == 1);
}

TEST_CASE("disconnected components are counted") {
  Instance inst = new_instance({{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
  add_soft(inst, 2, 3, {{1, 2}, {3, 4}});
  FactorGraph g = build_factor_graph(inst);
  CHECK(g.acyclic);
  CHECK(g.n_components == 2);
  Instance lone = new_instance({{0, 1}, {0, 1}});
  FactorGraph g2 = build_factor_graph(lone);
  CHECK(g2.n_components == 2);
  CHECK(g2.n_edges == 0);
  CHECK(g2.acyclic);
}

TEST_CASE("edge counts on a generated instance match the arities") {
  GeneratorConfig cfg;
  cfg.n_vars = 6;
  cfg.domain_size = 4;
  cfg.graph_density = 0.5;
  cfg.hard_ratio = 0.3;
  cfg.seed = 123;
  Instance inst = generate(cfg);
  FactorGraph g = build_factor_graph(inst);
  int arity_sum = 0;
  for (const Factor& f : inst.factors) arity_sum += f.arity();
  CHECK(g.n_edges == arity_sum);
  CHECK(g.n_nodes() == inst.num_vars() + inst.num_factors());
  int from_vars = 0;
  for (const auto& edges : g.var_edges) from_vars += edges.size();
  CHECK(from_vars == g.n_edges);
}

TEST_CASE("edge ids are dense and unique") {
  GeneratorConfig cfg;
  cfg.n_vars = 5;
  cfg.domain_size = 3;
  cfg.seed = 8;
  Instance inst = generate(cfg);
  FactorGraph g = build_factor_graph(inst);
  std::vector<bool> seen(g.n_edges, false);
  for (int f = 0; f < g.n_factors; ++f)
    for (int s = 0; s < inst.factors[f].arity(); ++s) {
      int e = g.edge_id(f, s);
      REQUIRE(e >= 0);
      REQUIRE(e < g.n_edges);
      CHECK_FALSE(seen[e]);
      seen[e] = true;
    }
}
