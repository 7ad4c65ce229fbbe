#include <doctest.h>

#include <stdexcept>

#include "dcop/model.hpp"
#include "support/helpers.hpp"

using namespace dcop;
using test::add_hard;
using test::add_soft;
using test::add_unary;
using test::new_instance;

TEST_CASE("DomainSet lookup") {
  DomainSet d{{2, 5, 9}};
  CHECK(d.size() == 3);
  CHECK(d.index_of(5) == 1);
  CHECK(d.index_of(9) == 2);
  CHECK(d.index_of(3) == -1);
  CHECK(d.contains(2));
  CHECK_FALSE(d.contains(7));
  CHECK_FALSE(d.empty());
  CHECK(DomainSet{}.empty());
}

TEST_CASE("evaluate with no factors is zero") {
  Instance inst = new_instance({{0, 1}, {0, 1}});
  CHECK(evaluate(inst, {1, 0}) == Utility(0.0));
  CHECK(is_feasible(inst, {1, 0}));
}

TEST_CASE("hard factor forbids disallowed pairs") {
  Instance inst = new_instance({{0, 1}, {0, 1}});
  add_hard(inst, 0, 1, {{0, 0}, {1, 1}});
  add_soft(inst, 0, 1, {{3, 4}, {5, 6}});
  CHECK(evaluate(inst, {0, 0}) == Utility(3.0));
  CHECK(evaluate(inst, {1, 1}) == Utility(6.0));
  CHECK(evaluate(inst, {0, 1}).is_forbidden());
  CHECK_FALSE(is_feasible(inst, {0, 1}));
}

TEST_CASE("evaluate sums unary and binary factors") {
  Instance inst = new_instance({{0, 1, 2}, {0, 1}});
  add_soft(inst, 0, 1, {{1, 2}, {3, 4}, {5, 6}});
  add_unary(inst, 0, {10, 20, 30});
  add_unary(inst, 1, {0.5, 0.25});
  CHECK(evaluate(inst, {2, 0}).finite() == doctest::Approx(5 + 30 + 0.5));
  CHECK(evaluate(inst, {0, 1}).finite() == doctest::Approx(2 + 10 + 0.25));
}

TEST_CASE("evaluate is invariant to factor order") {
  Instance a = new_instance({{0, 1}, {0, 1}, {0, 1}});
  add_soft(a, 0, 1, {{1, 2}, {3, 4}});
  add_soft(a, 1, 2, {{5, 6}, {7, 8}});
  Instance b = new_instance({{0, 1}, {0, 1}, {0, 1}});
  add_soft(b, 1, 2, {{5, 6}, {7, 8}});
  add_soft(b, 0, 1, {{1, 2}, {3, 4}});
  for (Value x : {0, 1})
    for (Value y : {0, 1})
      for (Value z : {0, 1})
        CHECK(evaluate(a, {x, y, z}).raw() == evaluate(b, {x, y, z}).raw());
}

TEST_CASE("instance_is_integral") {
  Instance inst = new_instance({{0, 1}, {0, 1}});
  add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
  add_hard(inst, 0, 1, {{0, 0}});
  CHECK(instance_is_integral(inst));
  add_unary(inst, 0, {0.5, 1.0});
  CHECK_FALSE(instance_is_integral(inst));
}

TEST_CASE("domain values map through evaluate by value not by index") {
  Instance inst = new_instance({{3, 7}, {1, 4}});
  add_soft(inst, 0, 1, {{10, 20}, {30, 40}});
  CHECK(evaluate(inst, {7, 1}) == Utility(30.0));
  CHECK(evaluate(inst, {3, 4}) == Utility(20.0));
}

TEST_CASE("validate_instance rejects malformed instances") {
  SUBCASE("empty domain") {
    Instance inst = new_instance({{}, {0}});
    CHECK_THROWS_AS(validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("non-increasing domain") {
    Instance inst = new_instance({{0, 0}, {0, 1}});
    CHECK_THROWS_AS(validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("factor id mismatch") {
    Instance inst = new_instance({{0, 1}, {0, 1}});
    add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
    inst.factors[0].id = 5;
    CHECK_THROWS_AS(validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("scope variable out of range") {
    Instance inst = new_instance({{0, 1}, {0, 1}});
    add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
    inst.factors[0].scope[1] = 4;
    CHECK_THROWS_AS(validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("repeated scope variable") {
    Instance inst = new_instance({{0, 1}, {0, 1}});
    add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
    inst.factors[0].scope[1] = 0;
    CHECK_THROWS_AS(validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("table size mismatch") {
    Instance inst = new_instance({{0, 1}, {0, 1}});
    add_soft(inst, 0, 1, {{1, 2}, {3, 4}});
    inst.factors[0].table.pop_back();
    CHECK_THROWS_AS(validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("wrong cols") {
    Instance inst = new_instance({{0, 1}, {0, 1, 2}});
    add_soft(inst, 0, 1, {{1, 2, 3}, {4, 5, 6}});
    inst.factors[0].cols = 2;
    CHECK_THROWS_AS(validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("well-formed passes") {
    Instance inst = new_instance({{0, 1}, {0, 1, 2}});
    add_soft(inst, 0, 1, {{1, 2, 3}, {4, 5, 6}});
    add_hard(inst, 0, 1, {{0, 2}});
    add_unary(inst, 1, {1, 2, 3});
    CHECK_NOTHROW(validate_instance(inst));
  }
}

TEST_CASE("factor table indexing is row-major with scope[0] slowest") {
  Instance inst = new_instance({{0, 1, 2}, {0, 1}});
  int f = add_soft(inst, 0, 1, {{1, 2}, {3, 4}, {5, 6}});
  const Factor& fac = inst.factors[f];
  CHECK(fac.rows() == 3);
  CHECK(fac.cols == 2);
  CHECK(fac.at(0, 0) == Utility(1.0));
  CHECK(fac.at(1, 1) == Utility(4.0));
  CHECK(fac.at(2, 0) == Utility(5.0));
  CHECK(fac.at(5) == Utility(6.0));
}
