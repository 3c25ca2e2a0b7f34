#include <vector>

#include "biflow/bicut.hpp"
#include "biflow/flowops.hpp"
#include "biflow/generate.hpp"
#include "biflow/gluing.hpp"
#include "biflow/graph.hpp"
#include "biflow/structure.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace biflow;

TEST_CASE("direct edges are zeroed and added back onto their commodities") {
  Instance inst = testutil::make_instance(
      {{"s1", "t1", 3}, {"s2", "t2", 5}, {"s1", "s2", 1}, {"t1", "t2", 1}},
      "s1", "t1", "s2", "t2");
  Instance work = inst;
  DirectAddback add = zero_direct_edges(work);
  CHECK(add.c1 == 3);
  CHECK(add.c2 == 5);
  CHECK(work.g.edge(work.e1).cap == 0);
  CHECK(work.g.edge(work.e2).cap == 0);

  Biflow b;
  b.f1 = ArcFlow(inst.g.m());
  b.f2 = ArcFlow(inst.g.m());
  apply_direct_addback(inst, add, b);
  CHECK(flow_value(inst.g, b.f1, inst.t.s1) == 3);
  CHECK(flow_value(inst.g, b.f2, inst.t.s2) == 5);
  CHECK(verify_biflow(inst.g, inst.t, b) == 8);
}

TEST_CASE("consistency prefers the source on ties") {
  SideCuts even{};  // all zero: tied in both pieces
  Consistency c = consistency(even);
  CHECK(c.consistent);
  CHECK(c.source_dominant);

  SideCuts src{};
  src.tau_s[0] = 3;
  src.tau_t[0] = 1;
  src.tau_s[1] = 2;
  src.tau_t[1] = 2;
  c = consistency(src);
  CHECK(c.consistent);
  CHECK(c.source_dominant);

  SideCuts snk{};
  snk.tau_s[0] = 1;
  snk.tau_t[0] = 3;
  snk.tau_s[1] = 0;
  snk.tau_t[1] = 2;
  c = consistency(snk);
  CHECK(c.consistent);
  CHECK_FALSE(c.source_dominant);

  SideCuts mixed{};
  mixed.tau_s[0] = 3;
  mixed.tau_t[0] = 1;
  mixed.tau_s[1] = 1;
  mixed.tau_t[1] = 3;
  c = consistency(mixed);
  CHECK_FALSE(c.consistent);
}

TEST_CASE("gluing solve matches the oracle on a consistent hub instance") {
  Instance inst = testutil::make_instance(
      {{"s1", "u", 2}, {"s1", "v", 1}, {"t1", "u", 1}, {"t1", "v", 2},
       {"s2", "u", 2}, {"s2", "v", 2}, {"t2", "u", 2}, {"t2", "v", 2},
       {"u", "v", 3}},
      "s1", "t1", "s2", "t2");
  auto glue = detect_gluing(inst);
  REQUIRE(glue.has_value());
  Biflow b = solve_gluing(inst, *glue);
  Cap value = verify_biflow(inst.g, inst.t, b);
  CHECK(value == min_bicut(inst).value);
}

TEST_CASE("gluing solve handles an inconsistent side") {
  // Piece at u prefers the source, piece at v the sink, on both sides.
  Instance inst = testutil::make_instance(
      {{"s1", "u", 3}, {"t1", "u", 1}, {"s1", "v", 1}, {"t1", "v", 3},
       {"s2", "u", 3}, {"t2", "u", 1}, {"s2", "v", 1}, {"t2", "v", 3},
       {"u", "v", 2}},
      "s1", "t1", "s2", "t2");
  auto glue = detect_gluing(inst);
  REQUIRE(glue.has_value());
  Biflow b = solve_gluing(inst, *glue);
  Cap value = verify_biflow(inst.g, inst.t, b);
  CHECK(value == oracle_max_integral_biflow(inst));
  CHECK(value == min_bicut(inst).value);
}

TEST_CASE("gluing reaches the bicut bound across generated instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GenOptions opt;
    opt.n = 14 + static_cast<int>(seed % 5);
    opt.max_cap = 6;
    opt.seed = 500 + seed;
    Instance inst = gen_gluing3(opt);
    auto glue = detect_gluing(inst);
    REQUIRE(glue.has_value());
    Biflow b = solve_gluing(inst, *glue);
    CHECK(verify_biflow(inst.g, inst.t, b) == min_bicut(inst).value);
  }
}

TEST_CASE("tiny glued instances match the exhaustive oracle") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenOptions opt;
    opt.n = 8;
    opt.max_cap = 3;
    opt.seed = 700 + seed;
    Instance inst = gen_gluing3(opt);
    auto glue = detect_gluing(inst);
    REQUIRE(glue.has_value());
    Biflow b = solve_gluing(inst, *glue);
    CHECK(verify_biflow(inst.g, inst.t, b) ==
          oracle_max_integral_biflow(inst));
  }
}
