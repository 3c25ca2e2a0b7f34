#include <string>
#include <vector>

#include "biflow/bicut.hpp"
#include "biflow/flowops.hpp"
#include "biflow/generate.hpp"
#include "biflow/graph.hpp"
#include "biflow/solver.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace biflow;

TEST_CASE("solve certifies and matches the oracle on tiny structured "
          "instances") {
  const char* classes[] = {"planar", "gluing2", "gluing3", "bridges"};
  for (int i = 0; i < 24; ++i) {
    GenOptions opt;
    opt.n = 8;
    opt.max_cap = 3;
    opt.seed = 1000 + i;
    Instance inst = generate(classes[i % 4], opt);
    SolveResult res = solve(inst);
    CHECK(res.certified);
    CHECK(res.value == oracle_max_integral_biflow(inst));
    CHECK(res.value == res.bicut.value);
    CHECK(res.value == res.val1 + res.val2);
    CHECK(verify_biflow(res.inst.g, res.inst.t, res.flow) == res.value);
  }
}

TEST_CASE("solve result fields are coherent") {
  GenOptions opt;
  opt.n = 20;
  opt.max_cap = 8;
  opt.seed = 9;
  Instance inst = gen_planar(opt);
  SolveResult res = solve(inst);
  CHECK(res.value == res.val1 + res.val2);
  CHECK(res.val1 == flow_value(res.inst.g, res.flow.f1, res.inst.t.s1));
  CHECK(res.val2 == flow_value(res.inst.g, res.flow.f2, res.inst.t.s2));
  CHECK_FALSE(res.route.empty());
  CHECK(res.trail.find(res.route) != std::string::npos);
  CHECK(res.inst.e1 >= 0);
  CHECK(res.inst.e2 >= 0);
  CHECK(res.certified == (res.value == res.bicut.value));
}

TEST_CASE("commodities in different blocks are solved independently") {
  Instance inst = testutil::make_instance(
      {{"s1", "a", 2}, {"a", "t1", 3}, {"t1", "s2", 9}, {"s2", "b", 4},
       {"b", "t2", 2}},
      "s1", "t1", "s2", "t2");
  SolveResult res = solve(inst);
  CHECK(res.route == "independent");
  CHECK(res.certified);
  CHECK(res.val1 == 2);
  CHECK(res.val2 == 2);
  CHECK(res.bicut.value == 4);
}

TEST_CASE("the forbidden pattern stays uncertified at unit capacity") {
  SolveResult res = solve(testutil::f_pattern(1));
  CHECK(res.bicut.value == 2);
  CHECK(res.value == 1);  // the exhaustive maximum
  CHECK_FALSE(res.certified);
  CHECK(res.route == "greedy");
  CHECK(res.trail.find("planar:") != std::string::npos);
  CHECK(res.trail.find("bridges:") != std::string::npos);
}

TEST_CASE("unstructured instances still get a verified best effort") {
  for (Cap k = 2; k <= 3; ++k) {
    SolveResult res = solve(testutil::f_pattern(k));
    CHECK(res.bicut.value == 2 * k);
    CHECK(res.value >= 1);
    CHECK(res.value <= 2 * k - (k % 2));  // never beats the true maximum
    CHECK(verify_biflow(res.inst.g, res.inst.t, res.flow) == res.value);
    if (res.certified) CHECK(res.value == res.bicut.value);
  }
}

TEST_CASE("solve strips decorations and stays certified") {
  const char* classes[] = {"planar", "gluing3", "bridges", "gluing2"};
  for (int i = 0; i < 8; ++i) {
    GenOptions opt;
    opt.n = 14;
    opt.max_cap = 5;
    opt.seed = 2000 + i;
    Instance base = generate(classes[i % 4], opt);
    Instance inst = attach_decorations(base, opt.seed + 1, 4);
    CHECK(inst.g.n() > base.g.n());
    SolveResult res = solve(inst);
    CHECK(res.certified);
    CHECK(verify_biflow(res.inst.g, res.inst.t, res.flow) == res.value);
  }
}

TEST_CASE("solve accepts a raw graph and terminal set") {
  Graph g;
  Vertex s1 = g.ensure_vertex("s1"), t1 = g.ensure_vertex("t1");
  Vertex s2 = g.ensure_vertex("s2"), t2 = g.ensure_vertex("t2");
  Vertex m = g.ensure_vertex("m");
  g.add_edge(s1, m, 2);
  g.add_edge(m, t1, 2);
  g.add_edge(s2, m, 2);
  g.add_edge(m, t2, 2);
  SolveResult res = solve(g, Terminals{s1, t1, s2, t2});
  CHECK(res.certified);
  CHECK(res.value == 4);
}
