#include <vector>

#include "biflow/bicut.hpp"
#include "biflow/flowops.hpp"
#include "biflow/generate.hpp"
#include "biflow/graph.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace biflow;

TEST_CASE("min bicut matches exhaustive edge-subset enumeration") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 60 && checked < 40; ++seed) {
    GenOptions opt;
    opt.n = 7;
    opt.max_cap = 3;
    opt.seed = seed;
    Instance inst = gen_random_connected(opt);
    if (inst.g.m() > 18) continue;
    ++checked;

    BicutCertificate cert = min_bicut(inst);
    CHECK(cert.value == testutil::brute_min_bicut(inst));

    // Certificate coherence: the cut edges really disconnect both pairs and
    // their capacities sum to the reported value.
    Cap total = 0;
    for (EdgeId e : cert.cut_edges) total += inst.g.edge(e).cap;
    CHECK(total == cert.value);
    CHECK(testutil::is_valid_bicut(inst, cert.cut_edges));
    CHECK((cert.grouping == 0 || cert.grouping == 1));
    bool has_s1 = false;
    for (Vertex v : cert.side) has_s1 = has_s1 || v == inst.t.s1;
    CHECK(has_s1);
  }
  CHECK(checked == 40);
}

TEST_CASE("min bicut certificate stays valid on larger instances") {
  for (std::uint64_t seed : {5, 6, 7, 8}) {
    GenOptions opt;
    opt.n = 30;
    opt.max_cap = 8;
    opt.seed = seed;
    for (const char* cls : {"planar", "gluing3", "bridges"}) {
      Instance inst = generate(cls, opt);
      BicutCertificate cert = min_bicut(inst);
      Cap total = 0;
      for (EdgeId e : cert.cut_edges) total += inst.g.edge(e).cap;
      CHECK(total == cert.value);
      CHECK(testutil::is_valid_bicut(inst, cert.cut_edges));
    }
  }
}

TEST_CASE("verify_biflow checks both commodities jointly") {
  Instance inst = testutil::interleaved_c4(2);
  const Graph& g = inst.g;
  Vertex a = *g.find_vertex("a"), b = *g.find_vertex("b");
  Vertex c = *g.find_vertex("c"), d = *g.find_vertex("d");

  // Route commodity 1 both ways around the cycle, commodity 2 not at all.
  PathFlow p1{1, {a, b, c}};
  PathFlow p2{1, {a, d, c}};
  Biflow flow;
  flow.f1 = flow_from_paths(g, std::vector<PathFlow>{p1, p2});
  flow.f2 = ArcFlow(g.m());
  CHECK(verify_biflow(g, inst.t, flow) == 2);

  // Joint capacity: commodity 2 through the same edges must overflow.
  Biflow both = flow;
  both.f2 = flow_from_paths(g, std::vector<PathFlow>{{2, {b, c, d}}});
  CHECK(testutil::throws_code(ErrorCode::NotAFlow,
                              [&] { verify_biflow(g, inst.t, both); }));

  // Wrong endpoints: commodity 2 flow must run s2 -> t2.
  Biflow wrong = flow;
  wrong.f2 = flow_from_paths(g, std::vector<PathFlow>{{1, {b, a}}});
  CHECK(testutil::throws_code(ErrorCode::NotAFlow,
                              [&] { verify_biflow(g, inst.t, wrong); }));
}

TEST_CASE("frozen values for the forbidden pattern") {
  // Uniform capacity k: minimum bicut 2k, maximum integral biflow
  // 2k - (k mod 2), and the hand-built biflow achieves it.
  for (Cap k = 1; k <= 4; ++k) {
    Instance inst = testutil::f_pattern(k);
    CHECK(min_bicut(inst).value == 2 * k);
    Biflow best = testutil::f_pattern_best(inst, k);
    CHECK(verify_biflow(inst.g, inst.t, best) == 2 * k - (k % 2));
  }
  CHECK(oracle_max_integral_biflow(testutil::f_pattern(1)) == 1);
  CHECK(oracle_max_integral_biflow(testutil::f_pattern(2)) == 4);
  CHECK(oracle_max_integral_biflow(testutil::f_pattern(3)) == 5);
}

TEST_CASE("frozen values for the interleaved four-cycle") {
  // Both mixed routings exist edge-disjointly: no gap at any capacity.
  for (Cap k : {1, 3}) {
    Instance inst = testutil::interleaved_c4(k);
    CHECK(min_bicut(inst).value == 2 * k);
    CHECK(oracle_max_integral_biflow(inst) == 2 * k);
  }
}

TEST_CASE("oracle agrees with hand-computable instances") {
  // Two vertex-disjoint commodity paths: the commodities do not interact.
  Instance disjoint = testutil::make_instance(
      {{"s1", "a", 2}, {"a", "t1", 3}, {"s2", "b", 1}, {"b", "t2", 1}},
      "s1", "t1", "s2", "t2");
  CHECK(oracle_max_integral_biflow(disjoint) == 3);
  CHECK(min_bicut(disjoint).value == 3);

  // A single shared edge forces the commodities to split its capacity.
  Instance shared = testutil::make_instance(
      {{"s1", "u", 3}, {"s2", "u", 3}, {"u", "v", 2}, {"v", "t1", 3},
       {"v", "t2", 3}},
      "s1", "t1", "s2", "t2");
  CHECK(oracle_max_integral_biflow(shared) == 2);
  CHECK(min_bicut(shared).value == 2);
}

TEST_CASE("oracle rejects instances beyond its guard") {
  GenOptions opt;
  opt.n = 9;
  opt.max_cap = 3;
  opt.seed = 2;
  Instance big = gen_random_connected(opt);
  CHECK(testutil::throws_code(ErrorCode::TooLarge,
                              [&] { oracle_max_integral_biflow(big); }));

  Instance strong = testutil::interleaved_c4(4);
  CHECK(testutil::throws_code(ErrorCode::TooLarge,
                              [&] { oracle_max_integral_biflow(strong); }));
}
