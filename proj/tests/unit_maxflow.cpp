#include <vector>

#include "biflow/generate.hpp"
#include "biflow/graph.hpp"
#include "biflow/maxflow.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace biflow;
using testutil::brute_min_cut;
using testutil::side_capacity;

namespace {

// Random asymmetric arc capacities, to exercise the directed machinery.
ArcCaps random_caps(const Graph& g, Rng& rng, Cap max_cap) {
  ArcCaps caps(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    caps.fwd[e] = rng.range(0, max_cap);
    caps.bwd[e] = rng.range(0, max_cap);
  }
  return caps;
}

}  // namespace

TEST_CASE("max flow equals the brute-force minimum cut") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    GenOptions opt;
    opt.n = 4 + trial % 6;
    opt.max_cap = 5;
    opt.seed = 100 + trial;
    Instance inst = gen_random_connected(opt);
    const Graph& g = inst.g;
    ArcCaps caps = random_caps(g, rng, 5);
    Vertex s = rng.range(0, g.n() - 1);
    Vertex t = rng.range(0, g.n() - 1);
    if (s == t) continue;

    MaxflowResult res = max_flow(g, caps, s, t);
    CHECK(res.value == brute_min_cut(g, caps, {s}, {t}));
    CHECK(verify_flow(g, caps, res.flow, s, t) == res.value);

    // The reported cut is a valid source side of matching capacity.
    std::vector<char> side(g.n(), 0);
    for (Vertex v : res.cut) side[v] = 1;
    CHECK(side[s]);
    CHECK_FALSE(side[t]);
    CHECK(side_capacity(g, caps, side) == res.value);
  }
}

TEST_CASE("multi-terminal max flow") {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    GenOptions opt;
    opt.n = 7;
    opt.max_cap = 4;
    opt.seed = 500 + trial;
    Instance inst = gen_random_connected(opt);
    const Graph& g = inst.g;
    ArcCaps caps = random_caps(g, rng, 4);

    // Distinct source pair and sink pair.
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.n(); ++v) order.push_back(v);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.range(0, static_cast<long long>(i) - 1)]);
    std::vector<Vertex> sources{order[0], order[1]};
    std::vector<Vertex> sinks{order[2], order[3]};

    MaxflowResult res = max_flow(g, caps, sources, sinks);
    CHECK(res.value == brute_min_cut(g, caps, sources, sinks));

    // Conservation away from the terminal sets.
    std::vector<Cap> div = divergence(g, res.flow);
    Cap out = 0;
    for (Vertex v : sources) out += div[v];
    for (Vertex v = 0; v < g.n(); ++v) {
      bool terminal = v == sources[0] || v == sources[1] || v == sinks[0] ||
                      v == sinks[1];
      if (!terminal) CHECK(div[v] == 0);
    }
    CHECK(out == res.value);
  }
}

TEST_CASE("flow of a prescribed value") {
  Instance inst = testutil::make_instance(
      {{"s", "a", 3}, {"a", "t", 2}, {"s", "b", 2}, {"b", "t", 4}},
      "s", "t", "a", "b");
  const Graph& g = inst.g;
  ArcCaps caps = undirected_caps(g);
  Vertex s = *g.find_vertex("s"), t = *g.find_vertex("t");

  MaxflowResult res = max_flow(g, caps, s, t);
  CHECK(res.value == 4);
  for (Cap k = 0; k <= 4; ++k) {
    ArcFlow f = flow_of_value(g, caps, s, t, k);
    CHECK(verify_flow(g, caps, f, s, t) == k);
  }
  CHECK(testutil::throws_code(ErrorCode::ValueInfeasible,
                              [&] { flow_of_value(g, caps, s, t, 5); }));
}

TEST_CASE("residual capacity arithmetic") {
  Graph g;
  Vertex a = g.ensure_vertex("a"), b = g.ensure_vertex("b");
  EdgeId e = g.add_edge(a, b, 5);
  ArcCaps caps = undirected_caps(g);
  ArcFlow f(g.m());
  f.fwd[e] = 3;
  ArcCaps res = residual_capacity(caps, f);
  CHECK(res.fwd[e] == 2);   // 5 - 3 + 0
  CHECK(res.bwd[e] == 8);   // 5 - 0 + 3
  CHECK(cut_capacity(g, caps, std::vector<Vertex>{a}) == 5);
  CHECK(cut_capacity(g, res, std::vector<Vertex>{a}) == 2);
}

TEST_CASE("disconnected and zero-capacity flows") {
  Instance inst = testutil::make_instance(
      {{"s", "a", 0}, {"a", "t", 4}, {"p", "q", 1}}, "s", "t", "p", "q");
  const Graph& g = inst.g;
  ArcCaps caps = undirected_caps(g);
  // s-a has capacity zero, so nothing reaches t.
  CHECK(max_flow(g, caps, *g.find_vertex("s"), *g.find_vertex("t")).value == 0);
  // p and q live in another component entirely (ignoring the augmented
  // zero-capacity direct edges).
  CHECK(max_flow(g, caps, *g.find_vertex("p"), *g.find_vertex("s")).value == 0);
}
