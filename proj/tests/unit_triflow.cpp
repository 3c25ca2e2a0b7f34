#include <vector>

#include "biflow/flowops.hpp"
#include "biflow/generate.hpp"
#include "biflow/graph.hpp"
#include "biflow/triflow.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace biflow;
using testutil::brute_min_cut;

namespace {

// Three distinct vertices of g drawn without replacement.
std::vector<Vertex> pick_three(const Graph& g, Rng& rng) {
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.n(); ++v) order.push_back(v);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.range(0, static_cast<long long>(i) - 1)]);
  return {order[0], order[1], order[2]};
}

void check_joint_caps(const Graph& g, const ArcCaps& caps, const ArcFlow& a,
                      const ArcFlow& b) {
  for (EdgeId e = 0; e < g.m(); ++e) {
    CHECK(a.fwd[e] + b.fwd[e] <= caps.fwd[e]);
    CHECK(a.bwd[e] + b.bwd[e] <= caps.bwd[e]);
  }
}

}  // namespace

TEST_CASE("triflow from a common source") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    GenOptions opt;
    opt.n = 5 + trial % 5;
    opt.max_cap = 5;
    opt.seed = 900 + trial;
    Instance inst = gen_random_connected(opt);
    const Graph& g = inst.g;
    ArcCaps caps = undirected_caps(g);
    auto xyz = pick_three(g, rng);
    Vertex x = xyz[0], y = xyz[1], z = xyz[2];

    TriflowResult tri = triflow_from_source(g, caps, x, y, z);

    // The two headline values against exhaustive cut enumeration.
    CHECK(tri.tau == brute_min_cut(g, caps, {x}, {y}));
    CHECK(tri.tau_x == brute_min_cut(g, caps, {x}, {y, z}));
    CHECK(tri.tau_x >= tri.tau);

    // f1 carries tau from x to y, f2 the surplus from x to z.
    CHECK(verify_flow(g, caps, tri.f1, x, y) == tri.tau);
    CHECK(verify_flow(g, caps, tri.f2, x, z) == tri.tau_x - tri.tau);
    check_joint_caps(g, caps, tri.f1, tri.f2);

    // Divergence triple of the arc-wise sum: tau_x out of x, tau into y,
    // the rest into z, conservation elsewhere.
    ArcFlow sum = add_flows(tri.f1, tri.f2);
    std::vector<Cap> div = divergence(g, sum);
    CHECK(div[x] == tri.tau_x);
    CHECK(div[y] == -tri.tau);
    CHECK(div[z] == -(tri.tau_x - tri.tau));
    for (Vertex v = 0; v < g.n(); ++v)
      if (v != x && v != y && v != z) CHECK(div[v] == 0);
  }
}

TEST_CASE("triflow into a common sink") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    GenOptions opt;
    opt.n = 5 + trial % 5;
    opt.max_cap = 5;
    opt.seed = 1300 + trial;
    Instance inst = gen_random_connected(opt);
    const Graph& g = inst.g;
    ArcCaps caps = undirected_caps(g);
    auto xyz = pick_three(g, rng);
    Vertex x = xyz[0], y = xyz[1], z = xyz[2];

    TriflowResult tri = triflow_to_sink(g, caps, x, y, z);

    CHECK(tri.tau == brute_min_cut(g, caps, {y}, {x}));
    CHECK(tri.tau_x == brute_min_cut(g, caps, {y, z}, {x}));
    CHECK(tri.tau_x >= tri.tau);

    CHECK(verify_flow(g, caps, tri.f1, y, x) == tri.tau);
    CHECK(verify_flow(g, caps, tri.f2, z, x) == tri.tau_x - tri.tau);
    check_joint_caps(g, caps, tri.f1, tri.f2);

    ArcFlow sum = add_flows(tri.f1, tri.f2);
    std::vector<Cap> div = divergence(g, sum);
    CHECK(div[x] == -tri.tau_x);
    CHECK(div[y] == tri.tau);
    CHECK(div[z] == tri.tau_x - tri.tau);
  }
}

TEST_CASE("transpose caps swaps the arc directions") {
  Graph g;
  Vertex a = g.ensure_vertex("a"), b = g.ensure_vertex("b");
  EdgeId e = g.add_edge(a, b, 1);
  ArcCaps caps(g.m());
  caps.fwd[e] = 4;
  caps.bwd[e] = 9;
  ArcCaps tr = transpose_caps(caps);
  CHECK(tr.fwd[e] == 9);
  CHECK(tr.bwd[e] == 4);
}
