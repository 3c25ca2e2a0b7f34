#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biflow/generate.hpp"
#include "biflow/graph.hpp"
#include "biflow/io.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace biflow;

namespace {

std::string render(const Instance& inst) {
  std::ostringstream out;
  emit_instance(out, inst);
  return out.str();
}

const char* kClasses[] = {"planar", "gluing2", "gluing3", "bridges",
                          "forbidden", "random"};

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
  for (const char* cls : kClasses) {
    GenOptions opt;
    opt.n = 13;
    opt.max_cap = 7;
    opt.seed = 99;
    std::string a = render(generate(cls, opt));
    std::string b = render(generate(cls, opt));
    CHECK(a == b);

    GenOptions other = opt;
    other.seed = 100;
    // The forbidden pattern has a fixed shape; everything else should move.
    if (std::string(cls) != "forbidden")
      CHECK(render(generate(cls, other)) != a);
  }
}

TEST_CASE("generated instances respect their budgets") {
  for (const char* cls : kClasses) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GenOptions opt;
      opt.n = 15;
      opt.max_cap = 6;
      opt.seed = seed;
      Instance inst = generate(cls, opt);
      CHECK(inst.g.n() <= opt.n);
      CHECK(is_connected(inst.g));
      for (EdgeId e = 0; e < inst.g.m(); ++e) {
        CHECK(inst.g.edge(e).cap >= 0);
        CHECK(inst.g.edge(e).cap <= opt.max_cap);
      }
      std::set<Vertex> terms{inst.t.s1, inst.t.t1, inst.t.s2, inst.t.t2};
      CHECK(terms.size() == 4);
      CHECK(inst.e1 >= 0);
      CHECK(inst.e2 >= 0);
    }
  }
}

TEST_CASE("tiny budgets still produce valid instances") {
  for (const char* cls : kClasses) {
    GenOptions opt;
    opt.n = 4;
    opt.max_cap = 1;
    opt.seed = 5;
    Instance inst = generate(cls, opt);
    CHECK(is_connected(inst.g));
    std::set<Vertex> terms{inst.t.s1, inst.t.t1, inst.t.s2, inst.t.t2};
    CHECK(terms.size() == 4);
  }
}

TEST_CASE("unknown class names are rejected") {
  GenOptions opt;
  CHECK(testutil::throws_code(ErrorCode::ParseError,
                              [&] { generate("mystery", opt); }));
}

TEST_CASE("decorations extend an instance without touching its terminals") {
  GenOptions opt;
  opt.n = 12;
  opt.max_cap = 5;
  opt.seed = 7;
  Instance base = gen_planar(opt);
  Instance deco = attach_decorations(base, 123, 6);
  CHECK(deco.g.n() > base.g.n());
  CHECK(deco.t.s1 == base.t.s1);
  CHECK(deco.t.t1 == base.t.t1);
  CHECK(deco.t.s2 == base.t.s2);
  CHECK(deco.t.t2 == base.t.t2);
  // Original edges persist with their capacities (ids are a prefix).
  for (EdgeId e = 0; e < base.g.m(); ++e) {
    CHECK(deco.g.edge(e).u == base.g.edge(e).u);
    CHECK(deco.g.edge(e).v == base.g.edge(e).v);
    CHECK(deco.g.edge(e).cap == base.g.edge(e).cap);
  }
  // Deterministic too.
  Instance again = attach_decorations(base, 123, 6);
  CHECK(render(again) == render(deco));
}

TEST_CASE("uniform range sampling stays in bounds and hits the ends") {
  Rng rng(1);
  bool lo_hit = false, hi_hit = false;
  for (int i = 0; i < 2000; ++i) {
    long long x = rng.range(-3, 4);
    CHECK(x >= -3);
    CHECK(x <= 4);
    lo_hit = lo_hit || x == -3;
    hi_hit = hi_hit || x == 4;
  }
  CHECK(lo_hit);
  CHECK(hi_hit);

  Rng fixed(2);
  CHECK(fixed.range(7, 7) == 7);

  Rng a(9), b(9);
  for (int i = 0; i < 50; ++i) CHECK(a.range(0, 1000000) == b.range(0, 1000000));

  int heads = 0;
  Rng coin_rng(4);
  for (int i = 0; i < 400; ++i) heads += coin_rng.coin();
  CHECK(heads > 100);
  CHECK(heads < 300);
}
