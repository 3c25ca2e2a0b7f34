#include "biflow/bicut.hpp"

#include <algorithm>
#include <array>

#include "biflow/maxflow.hpp"

namespace biflow {
namespace {

void append_unique(std::vector<Vertex>& side, Vertex v) {
  if (std::find(side.begin(), side.end(), v) == side.end()) side.push_back(v);
}

}  // namespace

BicutCertificate min_bicut(const Graph& g, const ArcCaps& caps, Vertex a1,
                           Vertex b1, Vertex a2, Vertex b2) {
  require(a1 != b1 && a2 != b2, ErrorCode::BadTerminals,
          "commodity endpoints coincide");
  BicutCertificate best;
  for (int grouping = 0; grouping < 2; ++grouping) {
    std::vector<Vertex> sources, sinks;
    append_unique(sources, a1);
    append_unique(sources, grouping == 0 ? a2 : b2);
    append_unique(sinks, b1);
    append_unique(sinks, grouping == 0 ? b2 : a2);
    bool overlap = false;
    for (Vertex s : sources)
      for (Vertex t : sinks) overlap = overlap || s == t;
    if (overlap) continue;
    MaxflowResult mf = max_flow(g, caps, sources, sinks);
    if (best.grouping == -1 || mf.value < best.value) {
      best.value = mf.value;
      best.grouping = grouping;
      best.side = std::move(mf.cut);
    }
  }
  require(best.grouping != -1, ErrorCode::BadTerminals,
          "no valid grouping separates the terminals");
  std::vector<bool> in(g.n(), false);
  for (Vertex v : best.side) in[v] = true;
  for (EdgeId e = 0; e < g.m(); ++e)
    if (in[g.edge(e).u] != in[g.edge(e).v]) best.cut_edges.push_back(e);
  return best;
}

BicutCertificate min_bicut(const Instance& inst) {
  return min_bicut(inst.g, undirected_caps(inst.g), inst.t.s1, inst.t.t1,
                   inst.t.s2, inst.t.t2);
}

Cap verify_biflow(const Graph& g, const Terminals& t, const Biflow& b) {
  ArcCaps caps = undirected_caps(g);
  Cap v1 = verify_flow(g, caps, b.f1, t.s1, t.t1);
  Cap v2 = verify_flow(g, caps, b.f2, t.s2, t.t2);
  for (EdgeId e = 0; e < g.m(); ++e)
    require(b.f1.fwd[e] + b.f1.bwd[e] + b.f2.fwd[e] + b.f2.bwd[e] <=
                g.edge(e).cap,
            ErrorCode::NotAFlow, "joint capacity exceeded");
  return v1 + v2;
}

namespace {

struct OracleState {
  const Graph& g;
  std::array<Vertex, 4> terms;  // s1, t1, s2, t2
  std::vector<Cap> residual;    // per edge
  std::vector<std::vector<EdgeId>> paths;  // both commodities, edge lists
  std::size_t commodity2_start = 0;
  Cap best = 0;

  // Minimum grouped cut by subset enumeration; independent upper bound on
  // any biflow under the current residual capacities.
  Cap grouped_cut_bound() const {
    int n = g.n();
    Cap bound = -1;
    for (int grouping = 0; grouping < 2; ++grouping) {
      Vertex in1 = terms[0], in2 = grouping == 0 ? terms[2] : terms[3];
      Vertex out1 = terms[1], out2 = grouping == 0 ? terms[3] : terms[2];
      Cap best_cut = -1;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = (mask >> in1 & 1) && (mask >> in2 & 1) &&
                  !(mask >> out1 & 1) && !(mask >> out2 & 1);
        if (!ok) continue;
        Cap cross = 0;
        for (EdgeId e = 0; e < g.m(); ++e) {
          const Edge& ed = g.edge(e);
          if (((mask >> ed.u) & 1) != ((mask >> ed.v) & 1))
            cross += residual[e];
        }
        if (best_cut < 0 || cross < best_cut) best_cut = cross;
      }
      if (best_cut >= 0 && (bound < 0 || best_cut < bound)) bound = best_cut;
    }
    require(bound >= 0, ErrorCode::Internal, "no grouped cut exists");
    return bound;
  }

  void enumerate_paths(Vertex s, Vertex t) {
    std::vector<EdgeId> stack;
    std::vector<bool> visited(g.n(), false);
    enumerate_from(s, t, stack, visited);
  }

  void enumerate_from(Vertex v, Vertex t, std::vector<EdgeId>& stack,
                      std::vector<bool>& visited) {
    if (v == t) {
      paths.push_back(stack);
      return;
    }
    visited[v] = true;
    for (auto [w, e] : g.adjacency(v)) {
      if (visited[w] || g.edge(e).cap == 0) continue;
      stack.push_back(e);
      enumerate_from(w, t, stack, visited);
      stack.pop_back();
    }
    visited[v] = false;
  }

  void search(std::size_t index, Cap current) {
    best = std::max(best, current);
    if (index == paths.size()) return;
    if (current + grouped_cut_bound() <= best) return;
    Cap room = residual[paths[index].front()];
    for (EdgeId e : paths[index]) room = std::min(room, residual[e]);
    for (Cap mult = room; mult >= 0; --mult) {
      for (EdgeId e : paths[index]) residual[e] -= mult;
      search(index + 1, current + mult);
      for (EdgeId e : paths[index]) residual[e] += mult;
    }
  }
};

}  // namespace

Cap oracle_max_integral_biflow(const Instance& inst) {
  const Graph& g = inst.g;
  require(g.n() <= 8, ErrorCode::TooLarge,
          "exhaustive solver is limited to 8 vertices");
  for (EdgeId e = 0; e < g.m(); ++e)
    require(g.edge(e).cap <= 3, ErrorCode::TooLarge,
            "exhaustive solver is limited to capacity 3");

  OracleState state{g,
                    {inst.t.s1, inst.t.t1, inst.t.s2, inst.t.t2},
                    {},
                    {},
                    0,
                    0};
  state.residual.resize(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) state.residual[e] = g.edge(e).cap;
  state.enumerate_paths(inst.t.s1, inst.t.t1);
  state.commodity2_start = state.paths.size();
  state.enumerate_paths(inst.t.s2, inst.t.t2);
  auto by_length = [](const std::vector<EdgeId>& a,
                      const std::vector<EdgeId>& b) {
    return a.size() < b.size();
  };
  std::stable_sort(state.paths.begin(),
                   state.paths.begin() + state.commodity2_start, by_length);
  std::stable_sort(state.paths.begin() + state.commodity2_start,
                   state.paths.end(), by_length);
  state.search(0, 0);
  return state.best;
}

}  // namespace biflow
