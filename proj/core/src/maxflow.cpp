#include "biflow/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace biflow {
namespace {

struct Dinic {
  struct Arc {
    int to;
    Cap cap;
  };

  int n;
  std::vector<Arc> arcs;  // arc 2k and 2k+1 are each other's reverse
  std::vector<std::vector<int>> adj;
  std::vector<int> level;
  std::vector<std::size_t> iter;

  explicit Dinic(int vertices) : n(vertices), adj(vertices) {}

  int add_arc(int u, int v, Cap fwd, Cap bwd) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({v, fwd});
    arcs.push_back({u, bwd});
    adj[u].push_back(id);
    adj[v].push_back(id + 1);
    return id;
  }

  bool bfs(int s, int t) {
    level.assign(n, -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj[v]) {
        int w = arcs[a].to;
        if (arcs[a].cap > 0 && level[w] == -1) {
          level[w] = level[v] + 1;
          q.push(w);
        }
      }
    }
    return level[t] >= 0;
  }

  Cap dfs(int v, int t, Cap limit) {
    if (v == t) return limit;
    for (std::size_t& i = iter[v]; i < adj[v].size(); ++i) {
      int a = adj[v][i];
      int w = arcs[a].to;
      if (arcs[a].cap <= 0 || level[w] != level[v] + 1) continue;
      Cap pushed = dfs(w, t, std::min(limit, arcs[a].cap));
      if (pushed > 0) {
        arcs[a].cap -= pushed;
        arcs[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    level[v] = -1;
    return 0;
  }

  Cap run(int s, int t, Cap inf) {
    Cap total = 0;
    while (bfs(s, t)) {
      iter.assign(n, 0);
      while (Cap pushed = dfs(s, t, inf)) total += pushed;
    }
    return total;
  }
};

struct Net {
  Dinic dinic;
  std::vector<int> edge_arc;  // forward-arc id per edge, -1 if capacity-free
  int source, sink;

  Net(const Graph& g, const ArcCaps& caps, std::span<const Vertex> sources,
      std::span<const Vertex> sinks, Cap per_source_cap)
      : dinic(g.n() + 2), source(g.n()), sink(g.n() + 1) {
    edge_arc.assign(g.m(), -1);
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (caps.fwd[e] == 0 && caps.bwd[e] == 0) continue;
      const Edge& ed = g.edge(e);
      edge_arc[e] = dinic.add_arc(ed.u, ed.v, caps.fwd[e], caps.bwd[e]);
    }
    for (Vertex s : sources) dinic.add_arc(source, s, per_source_cap, 0);
    for (Vertex t : sinks) dinic.add_arc(t, sink, per_source_cap, 0);
  }

  ArcFlow extract(const Graph& g, const ArcCaps& caps) const {
    ArcFlow f(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (edge_arc[e] < 0) continue;
      Cap net = caps.fwd[e] - dinic.arcs[edge_arc[e]].cap;
      f.fwd[e] = std::max<Cap>(net, 0);
      f.bwd[e] = std::max<Cap>(-net, 0);
    }
    return f;
  }
};

void check_endpoints(const Graph& g, std::span<const Vertex> sources,
                     std::span<const Vertex> sinks) {
  require(!sources.empty() && !sinks.empty(), ErrorCode::BadTerminals,
          "flow computation needs at least one source and one sink");
  for (Vertex v : sources)
    require(v >= 0 && v < g.n(), ErrorCode::BadTerminals, "bad source vertex");
  for (Vertex v : sinks)
    require(v >= 0 && v < g.n(), ErrorCode::BadTerminals, "bad sink vertex");
  for (Vertex s : sources)
    for (Vertex t : sinks)
      require(s != t, ErrorCode::OverlappingCutSides,
              "source and sink sides intersect at " + g.name(s));
}

}  // namespace

MaxflowResult max_flow(const Graph& g, const ArcCaps& caps,
                       std::span<const Vertex> sources,
                       std::span<const Vertex> sinks) {
  check_endpoints(g, sources, sinks);
  Cap inf = g.sentinel() + std::max<Cap>(g.sentinel(), 1);
  Net net(g, caps, sources, sinks, inf);
  MaxflowResult out;
  out.value = net.dinic.run(net.source, net.sink, inf);
  out.flow = net.extract(g, caps);
  for (Vertex v = 0; v < g.n(); ++v)
    if (net.dinic.level[v] >= 0) out.cut.push_back(v);
  Cap crossing = cut_capacity(g, caps, out.cut);
  require(crossing == out.value, ErrorCode::Internal,
          "minimum cut does not match flow value");
  return out;
}

MaxflowResult max_flow(const Graph& g, const ArcCaps& caps, Vertex s,
                       Vertex t) {
  std::array<Vertex, 1> sources = {s}, sinks = {t};
  return max_flow(g, caps, sources, sinks);
}

ArcFlow flow_of_value(const Graph& g, const ArcCaps& caps, Vertex s, Vertex t,
                      Cap k) {
  std::array<Vertex, 1> sources = {s}, sinks = {t};
  check_endpoints(g, sources, sinks);
  require(k >= 0, ErrorCode::ValueInfeasible, "negative flow value requested");
  Net net(g, caps, sources, sinks, k);
  Cap pushed = net.dinic.run(net.source, net.sink, g.sentinel() + 1);
  require(pushed == k, ErrorCode::ValueInfeasible,
          "no flow of value " + std::to_string(k) + " from " + g.name(s) +
              " to " + g.name(t));
  return net.extract(g, caps);
}

ArcCaps residual_capacity(const ArcCaps& caps, const ArcFlow& f) {
  ArcCaps out(caps.size());
  for (int e = 0; e < caps.size(); ++e) {
    out.fwd[e] = caps.fwd[e] - f.fwd[e] + f.bwd[e];
    out.bwd[e] = caps.bwd[e] - f.bwd[e] + f.fwd[e];
    require(out.fwd[e] >= 0 && out.bwd[e] >= 0, ErrorCode::NotAFlow,
            "flow exceeds capacity");
  }
  return out;
}

Cap cut_capacity(const Graph& g, const ArcCaps& caps,
                 std::span<const Vertex> side) {
  std::vector<bool> in(g.n(), false);
  for (Vertex v : side) in[v] = true;
  Cap total = 0;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[ed.u] && !in[ed.v]) total += caps.fwd[e];
    if (in[ed.v] && !in[ed.u]) total += caps.bwd[e];
  }
  return total;
}

}  // namespace biflow
