#include "biflow/flowops.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace biflow {

std::vector<Cap> divergence(const Graph& g, const ArcFlow& f) {
  std::vector<Cap> div(g.n(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    div[ed.u] += f.fwd[e] - f.bwd[e];
    div[ed.v] += f.bwd[e] - f.fwd[e];
  }
  return div;
}

Cap flow_value(const Graph& g, const ArcFlow& f, Vertex s) {
  Cap value = 0;
  for (auto [w, e] : g.adjacency(s)) {
    const Edge& ed = g.edge(e);
    value += ed.u == s ? f.fwd[e] - f.bwd[e] : f.bwd[e] - f.fwd[e];
  }
  return value;
}

void normalize(ArcFlow& f) {
  for (int e = 0; e < f.size(); ++e) {
    Cap cancel = std::min(f.fwd[e], f.bwd[e]);
    f.fwd[e] -= cancel;
    f.bwd[e] -= cancel;
  }
}

ArcFlow reverse_flow(const ArcFlow& f) {
  ArcFlow out = f;
  out.fwd.swap(out.bwd);
  return out;
}

ArcFlow add_flows(const ArcFlow& a, const ArcFlow& b) {
  require(a.size() == b.size(), ErrorCode::Internal, "flow size mismatch");
  ArcFlow out(a.size());
  for (int e = 0; e < a.size(); ++e) {
    out.fwd[e] = a.fwd[e] + b.fwd[e];
    out.bwd[e] = a.bwd[e] + b.bwd[e];
  }
  normalize(out);
  return out;
}

ArcFlow subtract_flows(const ArcFlow& a, const ArcFlow& b) {
  require(a.size() == b.size(), ErrorCode::Internal, "flow size mismatch");
  ArcFlow out(a.size());
  for (int e = 0; e < a.size(); ++e) {
    out.fwd[e] = a.fwd[e] - b.fwd[e];
    out.bwd[e] = a.bwd[e] - b.bwd[e];
    require(out.fwd[e] >= 0 && out.bwd[e] >= 0, ErrorCode::Internal,
            "flow difference is negative");
  }
  return out;
}

Cap verify_flow(const Graph& g, const ArcCaps& caps, const ArcFlow& f,
                Vertex s, Vertex t) {
  require(f.size() == g.m(), ErrorCode::NotAFlow, "flow size mismatch");
  for (EdgeId e = 0; e < g.m(); ++e) {
    require(f.fwd[e] >= 0 && f.bwd[e] >= 0, ErrorCode::NotAFlow,
            "negative flow");
    require(f.fwd[e] == 0 || f.bwd[e] == 0, ErrorCode::NotAFlow,
            "flow not normalized");
    require(f.fwd[e] <= caps.fwd[e] && f.bwd[e] <= caps.bwd[e],
            ErrorCode::NotAFlow, "flow exceeds capacity");
  }
  std::vector<Cap> div = divergence(g, f);
  for (Vertex v = 0; v < g.n(); ++v)
    require(v == s || v == t || div[v] == 0, ErrorCode::NotAFlow,
            "flow not conserved at " + g.name(v));
  require(div[s] >= 0 && div[s] + div[t] == 0, ErrorCode::NotAFlow,
          "flow endpoints unbalanced");
  return div[s];
}

namespace {

Cap& walk_flow(ArcFlow& f, const Edge& ed, EdgeId e, Vertex from) {
  return ed.u == from ? f.fwd[e] : f.bwd[e];
}

}  // namespace

PathDecomposition decompose(const Graph& g, const ArcFlow& f,
                            std::span<const Vertex> sources,
                            std::span<const Vertex> sinks) {
  std::vector<Cap> surplus = divergence(g, f);
  std::vector<int> role(g.n(), 0);  // +1 source, -1 sink
  for (Vertex v : sources) role[v] = 1;
  for (Vertex v : sinks) {
    require(role[v] == 0, ErrorCode::OverlappingCutSides,
            "decomposition endpoint sets intersect");
    role[v] = -1;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    bool ok = (role[v] == 0 && surplus[v] == 0) ||
              (role[v] == 1 && surplus[v] >= 0) ||
              (role[v] == -1 && surplus[v] <= 0);
    require(ok, ErrorCode::NotAFlow,
            "divergence has the wrong sign at " + g.name(v));
  }

  ArcFlow work = f;
  normalize(work);
  PathDecomposition out;
  std::vector<Vertex> parent_v(g.n());
  std::vector<EdgeId> parent_e(g.n());
  for (Vertex s : sources) {
    while (surplus[s] > 0) {
      // BFS along arcs with remaining flow to any sink still in deficit.
      std::vector<char> seen(g.n(), 0);
      std::deque<Vertex> queue = {s};
      seen[s] = 1;
      Vertex found = -1;
      while (!queue.empty() && found < 0) {
        Vertex v = queue.front();
        queue.pop_front();
        for (auto [w, e] : g.adjacency(v)) {
          if (seen[w] || walk_flow(work, g.edge(e), e, v) <= 0) continue;
          seen[w] = 1;
          parent_v[w] = v;
          parent_e[w] = e;
          if (role[w] == -1 && surplus[w] < 0) {
            found = w;
            break;
          }
          queue.push_back(w);
        }
      }
      require(found >= 0, ErrorCode::Internal,
              "flow surplus cannot reach any sink");
      std::vector<Vertex> path = {found};
      for (Vertex v = found; v != s; v = parent_v[v])
        path.push_back(parent_v[v]);
      std::reverse(path.begin(), path.end());
      Cap delta = std::min(surplus[s], -surplus[found]);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        EdgeId e = *g.edge_between(path[i], path[i + 1]);
        delta = std::min(delta, walk_flow(work, g.edge(e), e, path[i]));
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        EdgeId e = *g.edge_between(path[i], path[i + 1]);
        walk_flow(work, g.edge(e), e, path[i]) -= delta;
      }
      surplus[s] -= delta;
      surplus[found] += delta;
      out.paths.push_back({delta, std::move(path)});
    }
  }
  return out;
}

ArcFlow flow_from_paths(const Graph& g, std::span<const PathFlow> paths) {
  ArcFlow f(g.m());
  for (const PathFlow& p : paths) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      auto e = g.edge_between(p.vertices[i], p.vertices[i + 1]);
      require(e.has_value(), ErrorCode::Internal, "path uses a missing edge");
      walk_flow(f, g.edge(*e), *e, p.vertices[i]) += p.mult;
    }
  }
  normalize(f);
  return f;
}

std::vector<Vertex> shortcut_walk(const std::vector<Vertex>& walk) {
  std::vector<Vertex> out;
  std::unordered_map<Vertex, int> pos;
  for (Vertex v : walk) {
    auto it = pos.find(v);
    if (it != pos.end()) {
      int keep = it->second;
      while (static_cast<int>(out.size()) > keep + 1) {
        pos.erase(out.back());
        out.pop_back();
      }
    } else {
      pos.emplace(v, static_cast<int>(out.size()));
      out.push_back(v);
    }
  }
  return out;
}

namespace {

struct ClassifiedPaths {
  std::vector<PathFlow> pure1, pure2, mixed13, mixed24;  // by endpoints

  Cap total(const std::vector<PathFlow>& v) const {
    Cap s = 0;
    for (const PathFlow& p : v) s += p.mult;
    return s;
  }
};

ClassifiedPaths classify(PathDecomposition d, const Terminals& t) {
  ClassifiedPaths c;
  for (PathFlow& p : d.paths) {
    if (p.mult == 0) continue;
    require(p.vertices.size() >= 2, ErrorCode::Internal, "degenerate path");
    Vertex a = p.vertices.front(), b = p.vertices.back();
    if (a == t.s1 && b == t.t1)
      c.pure1.push_back(std::move(p));
    else if (a == t.s2 && b == t.t2)
      c.pure2.push_back(std::move(p));
    else if (a == t.s1 && b == t.t2)
      c.mixed13.push_back(std::move(p));
    else if (a == t.s2 && b == t.t1)
      c.mixed24.push_back(std::move(p));
    else
      fail(ErrorCode::Internal, "path with unexpected endpoints");
  }
  return c;
}

}  // namespace

PathDecomposition uncross(const Graph& g, PathDecomposition d,
                          const Terminals& t, UncrossTrace* trace) {
  ClassifiedPaths c = classify(std::move(d), t);
  Cap crossing = c.total(c.mixed13);
  require(crossing == c.total(c.mixed24), ErrorCode::Internal,
          "mixed path classes unbalanced");
  Cap into_t1 = c.total(c.pure1) + c.total(c.mixed24);
  Cap into_t2 = c.total(c.pure2) + c.total(c.mixed13);
  if (trace) {
    trace->initial_total = into_t1 + into_t2;
    trace->initial_crossing = crossing;
  }

  Cap guard = crossing + 1;
  std::size_t i13 = 0, i24 = 0;
  while (crossing > 0) {
    require(guard-- > 0, ErrorCode::Internal, "uncrossing failed to make progress");
    while (i13 < c.mixed13.size() && c.mixed13[i13].mult == 0) ++i13;
    while (i24 < c.mixed24.size() && c.mixed24[i24].mult == 0) ++i24;
    require(i13 < c.mixed13.size() && i24 < c.mixed24.size(),
            ErrorCode::Internal, "mixed path classes unbalanced");
    PathFlow& p = c.mixed13[i13];
    PathFlow& q = c.mixed24[i24];

    std::unordered_map<Vertex, std::size_t> q_pos;
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
      q_pos.emplace(q.vertices[i], i);
    std::size_t pi = 0, qi = 0;
    Vertex shared = -1;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (auto it = q_pos.find(p.vertices[i]); it != q_pos.end()) {
        shared = p.vertices[i];
        pi = i;
        qi = it->second;
        break;
      }
    }
    require(shared >= 0, ErrorCode::NotCrossing,
            "mixed paths are vertex-disjoint");

    Cap delta = std::min(p.mult, q.mult);
    std::vector<Vertex> w1(p.vertices.begin(), p.vertices.begin() + pi + 1);
    w1.insert(w1.end(), q.vertices.begin() + qi + 1, q.vertices.end());
    std::vector<Vertex> w2(q.vertices.begin(), q.vertices.begin() + qi + 1);
    w2.insert(w2.end(), p.vertices.begin() + pi + 1, p.vertices.end());
    p.mult -= delta;
    q.mult -= delta;
    c.pure1.push_back({delta, shortcut_walk(w1)});
    c.pure2.push_back({delta, shortcut_walk(w2)});
    crossing -= delta;

    require(c.total(c.mixed13) == crossing && c.total(c.mixed24) == crossing,
            ErrorCode::Internal, "uncrossing lost mixed balance");
    require(c.total(c.pure1) + crossing == into_t1 &&
                c.total(c.pure2) + crossing == into_t2,
            ErrorCode::Internal, "uncrossing lost terminal totals");
    require(c.pure1.back().vertices.front() == t.s1 &&
                c.pure1.back().vertices.back() == t.t1 &&
                c.pure2.back().vertices.front() == t.s2 &&
                c.pure2.back().vertices.back() == t.t2,
            ErrorCode::Internal, "uncrossing produced wrong endpoints");
    if (trace)
      trace->steps.push_back({shared, delta, crossing + delta, crossing});
  }

  PathDecomposition out;
  for (auto* cls : {&c.pure1, &c.pure2})
    for (PathFlow& p : *cls)
      if (p.mult > 0) out.paths.push_back(std::move(p));
  return out;
}

FlowDispenser::FlowDispenser(const Graph& g, const ArcFlow& f, Vertex source,
                             Vertex sink)
    : g_(&g) {
  std::array<Vertex, 1> sources = {source}, sinks = {sink};
  paths_ = decompose(g, f, sources, sinks).paths;
  for (const PathFlow& p : paths_) remaining_ += p.mult;
}

ArcFlow FlowDispenser::take(Cap units) {
  require(units >= 0 && units <= remaining_, ErrorCode::Internal,
          "dispenser cannot supply requested flow");
  remaining_ -= units;
  std::vector<PathFlow> part;
  while (units > 0) {
    PathFlow& p = paths_[next_];
    if (p.mult == 0) {
      ++next_;
      continue;
    }
    Cap use = std::min(units, p.mult);
    part.push_back({use, p.vertices});
    p.mult -= use;
    units -= use;
  }
  return flow_from_paths(*g_, part);
}

ArcFlow concatenate(const Graph& g, const ArcFlow& fa, Vertex a, Vertex mid,
                    const ArcFlow& fb, Vertex b, Cap k) {
  FlowDispenser da(g, fa, a, mid);
  FlowDispenser db(g, fb, mid, b);
  return add_flows(da.take(k), db.take(k));
}

ArcFlow transport_flow(const Graph& from, const ArcFlow& f, const Graph& to) {
  ArcFlow out(to.m());
  for (EdgeId e = 0; e < from.m(); ++e) {
    if (f.fwd[e] == 0 && f.bwd[e] == 0) continue;
    const Edge& ed = from.edge(e);
    auto u = to.find_vertex(from.name(ed.u));
    auto v = to.find_vertex(from.name(ed.v));
    require(u.has_value() && v.has_value(), ErrorCode::Internal,
            "flow endpoint missing in target graph");
    auto te = to.edge_between(*u, *v);
    require(te.has_value(), ErrorCode::Internal,
            "flow edge missing in target graph");
    bool same = to.edge(*te).u == *u;
    out.fwd[*te] += same ? f.fwd[e] : f.bwd[e];
    out.bwd[*te] += same ? f.bwd[e] : f.fwd[e];
  }
  return out;
}

}  // namespace biflow
