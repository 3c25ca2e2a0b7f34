#include "biflow/planar.hpp"

#include <algorithm>

#include "biflow/bicut.hpp"
#include "biflow/maxflow.hpp"

namespace biflow {

namespace {

// Splits an uncrossed decomposition into the two commodities by path origin.
Biflow split_by_source(const Graph& g, const PathDecomposition& d, Vertex a1,
                       Vertex a2) {
  std::vector<PathFlow> p1, p2;
  for (const PathFlow& p : d.paths) {
    require(!p.vertices.empty(), ErrorCode::Internal, "empty path");
    if (p.vertices.front() == a1) {
      p1.push_back(p);
    } else {
      require(p.vertices.front() == a2, ErrorCode::Internal,
              "path starts at a non-source");
      p2.push_back(p);
    }
  }
  return Biflow{flow_from_paths(g, p1), flow_from_paths(g, p2)};
}

// One run of the crossing-exchange pipeline: route k1 units for commodity
// one, k2 units for commodity two in the leftover capacity, superpose, and
// exchange mixed path pairs until every path serves its own commodity.
Biflow crossing_pipeline(const Graph& g, const ArcCaps& caps, Vertex a1,
                         Vertex b1, Vertex a2, Vertex b2, Cap k1, Cap k2,
                         UncrossTrace* trace) {
  ArcFlow first = flow_of_value(g, caps, a1, b1, k1);
  ArcCaps leftover = residual_capacity(caps, first);
  ArcFlow second = flow_of_value(g, leftover, a2, b2, k2);
  ArcFlow joint = add_flows(first, second);
  const std::array<Vertex, 2> sources = {a1, a2};
  const std::array<Vertex, 2> sinks = {b1, b2};
  PathDecomposition d = decompose(g, joint, sources, sinks);
  Terminals t;
  t.s1 = a1;
  t.t1 = b1;
  t.s2 = a2;
  t.t2 = b2;
  d = uncross(g, std::move(d), t, trace);
  Biflow out = split_by_source(g, d, a1, a2);
  require(flow_value(g, out.f1, a1) == k1 && flow_value(g, out.f2, a2) == k2,
          ErrorCode::Internal, "exchange changed commodity totals");
  return out;
}

// Both commodities share one endpoint: route them together out of the shared
// vertex toward an auxiliary sink that meters each target separately, then
// split the paths by their last stop.
Biflow shared_endpoint(const Graph& g, const ArcCaps& caps, Vertex x,
                       Vertex c1, Cap k1, Vertex c2, Cap k2) {
  Graph ext = g;
  Vertex t = ext.add_vertex(ext.fresh_vertex_name("meter"));
  EdgeId m1 = ext.add_edge(c1, t, k1);
  EdgeId m2 = ext.add_edge(c2, t, k2);
  ArcCaps ext_caps = caps;
  ext_caps.fwd.resize(ext.m(), 0);
  ext_caps.bwd.resize(ext.m(), 0);
  ext_caps.fwd[m1] = k1;  // stored orientations run toward the meter
  ext_caps.fwd[m2] = k2;
  ArcFlow f = flow_of_value(ext, ext_caps, x, t, k1 + k2);
  const std::array<Vertex, 1> sources = {x};
  const std::array<Vertex, 1> sinks = {t};
  PathDecomposition d = decompose(ext, f, sources, sinks);
  std::vector<PathFlow> p1, p2;
  for (PathFlow& p : d.paths) {
    require(p.vertices.size() >= 3, ErrorCode::Internal,
            "metered path too short");
    Vertex last_stop = p.vertices[p.vertices.size() - 2];
    p.vertices.pop_back();
    if (last_stop == c1) {
      p1.push_back(std::move(p));
    } else {
      require(last_stop == c2, ErrorCode::Internal,
              "metered path ends astray");
      p2.push_back(std::move(p));
    }
  }
  ArcFlow f1 = flow_from_paths(ext, p1);
  ArcFlow f2 = flow_from_paths(ext, p2);
  f1.fwd.resize(g.m());
  f1.bwd.resize(g.m());
  f2.fwd.resize(g.m());
  f2.bwd.resize(g.m());
  return Biflow{std::move(f1), std::move(f2)};
}

}  // namespace

ValueTargets max_value_targets(const Graph& g, const ArcCaps& caps,
                               const Terminals& t) {
  const Cap tau1 = max_flow(g, caps, t.s1, t.t1).value;
  const Cap tau = min_bicut(g, caps, t.s1, t.t1, t.s2, t.t2).value;
  ValueTargets out;
  out.k1 = std::min(tau1, tau);
  out.k2 = tau - out.k1;
  return out;
}

Biflow biflow_with_values(const Graph& g, const ArcCaps& caps, Vertex a1,
                          Vertex b1, Vertex a2, Vertex b2, Cap k1, Cap k2,
                          UncrossTrace* trace) {
  require(a1 != b1 && a2 != b2, ErrorCode::BadTerminals,
          "each commodity needs two distinct endpoints");
  require(k1 >= 0 && k2 >= 0, ErrorCode::ValueInfeasible,
          "requested values must be nonnegative");
  require(max_flow(g, caps, a1, b1).value >= k1, ErrorCode::ValueInfeasible,
          "commodity 1 exceeds its minimum cut");
  require(max_flow(g, caps, a2, b2).value >= k2, ErrorCode::ValueInfeasible,
          "commodity 2 exceeds its minimum cut");
  require(min_bicut(g, caps, a1, b1, a2, b2).value >= k1 + k2,
          ErrorCode::ValueInfeasible, "combined value exceeds the bicut");

  if (a1 == a2 && b1 == b2) {
    FlowDispenser disp(g, flow_of_value(g, caps, a1, b1, k1 + k2), a1, b1);
    ArcFlow f1 = disp.take(k1);
    ArcFlow f2 = disp.take(k2);
    return Biflow{std::move(f1), std::move(f2)};
  }
  if (a1 == b2 && b1 == a2) {
    FlowDispenser disp(g, flow_of_value(g, caps, a1, b1, k1 + k2), a1, b1);
    ArcFlow f1 = disp.take(k1);
    ArcFlow f2 = reverse_flow(disp.take(k2));
    return Biflow{std::move(f1), std::move(f2)};
  }
  if (a1 == a2) {
    return shared_endpoint(g, caps, a1, b1, k1, b2, k2);
  }
  if (b1 == b2) {
    Biflow r = shared_endpoint(g, caps, b1, a1, k1, a2, k2);
    return Biflow{reverse_flow(r.f1), reverse_flow(r.f2)};
  }
  if (a1 == b2) {
    Biflow r = shared_endpoint(g, caps, a1, b1, k1, a2, k2);
    return Biflow{std::move(r.f1), reverse_flow(r.f2)};
  }
  if (b1 == a2) {
    Biflow r = shared_endpoint(g, caps, b1, a1, k1, b2, k2);
    return Biflow{reverse_flow(r.f1), std::move(r.f2)};
  }

  try {
    return crossing_pipeline(g, caps, a1, b1, a2, b2, k1, k2, trace);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NotCrossing) throw;
  }
  Biflow swapped =
      crossing_pipeline(g, caps, a1, b1, b2, a2, k1, k2, trace);
  return Biflow{std::move(swapped.f1), reverse_flow(swapped.f2)};
}

ValueTargets max_value_targets(const Instance& inst) {
  return max_value_targets(inst.g, undirected_caps(inst.g), inst.t);
}

Biflow solve_planar(const Instance& inst, Cap k1, Cap k2,
                    UncrossTrace* trace) {
  ArcCaps caps = undirected_caps(inst.g);
  return biflow_with_values(inst.g, caps, inst.t.s1, inst.t.t1, inst.t.s2,
                            inst.t.t2, k1, k2, trace);
}

Biflow solve_planar(const Instance& inst, UncrossTrace* trace) {
  ValueTargets k = max_value_targets(inst);
  return solve_planar(inst, k.k1, k.k2, trace);
}

}  // namespace biflow
