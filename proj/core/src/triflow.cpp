#include "biflow/triflow.hpp"

#include <array>

#include "biflow/flowops.hpp"
#include "biflow/maxflow.hpp"

namespace biflow {

ArcCaps transpose_caps(const ArcCaps& caps) {
  ArcCaps out = caps;
  out.fwd.swap(out.bwd);
  return out;
}

TriflowResult triflow_from_source(const Graph& g, const ArcCaps& caps,
                                  Vertex x, Vertex y, Vertex z) {
  require(x != y && x != z && y != z, ErrorCode::BadTerminals,
          "triflow needs three distinct vertices");
  TriflowResult out;
  out.tau = max_flow(g, caps, x, y).value;
  std::array<Vertex, 1> sources = {x};
  std::array<Vertex, 2> sinks = {y, z};
  out.tau_x = max_flow(g, caps, sources, sinks).value;

  // Collect both deliveries at an auxiliary sink, clamping the share of y to
  // tau; the combined maximum stays tau_x, and splitting the result by the
  // final hop of each path yields the compatible pair.
  Graph ext = g;
  Vertex t = ext.add_vertex(ext.fresh_vertex_name("tri"));
  EdgeId ey = ext.add_edge(y, t, out.tau);
  EdgeId ez = ext.add_edge(z, t, out.tau_x - out.tau);
  ArcCaps ext_caps(ext.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    ext_caps.fwd[e] = caps.fwd[e];
    ext_caps.bwd[e] = caps.bwd[e];
  }
  ext_caps.fwd[ey] = out.tau;
  ext_caps.fwd[ez] = out.tau_x - out.tau;

  MaxflowResult mf = max_flow(ext, ext_caps, x, t);
  require(mf.value == out.tau_x, ErrorCode::Internal,
          "clamped delivery lost flow");

  std::array<Vertex, 1> ext_sinks = {t};
  PathDecomposition d = decompose(ext, mf.flow, sources, ext_sinks);
  std::vector<PathFlow> via_y, via_z;
  for (PathFlow& p : d.paths) {
    require(p.vertices.size() >= 3 && p.vertices.back() == t,
            ErrorCode::Internal, "delivery path misses the auxiliary sink");
    Vertex last = p.vertices[p.vertices.size() - 2];
    p.vertices.pop_back();
    if (last == y)
      via_y.push_back(std::move(p));
    else if (last == z)
      via_z.push_back(std::move(p));
    else
      fail(ErrorCode::Internal, "delivery path ends off target");
  }
  out.f1 = flow_from_paths(g, via_y);
  out.f2 = flow_from_paths(g, via_z);
  return out;
}

TriflowResult triflow_to_sink(const Graph& g, const ArcCaps& caps, Vertex x,
                              Vertex y, Vertex z) {
  TriflowResult out = triflow_from_source(g, transpose_caps(caps), x, y, z);
  out.f1 = reverse_flow(out.f1);
  out.f2 = reverse_flow(out.f2);
  return out;
}

}  // namespace biflow
