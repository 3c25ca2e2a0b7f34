#include "biflow/gluing.hpp"

#include <algorithm>
#include <utility>

#include "biflow/bicut.hpp"
#include "biflow/maxflow.hpp"
#include "biflow/planar.hpp"
#include "biflow/triflow.hpp"

namespace biflow {

DirectAddback zero_direct_edges(Instance& inst) {
  DirectAddback add;
  add.c1 = inst.g.edge(inst.e1).cap;
  add.c2 = inst.g.edge(inst.e2).cap;
  inst.g.set_capacity(inst.e1, 0);
  inst.g.set_capacity(inst.e2, 0);
  return add;
}

void apply_direct_addback(const Instance& inst, const DirectAddback& add,
                          Biflow& b) {
  const Edge& e1 = inst.g.edge(inst.e1);
  (e1.u == inst.t.s1 ? b.f1.fwd : b.f1.bwd)[inst.e1] += add.c1;
  const Edge& e2 = inst.g.edge(inst.e2);
  (e2.u == inst.t.s2 ? b.f2.fwd : b.f2.bwd)[inst.e2] += add.c2;
  normalize(b.f1);
  normalize(b.f2);
}

Consistency consistency(const SideCuts& c) {
  Consistency out;
  if (c.tau_s[0] >= c.tau_t[0] && c.tau_s[1] >= c.tau_t[1]) {
    out.consistent = true;
    out.source_dominant = true;
  } else if (c.tau_t[0] >= c.tau_s[0] && c.tau_t[1] >= c.tau_s[1]) {
    out.consistent = true;
    out.source_dominant = false;
  }
  return out;
}

namespace {

ArcCaps masked_caps(const ArcCaps& caps, const std::vector<char>& mask) {
  ArcCaps out(static_cast<int>(mask.size()));
  for (std::size_t e = 0; e < mask.size(); ++e) {
    if (mask[e]) {
      out.fwd[e] = caps.fwd[e];
      out.bwd[e] = caps.bwd[e];
    }
  }
  return out;
}

SideCuts side_cuts(const Graph& g, const ArcCaps& caps,
                   const std::vector<char>& mask_u,
                   const std::vector<char>& mask_v, Vertex s, Vertex t,
                   Vertex hub_u, Vertex hub_v) {
  SideCuts out;
  const std::vector<char>* masks[2] = {&mask_u, &mask_v};
  const Vertex hubs[2] = {hub_u, hub_v};
  for (int i = 0; i < 2; ++i) {
    ArcCaps piece = masked_caps(caps, *masks[i]);
    const std::array<Vertex, 1> src = {s};
    const std::array<Vertex, 1> snk = {t};
    const std::array<Vertex, 2> rest_s = {t, hubs[i]};
    const std::array<Vertex, 2> rest_t = {s, hubs[i]};
    out.tau_s[i] = max_flow(g, piece, src, rest_s).value;
    out.tau_t[i] = max_flow(g, piece, rest_t, snk).value;
    out.tau[i] = max_flow(g, piece, s, t).value;
  }
  return out;
}

// Triflow on one piece, oriented by the dominant terminal: g carries the
// terminal-to-terminal share, h the surplus between the dominant terminal
// and the hub (outward when the source dominates, inward otherwise).
struct PieceTriflow {
  ArcFlow g, h;
  Cap tau = 0, extra = 0;
};

PieceTriflow piece_triflow(const Graph& g, const ArcCaps& caps,
                           const std::vector<char>& mask, Vertex s, Vertex t,
                           Vertex hub, bool source_dominant) {
  ArcCaps piece = masked_caps(caps, mask);
  PieceTriflow out;
  if (source_dominant) {
    TriflowResult r = triflow_from_source(g, piece, s, t, hub);
    out.g = std::move(r.f1);  // s -> t, value tau
    out.h = std::move(r.f2);  // s -> hub, value tau_x - tau
    out.tau = r.tau;
    out.extra = r.tau_x - r.tau;
  } else {
    TriflowResult r = triflow_to_sink(g, piece, t, s, hub);
    out.g = std::move(r.f1);  // s -> t, value tau
    out.h = std::move(r.f2);  // hub -> t, value tau_x - tau
    out.tau = r.tau;
    out.extra = r.tau_x - r.tau;
  }
  return out;
}

// Case 1: the (s,t) side is consistent.  Builds that commodity's flow from
// the two piece triflows and gives the other commodity a maximum flow in the
// rest of the graph, with the hub-to-hub edge boosted by the surplus the
// consistent side can carry between its hubs.  Returns {consistent-side
// flow, other-side flow}.
std::pair<ArcFlow, ArcFlow> solve_consistent(
    const Graph& g, const ArcCaps& caps, Vertex s, Vertex t, Vertex hub_u,
    Vertex hub_v, const std::vector<char>& mask_u,
    const std::vector<char>& mask_v, bool source_dominant, Vertex os,
    Vertex ot, const std::vector<char>& mask_central,
    const std::vector<char>& mask_o1, const std::vector<char>& mask_o2) {
  PieceTriflow pu = piece_triflow(g, caps, mask_u, s, t, hub_u,
                                  source_dominant);
  PieceTriflow pv = piece_triflow(g, caps, mask_v, s, t, hub_v,
                                  source_dominant);
  ArcFlow z_same = add_flows(pu.g, pv.g);
  const Cap theta = std::min(pu.extra, pv.extra);

  // Surplus transport between the hubs through the dominant terminal.
  ArcFlow h_uv, h_vu;
  if (source_dominant) {
    h_uv = concatenate(g, reverse_flow(pu.h), hub_u, s, pv.h, hub_v, theta);
    h_vu = concatenate(g, reverse_flow(pv.h), hub_v, s, pu.h, hub_u, theta);
  } else {
    h_uv = concatenate(g, pu.h, hub_u, t, reverse_flow(pv.h), hub_v, theta);
    h_vu = concatenate(g, pv.h, hub_v, t, reverse_flow(pu.h), hub_u, theta);
  }

  // The other commodity's playground: central part plus its own two pieces,
  // plus the hub edge carrying its real capacity and the surplus.
  Graph w = g;
  auto existing = g.edge_between(hub_u, hub_v);
  EdgeId uv = existing ? *existing : w.add_edge(hub_u, hub_v, 0);
  ArcCaps wcaps(w.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (mask_central[e] || mask_o1[e] || mask_o2[e]) {
      wcaps.fwd[e] = caps.fwd[e];
      wcaps.bwd[e] = caps.bwd[e];
    }
  }
  const Cap base = wcaps.fwd[uv];
  wcaps.fwd[uv] += theta;
  wcaps.bwd[uv] += theta;

  ArcFlow fp = max_flow(w, wcaps, os, ot).flow;
  normalize(fp);
  const Cap used = fp.fwd[uv] + fp.bwd[uv];
  const Cap excess = std::max<Cap>(0, used - base);
  require(excess <= theta, ErrorCode::Internal,
          "hub edge overloaded beyond its boost");
  ArcFlow reroute(g.m());
  if (excess > 0) {
    const bool runs_uv = (fp.fwd[uv] > 0) == (w.edge(uv).u == hub_u);
    (fp.fwd[uv] > 0 ? fp.fwd : fp.bwd)[uv] -= excess;
    FlowDispenser disp(g, runs_uv ? h_uv : h_vu, runs_uv ? hub_u : hub_v,
                       runs_uv ? hub_v : hub_u);
    reroute = disp.take(excess);
  }
  if (!existing) {
    require(fp.fwd[uv] == 0 && fp.bwd[uv] == 0, ErrorCode::Internal,
            "flow left on a hub edge the graph does not have");
    fp.fwd.resize(g.m());
    fp.bwd.resize(g.m());
  }
  return {std::move(z_same), add_flows(fp, reroute)};
}

// Case 2: both sides are inconsistent.  Each side sends its terminal shares
// directly and trades the surplus across the central part as an inner
// two-commodity problem between the hubs.
Biflow solve_inconsistent(const Graph& g, const ArcCaps& caps,
                          const GluingPieces& glue, const Terminals& t,
                          const SideCuts& c1, const SideCuts& c2,
                          UncrossTrace* trace) {
  // Normalize: piece A is the source-dominant piece of side 1, B the
  // sink-dominant one; C and D likewise on side 2.
  const bool a_is_u1 = c1.tau_s[0] > c1.tau_t[0];
  const Vertex wa = a_is_u1 ? glue.u1 : glue.v1;
  const Vertex wb = a_is_u1 ? glue.v1 : glue.u1;
  const auto& mask_a = glue.edge_in[a_is_u1 ? 1 : 2];
  const auto& mask_b = glue.edge_in[a_is_u1 ? 2 : 1];
  const bool c_is_u2 = c2.tau_s[0] > c2.tau_t[0];
  const Vertex wc = c_is_u2 ? glue.u2 : glue.v2;
  const Vertex wd = c_is_u2 ? glue.v2 : glue.u2;
  const auto& mask_c = glue.edge_in[c_is_u2 ? 3 : 4];
  const auto& mask_d = glue.edge_in[c_is_u2 ? 4 : 3];

  PieceTriflow pa = piece_triflow(g, caps, mask_a, t.s1, t.t1, wa, true);
  PieceTriflow pb = piece_triflow(g, caps, mask_b, t.s1, t.t1, wb, false);
  PieceTriflow pc = piece_triflow(g, caps, mask_c, t.s2, t.t2, wc, true);
  PieceTriflow pd = piece_triflow(g, caps, mask_d, t.s2, t.t2, wd, false);
  const Cap theta1 = std::min(pa.extra, pb.extra);
  const Cap theta2 = std::min(pc.extra, pd.extra);

  ArcCaps central = masked_caps(caps, glue.edge_in[0]);
  const Cap lambda = min_bicut(g, central, wa, wb, wc, wd).value;
  const Cap lambda1 = max_flow(g, central, wa, wb).value;
  const Cap lambda2 = max_flow(g, central, wc, wd).value;
  const Cap k1 = std::min(theta1, lambda1);
  const Cap k2 = std::min({theta2, lambda2, lambda - k1});

  Biflow r = biflow_with_values(g, central, wa, wb, wc, wd, k1, k2, trace);

  ArcFlow l1 = concatenate(g, concatenate(g, pa.h, t.s1, wa, r.f1, wb, k1),
                           t.s1, wb, pb.h, t.t1, k1);
  ArcFlow l2 = concatenate(g, concatenate(g, pc.h, t.s2, wc, r.f2, wd, k2),
                           t.s2, wd, pd.h, t.t2, k2);
  return Biflow{add_flows(add_flows(pa.g, pb.g), l1),
                add_flows(add_flows(pc.g, pd.g), l2)};
}

}  // namespace

Biflow solve_gluing(const Instance& inst, const GluingPieces& glue,
                    UncrossTrace* trace) {
  require(glue.u1 >= 0 && glue.v1 >= 0 && glue.u2 >= 0 && glue.v2 >= 0,
          ErrorCode::Internal, "gluing hubs incomplete");
  Instance work = inst;
  const DirectAddback add = zero_direct_edges(work);
  const Graph& g = work.g;
  const Terminals& t = work.t;
  ArcCaps caps = undirected_caps(g);

  SideCuts c1 = side_cuts(g, caps, glue.edge_in[1], glue.edge_in[2], t.s1,
                          t.t1, glue.u1, glue.v1);
  SideCuts c2 = side_cuts(g, caps, glue.edge_in[3], glue.edge_in[4], t.s2,
                          t.t2, glue.u2, glue.v2);
  Consistency k1 = consistency(c1);
  Consistency k2 = consistency(c2);

  Biflow b;
  if (k1.consistent) {
    auto [same, other] = solve_consistent(
        g, caps, t.s1, t.t1, glue.u1, glue.v1, glue.edge_in[1],
        glue.edge_in[2], k1.source_dominant, t.s2, t.t2, glue.edge_in[0],
        glue.edge_in[3], glue.edge_in[4]);
    b = Biflow{std::move(same), std::move(other)};
  } else if (k2.consistent) {
    auto [same, other] = solve_consistent(
        g, caps, t.s2, t.t2, glue.u2, glue.v2, glue.edge_in[3],
        glue.edge_in[4], k2.source_dominant, t.s1, t.t1, glue.edge_in[0],
        glue.edge_in[1], glue.edge_in[2]);
    b = Biflow{std::move(other), std::move(same)};
  } else {
    b = solve_inconsistent(g, caps, glue, t, c1, c2, trace);
  }
  apply_direct_addback(work, add, b);
  return b;
}

}  // namespace biflow
