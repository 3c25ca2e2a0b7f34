#include "biflow/bridges.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "biflow/gluing.hpp"
#include "biflow/maxflow.hpp"
#include "biflow/triflow.hpp"

namespace biflow {

int mixed_pair_index(const Terminals& t, Vertex a, Vertex b) {
  auto has = [&](Vertex x) { return a == x || b == x; };
  if (has(t.s1) && has(t.s2)) return 0;
  if (has(t.s1) && has(t.t2)) return 1;
  if (has(t.t1) && has(t.s2)) return 2;
  if (has(t.t1) && has(t.t2)) return 3;
  return -1;
}

void pair_endpoints(const Terminals& t, int pair, Vertex* from, Vertex* to) {
  switch (pair) {
    case 0: *from = t.s1; *to = t.s2; return;
    case 1: *from = t.s1; *to = t.t2; return;
    case 2: *from = t.s2; *to = t.t1; return;
    case 3: *from = t.t2; *to = t.t1; return;
    default: fail(ErrorCode::Internal, "bad mixed pair index");
  }
}

TinyBiflow tiny_biflow(const Cap w[kPairCount]) {
  const Cap a = w[0], b = w[1], c = w[2], d = w[3];
  TinyBiflow out;
  const Cap x1 = std::min(a, c);  // commodity 1 through s2
  const Cap x2 = std::min(b, d);  // commodity 1 through t2
  const Cap m1 = std::min(a - x1, b - x2);  // commodity 2 through s1
  const Cap m2 = std::min(c - x1, d - x2);  // commodity 2 through t1
  out.use1[0] = x1;
  out.use1[2] = x1;
  out.use1[1] = x2;
  out.use1[3] = x2;
  out.use2[0] = m1;
  out.use2[1] = m1;
  out.use2[2] = m2;
  out.use2[3] = m2;
  out.val1 = x1 + x2;
  out.val2 = m1 + m2;
  return out;
}

namespace {

ArcCaps caps_of_edges(const ArcCaps& caps, const std::vector<EdgeId>& edges) {
  ArcCaps sub(static_cast<int>(caps.fwd.size()));
  for (EdgeId e : edges) {
    sub.fwd[e] = caps.fwd[e];
    sub.bwd[e] = caps.bwd[e];
  }
  return sub;
}

// Stores a mixed-pair supply, flipping the flow into the canonical direction
// when needed.  `from` is the terminal the flow currently leaves.
void push_supply(std::vector<BridgeSupply>& out, const Terminals& t,
                 Vertex from, Vertex to, Cap value, ArcFlow flow,
                 bool direct_edge) {
  if (value <= 0) return;
  BridgeSupply s;
  s.pair = mixed_pair_index(t, from, to);
  require(s.pair >= 0, ErrorCode::Internal, "supply on a commodity pair");
  pair_endpoints(t, s.pair, &s.from, &s.to);
  s.value = value;
  s.flow = (s.from == from) ? std::move(flow) : reverse_flow(flow);
  s.direct_edge = direct_edge;
  out.push_back(std::move(s));
}

// Terminal pair and third foot of a three-feet bridge: any three distinct
// terminals contain exactly one commodity pair.
struct ThreeFeetRoles {
  Vertex s, t, r;
  int commodity;  // 1 or 2
};

ThreeFeetRoles three_feet_roles(const Terminals& t,
                                const std::vector<Vertex>& feet) {
  auto has = [&](Vertex x) {
    return std::find(feet.begin(), feet.end(), x) != feet.end();
  };
  ThreeFeetRoles roles{};
  if (has(t.s1) && has(t.t1)) {
    roles.s = t.s1;
    roles.t = t.t1;
    roles.r = has(t.s2) ? t.s2 : t.t2;
    roles.commodity = 1;
  } else {
    roles.s = t.s2;
    roles.t = t.t2;
    roles.r = has(t.s1) ? t.s1 : t.t1;
    roles.commodity = 2;
  }
  return roles;
}

// Triflow of one edge set between a commodity pair (s, t) and a third
// vertex r: g carries the s-t share, h the surplus between the dominant
// terminal and r.
struct ShareAndSurplus {
  ArcFlow g, h;
  Cap share = 0, surplus = 0;
  Vertex h_from = -1, h_to = -1;  // endpoints of h
};

ShareAndSurplus share_and_surplus(const Graph& g, const ArcCaps& caps,
                                  Vertex s, Vertex t, Vertex r) {
  const std::array<Vertex, 1> only_s = {s};
  const std::array<Vertex, 1> only_t = {t};
  const std::array<Vertex, 2> t_and_r = {t, r};
  const std::array<Vertex, 2> s_and_r = {s, r};
  const Cap tau_s = max_flow(g, caps, only_s, t_and_r).value;
  const Cap tau_t = max_flow(g, caps, s_and_r, only_t).value;
  ShareAndSurplus out;
  if (tau_s >= tau_t) {
    TriflowResult tri = triflow_from_source(g, caps, s, t, r);
    out.g = std::move(tri.f1);
    out.h = std::move(tri.f2);
    out.share = tri.tau;
    out.surplus = tri.tau_x - tri.tau;
    out.h_from = s;
    out.h_to = r;
  } else {
    TriflowResult tri = triflow_to_sink(g, caps, t, s, r);
    out.g = std::move(tri.f1);
    out.h = std::move(tri.f2);
    out.share = tri.tau;
    out.surplus = tri.tau_x - tri.tau;
    out.h_from = r;
    out.h_to = t;
  }
  return out;
}

void handle_four_feet_split(const Graph& g, const ArcCaps& caps,
                            const Terminals& t, const BridgeInfo& info,
                            BridgeFlows& out) {
  const Vertex x = info.split_vertex;
  require(x >= 0, ErrorCode::Internal, "split bridge without split vertex");
  std::vector<char> in_interior(g.n(), 0);
  for (Vertex v : info.raw.interior) in_interior[v] = 1;

  // Side of every non-split interior vertex: 1 if its component of the
  // interior minus x touches s1 or t1, 2 if it touches s2 or t2, 1 for
  // components touching neither (their capacity is unreachable anyway).
  std::vector<int> side(g.n(), 0);
  for (Vertex start : info.raw.interior) {
    if (start == x || side[start] != 0) continue;
    std::vector<Vertex> members = {start};
    std::vector<Vertex> stack = {start};
    side[start] = -1;  // visited, side pending
    bool side1 = false, side2 = false;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto [w, e] : g.adjacency(v)) {
        if (w == t.s1 || w == t.t1) side1 = true;
        if (w == t.s2 || w == t.t2) side2 = true;
        if (!in_interior[w] || w == x || side[w] != 0) continue;
        side[w] = -1;
        members.push_back(w);
        stack.push_back(w);
      }
    }
    require(!(side1 && side2), ErrorCode::Internal,
            "split vertex does not separate the sides");
    const int label = side2 ? 2 : 1;
    for (Vertex v : members) side[v] = label;
  }

  std::vector<EdgeId> edges1, edges2;
  for (EdgeId e : info.raw.edges) {
    const Edge& ed = g.edge(e);
    int s = 0;
    if (in_interior[ed.u] && ed.u != x) s = side[ed.u];
    if (s == 0 && in_interior[ed.v] && ed.v != x) s = side[ed.v];
    if (s == 0) {
      // Edge between x and a foot.
      const Vertex foot = (ed.u == x) ? ed.v : ed.u;
      s = (foot == t.s1 || foot == t.t1) ? 1 : 2;
    }
    (s == 1 ? edges1 : edges2).push_back(e);
  }

  ShareAndSurplus p1 =
      share_and_surplus(g, caps_of_edges(caps, edges1), t.s1, t.t1, x);
  ShareAndSurplus p2 =
      share_and_surplus(g, caps_of_edges(caps, edges2), t.s2, t.t2, x);
  out.g1 = add_flows(out.g1, p1.g);
  out.g2 = add_flows(out.g2, p2.g);

  const Cap theta = std::min(p1.surplus, p2.surplus);
  if (theta <= 0) return;
  // Join the two surpluses through x into one terminal-to-terminal bundle.
  ArcFlow joined;
  Vertex from, to;
  if (p1.h_to == x && p2.h_to == x) {  // s1 -> x, s2 -> x
    joined = concatenate(g, p1.h, t.s1, x, reverse_flow(p2.h), t.s2, theta);
    from = t.s1;
    to = t.s2;
  } else if (p1.h_to == x) {  // s1 -> x, x -> t2
    joined = concatenate(g, p1.h, t.s1, x, p2.h, t.t2, theta);
    from = t.s1;
    to = t.t2;
  } else if (p2.h_to == x) {  // s2 -> x, x -> t1
    joined = concatenate(g, p2.h, t.s2, x, p1.h, t.t1, theta);
    from = t.s2;
    to = t.t1;
  } else {  // x -> t1, x -> t2
    joined = concatenate(g, reverse_flow(p2.h), t.t2, x, p1.h, t.t1, theta);
    from = t.t2;
    to = t.t1;
  }
  push_supply(out.supplies, t, from, to, theta, std::move(joined), false);
}

// Takes `units` from the dispensers in order; the result is a flow of that
// value in the dispensers' common direction.
ArcFlow take_units(std::vector<FlowDispenser>& dispensers, Cap units, int m) {
  ArcFlow acc(m);
  for (FlowDispenser& d : dispensers) {
    if (units == 0) break;
    const Cap chunk = std::min(units, d.remaining());
    if (chunk == 0) continue;
    acc = add_flows(acc, d.take(chunk));
    units -= chunk;
  }
  require(units == 0, ErrorCode::Internal,
          "mixed-pair demand exceeds its supply");
  return acc;
}

}  // namespace

BridgeFlows bridge_flows(const Instance& inst, const BridgeReport& report) {
  const Graph& g = inst.g;
  const Terminals& t = inst.t;
  const ArcCaps caps = undirected_caps(g);
  BridgeFlows out;
  out.g1 = ArcFlow(g.m());
  out.g2 = ArcFlow(g.m());

  for (const BridgeInfo& info : report) {
    switch (info.kind) {
      case BridgeKind::Trivial: {
        const EdgeId e = info.raw.edges.at(0);
        const Edge& ed = g.edge(e);
        if (ed.cap <= 0) break;
        ArcFlow f(g.m());
        f.fwd[e] = ed.cap;
        push_supply(out.supplies, t, ed.u, ed.v, ed.cap, std::move(f), true);
        break;
      }
      case BridgeKind::ThreeFeet: {
        const auto& feet = info.raw.feet;
        if (feet.size() <= 1) break;  // no terminal-to-terminal connection
        const ArcCaps sub = caps_of_edges(caps, info.raw.edges);
        if (feet.size() == 2) {
          const int pair = mixed_pair_index(t, feet[0], feet[1]);
          if (pair < 0) {
            // Both feet of one commodity: plain share for that commodity.
            MaxflowResult mf = (feet[0] == t.s1 || feet[1] == t.s1)
                                   ? max_flow(g, sub, t.s1, t.t1)
                                   : max_flow(g, sub, t.s2, t.t2);
            const bool first = feet[0] == t.s1 || feet[0] == t.t1;
            (first ? out.g1 : out.g2) =
                add_flows(first ? out.g1 : out.g2, mf.flow);
          } else {
            Vertex from, to;
            pair_endpoints(t, pair, &from, &to);
            MaxflowResult mf = max_flow(g, sub, from, to);
            push_supply(out.supplies, t, from, to, mf.value,
                        std::move(mf.flow), false);
          }
          break;
        }
        const ThreeFeetRoles roles = three_feet_roles(t, feet);
        ShareAndSurplus p = share_and_surplus(g, sub, roles.s, roles.t,
                                              roles.r);
        (roles.commodity == 1 ? out.g1 : out.g2) = add_flows(
            roles.commodity == 1 ? out.g1 : out.g2, p.g);
        push_supply(out.supplies, t, p.h_from, p.h_to, p.surplus,
                    std::move(p.h), false);
        break;
      }
      case BridgeKind::FourFeetSplit:
        handle_four_feet_split(g, caps, t, info, out);
        break;
      case BridgeKind::FourFeetLinked:
        fail(ErrorCode::NotSeymourLike,
             "a bridge links both terminal pairs without a split vertex");
    }
  }
  return out;
}

Biflow solve_bridges(const Instance& inst, const BridgeReport& report) {
  Instance work = inst;
  const DirectAddback add = zero_direct_edges(work);
  BridgeFlows bf = bridge_flows(work, report);

  Cap w[kPairCount] = {0, 0, 0, 0};
  for (const BridgeSupply& s : bf.supplies) w[s.pair] += s.value;
  const TinyBiflow tiny = tiny_biflow(w);

  // Per-pair dispensers: direct edges first, then bridges in report order.
  std::vector<FlowDispenser> dispensers[kPairCount];
  for (int round = 0; round < 2; ++round) {
    for (const BridgeSupply& s : bf.supplies) {
      if (s.direct_edge == (round == 0)) {
        dispensers[s.pair].emplace_back(work.g, s.flow, s.from, s.to);
      }
    }
  }

  const int m = work.g.m();
  // Commodity 1 consumes first, always in the canonical direction.
  ArcFlow l1(m);
  for (int p = 0; p < kPairCount; ++p) {
    if (tiny.use1[p] > 0) {
      l1 = add_flows(l1, take_units(dispensers[p], tiny.use1[p], m));
    }
  }
  // Commodity 2 runs pair 0 and pair 3 against the canonical direction.
  ArcFlow l2(m);
  for (int p = 0; p < kPairCount; ++p) {
    if (tiny.use2[p] > 0) {
      ArcFlow part = take_units(dispensers[p], tiny.use2[p], m);
      if (p == 0 || p == 3) part = reverse_flow(part);
      l2 = add_flows(l2, part);
    }
  }

  Biflow b{add_flows(bf.g1, l1), add_flows(bf.g2, l2)};
  apply_direct_addback(work, add, b);
  return b;
}

}  // namespace biflow
