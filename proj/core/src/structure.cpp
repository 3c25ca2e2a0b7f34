#include "biflow/structure.hpp"

#include <algorithm>

#include "biflow/maxflow.hpp"

namespace biflow {

namespace {

Vertex must_vertex(const Graph& g, const std::string& name) {
  auto v = g.find_vertex(name);
  require(v.has_value(), ErrorCode::Internal,
          "vertex '" + name + "' missing from derived graph");
  return *v;
}

bool joins_pair(const Edge& e, Vertex a, Vertex b) {
  return (e.u == a && e.v == b) || (e.u == b && e.v == a);
}

// True for the direct s1-t1 or s2-t2 edge.
bool is_direct_terminal_edge(const Edge& e, const Terminals& t) {
  return joins_pair(e, t.s1, t.t1) || joins_pair(e, t.s2, t.t2);
}

}  // namespace

void augment(Instance& inst) {
  Graph& g = inst.g;
  const Terminals& t = inst.t;
  for (Vertex v : t.all()) {
    require(v >= 0 && v < g.n(), ErrorCode::BadTerminals,
            "terminal out of range");
  }
  auto a = t.all();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      require(a[i] != a[j], ErrorCode::BadTerminals,
              "the four terminals must be distinct");
    }
  }
  auto e1 = g.edge_between(t.s1, t.t1);
  inst.e1 = e1 ? *e1 : g.add_edge(t.s1, t.t1, 0);
  auto e2 = g.edge_between(t.s2, t.t2);
  inst.e2 = e2 ? *e2 : g.add_edge(t.s2, t.t2, 0);
}

Instance swap_commodities(const Instance& inst) {
  Instance out = inst;
  out.t.s1 = inst.t.s2;
  out.t.t1 = inst.t.t2;
  out.t.s2 = inst.t.s1;
  out.t.t2 = inst.t.t1;
  out.e1 = inst.e2;
  out.e2 = inst.e1;
  return out;
}

Biflow swap_commodities(const Biflow& b) { return Biflow{b.f2, b.f1}; }

Instance augment(Graph g, const Terminals& t) {
  Instance inst;
  inst.g = std::move(g);
  inst.t = t;
  augment(inst);
  return inst;
}

// ---------------------------------------------------------------------------
// Bridge classification.
// ---------------------------------------------------------------------------

BridgeReport classify_bridges(const Instance& inst) {
  const Graph& g = inst.g;
  const Terminals& t = inst.t;
  std::vector<BridgeInfo> out;
  for (RawBridge& raw : m_bridges(inst)) {
    BridgeInfo info;
    info.raw = std::move(raw);
    if (info.raw.interior.empty()) {
      info.kind = BridgeKind::Trivial;
    } else if (info.raw.feet.size() <= 3) {
      info.kind = BridgeKind::ThreeFeet;
    } else {
      info.kind = BridgeKind::FourFeetLinked;
      std::vector<char> in_interior(g.n(), 0);
      for (Vertex v : info.raw.interior) in_interior[v] = 1;
      for (Vertex x : info.raw.interior) {
        // Components of the interior minus x; every interior edge belongs to
        // this bridge, so plain adjacency restricted to the interior works.
        std::vector<int> comp(g.n(), -1);
        int count = 0;
        bool ok = true;
        for (Vertex start : info.raw.interior) {
          if (start == x || comp[start] >= 0) continue;
          int id = count++;
          std::vector<Vertex> stack = {start};
          comp[start] = id;
          bool side1 = false, side2 = false;
          while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adjacency(v)) {
              if (w == t.s1 || w == t.t1) side1 = true;
              if (w == t.s2 || w == t.t2) side2 = true;
              if (!in_interior[w] || w == x || comp[w] >= 0) continue;
              comp[w] = id;
              stack.push_back(w);
            }
          }
          if (side1 && side2) {
            ok = false;
            break;
          }
        }
        if (ok) {
          info.kind = BridgeKind::FourFeetSplit;
          info.split_vertex = x;
          break;
        }
      }
    }
    out.push_back(std::move(info));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gluing detection.
// ---------------------------------------------------------------------------

namespace {

struct SideSplit {
  std::vector<char> piece_u, piece_v;
};

// Checks whether the terminal pair (s, t) hangs on the hub pair {u, v}: both
// terminals attach only to each other, the hubs, and hub-pure components,
// and every component touching s or t is terminal-free and reaches at most
// one hub. Fills edge masks for the two pieces on success.
std::optional<SideSplit> side_pieces(const Instance& inst, Vertex s, Vertex t,
                                     Vertex u, Vertex v) {
  const Graph& g = inst.g;
  const Terminals& tm = inst.t;
  // All four spokes must exist as edges (any capacity).
  for (Vertex a : {s, t}) {
    for (Vertex h : {u, v}) {
      if (!g.edge_between(a, h)) return std::nullopt;
    }
  }
  const std::array<Vertex, 4> removed = {s, t, u, v};
  Components comps = connected_components(g, removed);
  // attach[i]: bitmask over (s, t, u, v) of the removed vertices adjacent to
  // component i; other[i]: component contains a terminal of the other pair.
  std::vector<int> attach(comps.count, 0);
  std::vector<char> touches_st(comps.count, 0), other(comps.count, 0);
  for (Vertex w = 0; w < g.n(); ++w) {
    int c = comps.comp[w];
    if (c < 0) continue;
    if (tm.is_terminal(w)) other[c] = 1;
    for (auto [x, e] : g.adjacency(w)) {
      for (int k = 0; k < 4; ++k) {
        if (removed[k] == x) attach[c] |= 1 << k;
      }
    }
  }
  constexpr int kS = 1, kT = 2, kU = 4, kV = 8;
  std::vector<int> side(comps.count, 0);  // 0 central, 1 hub u, 2 hub v
  for (int c = 0; c < comps.count; ++c) {
    touches_st[c] = (attach[c] & (kS | kT)) != 0;
    if (!touches_st[c]) continue;
    if (other[c]) return std::nullopt;
    if ((attach[c] & ~(kS | kT | kU)) == 0) {
      side[c] = 1;
    } else if ((attach[c] & ~(kS | kT | kV)) == 0) {
      side[c] = 2;
    } else {
      return std::nullopt;  // reaches both hubs
    }
  }
  SideSplit split;
  split.piece_u.assign(g.m(), 0);
  split.piece_v.assign(g.m(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (is_direct_terminal_edge(ed, tm)) continue;
    // Spokes.
    if (joins_pair(ed, s, u) || joins_pair(ed, t, u)) {
      split.piece_u[e] = 1;
      continue;
    }
    if (joins_pair(ed, s, v) || joins_pair(ed, t, v)) {
      split.piece_v[e] = 1;
      continue;
    }
    int c = comps.comp[ed.u] >= 0 ? comps.comp[ed.u] : comps.comp[ed.v];
    if (c < 0) continue;  // edge among removed vertices (u-v): central
    if (side[c] == 1) {
      split.piece_u[e] = 1;
    } else if (side[c] == 2) {
      split.piece_v[e] = 1;
    }
  }
  // s and t must have no remaining attachments: every edge at s/t is the
  // direct edge, a spoke, or goes into a hub-pure component.
  for (Vertex a : {s, t}) {
    for (auto [w, e] : g.adjacency(a)) {
      const Edge& ed = g.edge(e);
      if (is_direct_terminal_edge(ed, tm)) continue;
      if (w == u || w == v) continue;
      int c = comps.comp[w];
      if (c < 0 || side[c] == 0) return std::nullopt;
    }
  }
  return split;
}

// Hub-pair candidates: non-terminal two-separators whose removal parts the
// two terminal pairs.
std::vector<std::pair<Vertex, Vertex>> hub_candidates(const Instance& inst) {
  const Graph& g = inst.g;
  const Terminals& t = inst.t;
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : two_separators(g)) {
    if (t.is_terminal(u) || t.is_terminal(v)) continue;
    const std::array<Vertex, 2> removed = {u, v};
    Components comps = connected_components(g, removed);
    if (comps.comp[t.s1] != comps.comp[t.s2]) out.emplace_back(u, v);
  }
  return out;
}

bool masks_disjoint(const std::array<std::vector<char>, 5>& edge_in) {
  if (edge_in[1].empty()) return true;
  for (std::size_t e = 0; e < edge_in[1].size(); ++e) {
    int hits = 0;
    for (int k = 1; k <= 4; ++k) hits += edge_in[k][e] != 0;
    if (hits > 1) return false;
  }
  return true;
}

void fill_central(const Instance& inst, GluingPieces& gp) {
  const Graph& g = inst.g;
  gp.edge_in[0].assign(g.m(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (is_direct_terminal_edge(ed, inst.t)) continue;
    bool taken = false;
    for (int k = 1; k <= 4; ++k) {
      if (!gp.edge_in[k].empty() && gp.edge_in[k][e]) taken = true;
    }
    if (!taken) gp.edge_in[0][e] = 1;
  }
}

}  // namespace

std::optional<GluingPieces> detect_gluing(const Instance& inst) {
  auto candidates = hub_candidates(inst);
  for (auto [u1, v1] : candidates) {
    auto side1 = side_pieces(inst, inst.t.s1, inst.t.t1, u1, v1);
    if (!side1) continue;
    // Try the same pair first (shared-hub form), then the others.
    std::vector<std::pair<Vertex, Vertex>> second = {{u1, v1}};
    for (auto pr : candidates) {
      if (pr != std::make_pair(u1, v1)) second.push_back(pr);
    }
    for (auto [u2, v2] : second) {
      auto side2 = side_pieces(inst, inst.t.s2, inst.t.t2, u2, v2);
      if (!side2) continue;
      GluingPieces gp;
      gp.u1 = u1;
      gp.v1 = v1;
      gp.u2 = u2;
      gp.v2 = v2;
      gp.edge_in[1] = std::move(side1->piece_u);
      gp.edge_in[2] = std::move(side1->piece_v);
      gp.edge_in[3] = std::move(side2->piece_u);
      gp.edge_in[4] = std::move(side2->piece_v);
      if (!masks_disjoint(gp.edge_in)) continue;
      fill_central(inst, gp);
      return gp;
    }
  }
  return std::nullopt;
}

std::optional<GluingPieces> detect_one_sided_gluing(const Instance& inst) {
  for (auto [u1, v1] : hub_candidates(inst)) {
    auto side1 = side_pieces(inst, inst.t.s1, inst.t.t1, u1, v1);
    if (!side1) continue;
    GluingPieces gp;
    gp.u1 = u1;
    gp.v1 = v1;
    gp.edge_in[1] = std::move(side1->piece_u);
    gp.edge_in[2] = std::move(side1->piece_v);
    gp.edge_in[3].assign(inst.g.m(), 0);
    gp.edge_in[4].assign(inst.g.m(), 0);
    fill_central(inst, gp);
    return gp;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Side-2 gadget.
// ---------------------------------------------------------------------------

GadgetResult case_ii_gadget(const Instance& inst,
                            const GluingPieces& one_sided) {
  GadgetResult out;
  out.inst = inst;
  Graph& g = out.inst.g;
  out.old_e2 = inst.e2;
  out.old_e2_cap = g.edge(inst.e2).cap;
  const Cap big = g.total_capacity() + 1;
  Vertex s2p = g.add_vertex(g.fresh_vertex_name("s2"));
  Vertex t2p = g.add_vertex(g.fresh_vertex_name("t2"));
  EdgeId e2p = g.add_edge(s2p, t2p, out.old_e2_cap);
  EdgeId sp_in = g.add_edge(s2p, inst.t.s2, big);
  EdgeId tp_out = g.add_edge(t2p, inst.t.t2, big);
  EdgeId sp_zero = g.add_edge(s2p, inst.t.t2, 0);
  EdgeId tp_zero = g.add_edge(t2p, inst.t.s2, 0);
  g.set_capacity(inst.e2, 0);
  out.inst.t.s2 = s2p;
  out.inst.t.t2 = t2p;
  out.inst.e2 = e2p;

  GluingPieces& gp = out.glue;
  gp.u1 = one_sided.u1;
  gp.v1 = one_sided.v1;
  gp.u2 = inst.t.s2;
  gp.v2 = inst.t.t2;
  for (int k = 0; k < 5; ++k) {
    gp.edge_in[k] = one_sided.edge_in[k];
    gp.edge_in[k].resize(g.m(), 0);
  }
  // Fresh piece 3 hangs on hub u2 (the old source), piece 4 on v2 (the old
  // sink); the retired direct edge stays central with capacity zero.
  gp.edge_in[3][sp_in] = 1;
  gp.edge_in[3][tp_zero] = 1;
  gp.edge_in[4][tp_out] = 1;
  gp.edge_in[4][sp_zero] = 1;
  gp.edge_in[0][out.old_e2] = 1;
  return out;
}

Biflow project_gadget_biflow(const GadgetResult& gadget,
                             const Instance& original, const Biflow& b) {
  const int m = original.g.m();
  Biflow out{ArcFlow(m), ArcFlow(m)};
  const ArcFlow* src[2] = {&b.f1, &b.f2};
  ArcFlow* dst[2] = {&out.f1, &out.f2};
  const Edge& oe = original.g.edge(original.e2);
  const bool fwd_is_s2 = oe.u == original.t.s2;
  for (int i = 0; i < 2; ++i) {
    for (EdgeId e = 0; e < m; ++e) {
      dst[i]->fwd[e] = src[i]->fwd[e];
      dst[i]->bwd[e] = src[i]->bwd[e];
    }
    // Fold the auxiliary direct edge back onto the original one; its stored
    // orientation runs from the fresh source to the fresh sink.
    const Cap p = src[i]->fwd[gadget.inst.e2];
    const Cap q = src[i]->bwd[gadget.inst.e2];
    if (fwd_is_s2) {
      dst[i]->fwd[original.e2] += p;
      dst[i]->bwd[original.e2] += q;
    } else {
      dst[i]->fwd[original.e2] += q;
      dst[i]->bwd[original.e2] += p;
    }
    normalize(*dst[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Route selection.
// ---------------------------------------------------------------------------

const char* route_name(SolveRoute r) {
  switch (r) {
    case SolveRoute::Bridges:
      return "bridges";
    case SolveRoute::GluingTwoSided:
      return "gluing";
    case SolveRoute::GluingGadget1:
      return "gluing-gadget-1";
    case SolveRoute::GluingGadget2:
      return "gluing-gadget-2";
    case SolveRoute::PlanarAttempt:
      return "planar";
    case SolveRoute::Fallback:
      return "fallback";
  }
  return "unknown";
}

RoutePlan detect_case(const Instance& inst) {
  RoutePlan plan;
  auto bridges = classify_bridges(inst);
  int linked = 0;
  for (const BridgeInfo& b : bridges) {
    if (b.kind == BridgeKind::FourFeetLinked) ++linked;
  }
  if (linked == 0) {
    plan.route = SolveRoute::Bridges;
    plan.bridges = std::move(bridges);
    return plan;
  }
  if (linked == 1) {
    if (auto two = detect_gluing(inst)) {
      plan.route = SolveRoute::GluingTwoSided;
      plan.glue = std::move(*two);
      return plan;
    }
    if (auto one = detect_one_sided_gluing(inst)) {
      plan.route = SolveRoute::GluingGadget1;
      plan.one_sided = std::move(*one);
      return plan;
    }
    if (auto one = detect_one_sided_gluing(swap_commodities(inst))) {
      plan.route = SolveRoute::GluingGadget2;
      plan.one_sided = std::move(*one);
      return plan;
    }
    plan.route = SolveRoute::PlanarAttempt;
    return plan;
  }
  plan.route = SolveRoute::Fallback;
  return plan;
}

// ---------------------------------------------------------------------------
// Forbidden structure.
// ---------------------------------------------------------------------------

namespace {

bool mask_connected(const std::vector<unsigned>& adj, unsigned mask) {
  if (mask == 0) return false;
  unsigned seen = mask & (~mask + 1);  // lowest set bit
  while (true) {
    unsigned grow = seen;
    unsigned scan = seen;
    while (scan) {
      int v = __builtin_ctz(scan);
      scan &= scan - 1;
      grow |= adj[v] & mask;
    }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == mask;
}

bool masks_adjacent(const std::vector<unsigned>& adj, unsigned a, unsigned b) {
  unsigned scan = a;
  while (scan) {
    int v = __builtin_ctz(scan);
    scan &= scan - 1;
    if (adj[v] & b) return true;
  }
  return false;
}

}  // namespace

bool k4star_minor(const Instance& inst) {
  const Graph& g = inst.g;
  require(g.n() <= kMinorVertexLimit, ErrorCode::TooLarge,
          "pattern search supports at most " +
              std::to_string(kMinorVertexLimit) + " vertices");
  const Terminals& t = inst.t;
  const int n = g.n();
  if (n < 6) return false;
  std::vector<unsigned> adj(n, 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (is_direct_terminal_edge(ed, t)) continue;
    adj[ed.u] |= 1u << ed.v;
    adj[ed.v] |= 1u << ed.u;
  }
  std::vector<Vertex> free_all;
  for (Vertex v = 0; v < n; ++v) {
    if (!t.is_terminal(v)) free_all.push_back(v);
  }
  // Class order: s1-set, t1-set, s2-set, t2-set, P (t1's anchor), Q (t2's).
  for (int swap1 = 0; swap1 < 2; ++swap1) {
    for (int swap2 = 0; swap2 < 2; ++swap2) {
      const Vertex S1 = swap1 ? t.t1 : t.s1;
      const Vertex T1 = swap1 ? t.s1 : t.t1;
      const Vertex S2 = swap2 ? t.t2 : t.s2;
      const Vertex T2 = swap2 ? t.s2 : t.t2;
      for (Vertex p : free_all) {
        for (Vertex q : free_all) {
          if (q == p) continue;
          std::vector<Vertex> rest;
          for (Vertex v : free_all) {
            if (v != p && v != q) rest.push_back(v);
          }
          const int k = static_cast<int>(rest.size());
          std::vector<int> cls(k, 0);
          while (true) {
            std::array<unsigned, 7> mask{};
            mask[1] = 1u << S1;
            mask[2] = 1u << T1;
            mask[3] = 1u << S2;
            mask[4] = 1u << T2;
            mask[5] = 1u << p;
            mask[6] = 1u << q;
            for (int i = 0; i < k; ++i) {
              if (cls[i] > 0) mask[cls[i]] |= 1u << rest[i];
            }
            bool good = true;
            for (int c = 1; c <= 6 && good; ++c) {
              good = mask_connected(adj, mask[c]);
            }
            // Cycle s1, s2, P, Q plus pendants t1 at P and t2 at Q.
            good = good && masks_adjacent(adj, mask[1], mask[3]) &&
                   masks_adjacent(adj, mask[3], mask[5]) &&
                   masks_adjacent(adj, mask[5], mask[6]) &&
                   masks_adjacent(adj, mask[6], mask[1]) &&
                   masks_adjacent(adj, mask[2], mask[5]) &&
                   masks_adjacent(adj, mask[4], mask[6]);
            if (good) return true;
            int i = 0;
            while (i < k && cls[i] == 6) {
              cls[i] = 0;
              ++i;
            }
            if (i == k) break;
            ++cls[i];
          }
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Reduction.
// ---------------------------------------------------------------------------

namespace {

Instance instance_from_edges(const Graph& g, const std::vector<EdgeId>& edges,
                             const Terminals& t) {
  Instance out;
  std::vector<EdgeId> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted) {
    const Edge& ed = g.edge(e);
    Vertex u = out.g.ensure_vertex(g.name(ed.u));
    Vertex v = out.g.ensure_vertex(g.name(ed.v));
    out.g.add_edge(u, v, ed.cap);
  }
  out.t.s1 = must_vertex(out.g, g.name(t.s1));
  out.t.t1 = must_vertex(out.g, g.name(t.t1));
  out.t.s2 = must_vertex(out.g, g.name(t.s2));
  out.t.t2 = must_vertex(out.g, g.name(t.t2));
  auto e1 = out.g.edge_between(out.t.s1, out.t.t1);
  auto e2 = out.g.edge_between(out.t.s2, out.t.t2);
  require(e1.has_value() && e2.has_value(), ErrorCode::Internal,
          "core lost a direct terminal edge");
  out.e1 = *e1;
  out.e2 = *e2;
  return out;
}

void relocate_terminals(Instance& inst, const Graph& from, Terminals t) {
  inst.t.s1 = must_vertex(inst.g, from.name(t.s1));
  inst.t.t1 = must_vertex(inst.g, from.name(t.t1));
  inst.t.s2 = must_vertex(inst.g, from.name(t.s2));
  inst.t.t2 = must_vertex(inst.g, from.name(t.t2));
  auto e1 = inst.g.edge_between(inst.t.s1, inst.t.t1);
  auto e2 = inst.g.edge_between(inst.t.s2, inst.t.t2);
  require(e1.has_value() && e2.has_value(), ErrorCode::Internal,
          "contraction lost a direct terminal edge");
  inst.e1 = *e1;
  inst.e2 = *e2;
}

// Attempts one lobe contraction guarded by the named vertex pair.  Returns
// false when the names no longer both exist (an earlier contraction absorbed
// one) or when removing the pair leaves no terminal-free component.
bool contract_lobe(Instance& core, std::vector<TwoSepStep>& steps,
                   const std::string& un, const std::string& vn) {
  std::optional<Vertex> ou = core.g.find_vertex(un);
  std::optional<Vertex> ov = core.g.find_vertex(vn);
  if (!ou || !ov) return false;
  Vertex u = *ou;
  Vertex v = *ov;
  const std::array<Vertex, 2> removed = {u, v};
  Components comps = connected_components(core.g, removed);
  std::vector<char> has_terminal(comps.count, 0);
  for (Vertex w : core.t.all()) {
    if (comps.comp[w] >= 0) has_terminal[comps.comp[w]] = 1;
  }
  int chosen = -1;
  for (int c = 0; c < comps.count && chosen < 0; ++c) {
    if (!has_terminal[c]) chosen = c;
  }
  if (chosen < 0) return false;

  TwoSepStep step;
  step.u = un;
  step.v = vn;
  step.before = core.g;
  // Build the lobe: {u, v} plus the chosen component and every edge
  // touching it (the direct u-v edge stays outside).
  Graph lobe;
  Vertex lu = lobe.add_vertex(step.u);
  Vertex lv = lobe.add_vertex(step.v);
  std::vector<char> in_lobe(core.g.n(), 0);
  for (Vertex w = 0; w < core.g.n(); ++w) {
    if (comps.comp[w] == chosen) {
      in_lobe[w] = 1;
      lobe.add_vertex(core.g.name(w));
    }
  }
  for (EdgeId e = 0; e < core.g.m(); ++e) {
    const Edge& ed = core.g.edge(e);
    if (!in_lobe[ed.u] && !in_lobe[ed.v]) continue;
    lobe.add_edge(must_vertex(lobe, core.g.name(ed.u)),
                  must_vertex(lobe, core.g.name(ed.v)), ed.cap);
  }
  MaxflowResult mf = max_flow(lobe, undirected_caps(lobe), lu, lv);
  step.lobe = std::move(lobe);
  step.through = std::move(mf.flow);
  step.through_value = mf.value;
  auto uv = core.g.edge_between(u, v);
  step.uv_edge_existed = uv.has_value();
  step.base_uv_cap = uv ? core.g.edge(*uv).cap : 0;

  Graph next;
  for (Vertex w = 0; w < core.g.n(); ++w) {
    if (!in_lobe[w]) next.add_vertex(core.g.name(w));
  }
  for (EdgeId e = 0; e < core.g.m(); ++e) {
    const Edge& ed = core.g.edge(e);
    if (in_lobe[ed.u] || in_lobe[ed.v]) continue;
    next.add_edge(must_vertex(next, core.g.name(ed.u)),
                  must_vertex(next, core.g.name(ed.v)), ed.cap);
  }
  Vertex nu = must_vertex(next, step.u);
  Vertex nv = must_vertex(next, step.v);
  if (auto ne = next.edge_between(nu, nv)) {
    next.set_capacity(*ne, step.base_uv_cap + step.through_value);
  } else {
    next.add_edge(nu, nv, step.through_value);
  }
  Graph prev = std::move(core.g);
  core.g = std::move(next);
  relocate_terminals(core, prev, core.t);
  steps.push_back(std::move(step));
  return true;
}

}  // namespace

ReduceResult reduce(const Instance& inst) {
  require(inst.e1 >= 0 && inst.e2 >= 0, ErrorCode::Internal,
          "reduction requires an augmented instance");
  ReduceResult res;
  BlockDecomposition bd = block_decomposition(inst.g);
  if (bd.edge_block[inst.e1] != bd.edge_block[inst.e2]) {
    res.singles.push_back(SingleCore{1});
    res.singles.push_back(SingleCore{2});
    return res;
  }
  Instance core = instance_from_edges(
      inst.g, bd.blocks[bd.edge_block[inst.e1]], inst.t);
  // Contract terminal-free two-separated lobes until none remain.  Each
  // contraction is justified by the component check against the current
  // graph alone, so the separator list is snapshotted by name once per pass
  // and candidates invalidated by earlier contractions are simply skipped;
  // recomputing the list after every step would make long lobe chains
  // quadratic in the worst way (a fresh whole-graph scan per lobe).
  while (true) {
    bool contracted = false;
    std::vector<std::pair<std::string, std::string>> candidates;
    for (auto [u, v] : two_separators(core.g)) {
      candidates.emplace_back(core.g.name(u), core.g.name(v));
    }
    for (const auto& [un, vn] : candidates) {
      // One candidate pair can guard several nested lobes; drain them all.
      while (contract_lobe(core, res.steps, un, vn)) contracted = true;
    }
    if (!contracted) break;
  }
  res.core = std::move(core);
  return res;
}

Biflow splice_back(const ReduceResult& red, const Biflow& b) {
  require(red.core.has_value(), ErrorCode::Internal,
          "splice_back needs a combined core");
  Biflow cur = b;
  const Graph* curg = &red.core->g;
  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    const TwoSepStep& st = *it;
    const Graph& prev = st.before;
    Vertex cu = must_vertex(*curg, st.u);
    Vertex cv = must_vertex(*curg, st.v);
    auto uvOpt = curg->edge_between(cu, cv);
    require(uvOpt.has_value(), ErrorCode::Internal,
            "contracted graph lost its boosted edge");
    const EdgeId uv = *uvOpt;
    const bool stored_from_u = curg->edge(uv).u == cu;

    const ArcFlow* fs[2] = {&cur.f1, &cur.f2};
    Cap net[2];
    for (int i = 0; i < 2; ++i) {
      Cap f = fs[i]->fwd[uv], r = fs[i]->bwd[uv];
      net[i] = stored_from_u ? f - r : r - f;
    }
    const Cap m1 = net[0] < 0 ? -net[0] : net[0];
    const Cap m2 = net[1] < 0 ? -net[1] : net[1];
    const Cap excess = std::max<Cap>(0, m1 + m2 - st.base_uv_cap);
    const Cap x1 = std::min(m1, excess);
    const Cap x2 = excess - x1;
    const Cap keep[2] = {m1 - x1, m2 - x2};
    require(x2 <= m2 && x1 + x2 <= st.through_value, ErrorCode::Internal,
            "lobe reroute exceeds its recorded flow");

    Biflow lifted{ArcFlow(prev.m()), ArcFlow(prev.m())};
    ArcFlow* ls[2] = {&lifted.f1, &lifted.f2};
    for (EdgeId e = 0; e < curg->m(); ++e) {
      if (e == uv) continue;
      const Edge& ed = curg->edge(e);
      Vertex pu = must_vertex(prev, curg->name(ed.u));
      Vertex pv = must_vertex(prev, curg->name(ed.v));
      auto peOpt = prev.edge_between(pu, pv);
      require(peOpt.has_value(), ErrorCode::Internal,
              "edge vanished while splicing a lobe back");
      const bool same = prev.edge(*peOpt).u == pu;
      for (int i = 0; i < 2; ++i) {
        ls[i]->fwd[*peOpt] += same ? fs[i]->fwd[e] : fs[i]->bwd[e];
        ls[i]->bwd[*peOpt] += same ? fs[i]->bwd[e] : fs[i]->fwd[e];
      }
    }
    // Keep what fits on the original direct edge.
    if (st.base_uv_cap > 0 || st.uv_edge_existed) {
      Vertex pu = must_vertex(prev, st.u);
      Vertex pv = must_vertex(prev, st.v);
      auto peOpt = prev.edge_between(pu, pv);
      require(peOpt.has_value(), ErrorCode::Internal,
              "original direct edge missing while splicing");
      const bool from_u = prev.edge(*peOpt).u == pu;
      for (int i = 0; i < 2; ++i) {
        if (keep[i] == 0) continue;
        const bool forward = (net[i] > 0) == from_u;
        (forward ? ls[i]->fwd : ls[i]->bwd)[*peOpt] += keep[i];
      }
    } else {
      require(keep[0] == 0 && keep[1] == 0, ErrorCode::Internal,
              "flow kept on a direct edge that never existed");
    }
    // Reroute the overflow through the recorded lobe flow.
    Vertex lu = must_vertex(st.lobe, st.u);
    Vertex lv = must_vertex(st.lobe, st.v);
    FlowDispenser disp(st.lobe, st.through, lu, lv);
    const Cap reroute[2] = {x1, x2};
    for (int i = 0; i < 2; ++i) {
      if (reroute[i] == 0) continue;
      ArcFlow part = disp.take(reroute[i]);
      if (net[i] < 0) part = reverse_flow(part);
      ArcFlow moved = transport_flow(st.lobe, part, prev);
      *ls[i] = add_flows(*ls[i], moved);
    }
    normalize(lifted.f1);
    normalize(lifted.f2);
    cur = std::move(lifted);
    curg = &prev;
  }
  return cur;
}

}  // namespace biflow
