#pragma once

#include <vector>

#include "biflow/flowops.hpp"
#include "biflow/graph.hpp"
#include "biflow/structure.hpp"

namespace biflow {

// Mixed terminal pairs, indexed 0..3 with a canonical direction each:
//   0 = {s1, s2}  canonical s1 -> s2
//   1 = {s1, t2}  canonical s1 -> t2
//   2 = {t1, s2}  canonical s2 -> t1
//   3 = {t1, t2}  canonical t2 -> t1
// A commodity-1 unit routes s1 -> s2 -> t1 (pairs 0 and 2) or
// s1 -> t2 -> t1 (pairs 1 and 3), always in the canonical direction.
// A commodity-2 unit routes s2 -> s1 -> t2 (pair 0 reversed, pair 1
// canonical) or s2 -> t1 -> t2 (pair 2 canonical, pair 3 reversed).
inline constexpr int kPairCount = 4;

// Returns the pair index of two distinct terminals, or -1 when they form a
// commodity pair {s1, t1} / {s2, t2}.
int mixed_pair_index(const Terminals& t, Vertex a, Vertex b);

// Canonical direction endpoints of a mixed pair.
void pair_endpoints(const Terminals& t, int pair, Vertex* from, Vertex* to);

// Optimal routing of both commodities through four reservoirs of mixed
// connections, one per pair, with w[p] units available on pair p.  Every
// unit of either commodity consumes one unit from each of two reservoirs as
// in the table above.  The optimum equals
// min(w[0] + w[3], w[1] + w[2]).
struct TinyBiflow {
  Cap use1[kPairCount] = {0, 0, 0, 0};  // units consumed by commodity 1
  Cap use2[kPairCount] = {0, 0, 0, 0};  // units consumed by commodity 2
  Cap val1 = 0, val2 = 0;

  Cap total() const { return val1 + val2; }
};

TinyBiflow tiny_biflow(const Cap w[kPairCount]);

// A dispensable bundle of connections between one mixed pair of terminals,
// produced by a single bridge (or by a direct terminal-terminal edge).
struct BridgeSupply {
  int pair = -1;
  Vertex from = -1, to = -1;  // canonical direction
  Cap value = 0;
  ArcFlow flow;               // carries `value` units from `from` to `to`
  bool direct_edge = false;   // single terminal-terminal edge
};

struct BridgeFlows {
  ArcFlow g1, g2;  // same-pair shares routed inside the bridges
  std::vector<BridgeSupply> supplies;
};

// Routes each bridge independently: full-pair shares become flows for the
// owning commodity, surplus toward a third terminal (or across a split
// vertex) becomes a supply for the corresponding mixed pair.  Throws
// NotSeymourLike if the report contains a linked four-feet bridge.
BridgeFlows bridge_flows(const Instance& inst, const BridgeReport& report);

// Maximum integral biflow when every bridge of the terminal pattern is
// trivial, has at most three feet, or has four feet with a split vertex.
Biflow solve_bridges(const Instance& inst, const BridgeReport& report);

}  // namespace biflow
