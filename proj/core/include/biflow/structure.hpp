#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "biflow/flowops.hpp"
#include "biflow/graph.hpp"

namespace biflow {

// Ensures both direct terminal edges exist (inserting them with capacity zero
// when absent), records their edge ids in the instance, and validates that the
// four terminals are distinct vertices of the graph.
void augment(Instance& inst);

// Same, building the instance from a graph and its terminals.
Instance augment(Graph g, const Terminals& t);

// Exchanges the roles of the two commodities (terminal pair 1 <-> pair 2).
Instance swap_commodities(const Instance& inst);
Biflow swap_commodities(const Biflow& b);

// ---------------------------------------------------------------------------
// Bridge classification over M, the subgraph formed by the two direct
// terminal edges.
// ---------------------------------------------------------------------------

enum class BridgeKind {
  Trivial,         // a single edge joining two terminals
  ThreeFeet,       // attaches to at most three terminals
  FourFeetSplit,   // four feet, but a cut vertex splits the two pairs
  FourFeetLinked,  // four feet with no splitting cut vertex
};

struct BridgeInfo {
  RawBridge raw;
  BridgeKind kind = BridgeKind::Trivial;
  // For FourFeetSplit: an interior vertex whose removal separates the bridge
  // into a part attached only to {s1,t1} and a part attached only to {s2,t2}.
  Vertex split_vertex = -1;
};

using BridgeReport = std::vector<BridgeInfo>;

BridgeReport classify_bridges(const Instance& inst);

// ---------------------------------------------------------------------------
// Gluing structure: side i terminals attach exclusively to two hub vertices
// (plus each other through the direct edge), and everything hanging on a
// (s_i, t_i, hub) triple forms a piece that meets the rest of the graph only
// at that hub.
// ---------------------------------------------------------------------------

struct GluingPieces {
  Vertex u1 = -1, v1 = -1;  // hubs of side 1
  Vertex u2 = -1, v2 = -1;  // hubs of side 2 (may coincide with side 1 hubs)
  // edge_in[0] = central part, edge_in[1..4] = pieces hanging on
  // (s1,t1,u1), (s1,t1,v1), (s2,t2,u2), (s2,t2,v2).  The two direct terminal
  // edges belong to no part.
  std::array<std::vector<char>, 5> edge_in;
};

// Attempts to find the two-sided gluing structure.  Returns nothing when no
// hub pair works for one of the sides.
std::optional<GluingPieces> detect_gluing(const Instance& inst);

// Attempts to find the one-sided structure for side 1 only: hubs {u1, v1}
// carrying side 1 as above, with side 2 left arbitrary.  Fills members for
// side 1 and edge_in[0] with every remaining edge; edge_in[3], edge_in[4]
// stay empty and u2/v2 stay -1.
std::optional<GluingPieces> detect_one_sided_gluing(const Instance& inst);

// Builds the auxiliary instance that turns a one-sided structure into a
// two-sided one: two fresh terminals for commodity 2 are attached next to the
// old ones, the direct side-2 capacity moves onto the fresh direct edge, and
// the old side-2 terminals become the side-2 hubs.
struct GadgetResult {
  Instance inst;      // the extended instance (original edge ids preserved)
  GluingPieces glue;  // two-sided structure of the extended instance
  EdgeId old_e2 = -1; // id of the original direct side-2 edge
  Cap old_e2_cap = 0; // its original capacity
};

GadgetResult case_ii_gadget(const Instance& inst,
                            const GluingPieces& one_sided);

// Maps a biflow on the gadget instance back onto the original instance.
Biflow project_gadget_biflow(const GadgetResult& gadget,
                             const Instance& original, const Biflow& b);

// ---------------------------------------------------------------------------
// Route selection.
// ---------------------------------------------------------------------------

enum class SolveRoute {
  Bridges,         // every bridge is trivial, three-footed, or splittable
  GluingTwoSided,  // both sides glue onto hub pairs
  GluingGadget1,   // side 1 glues; side 2 handled through the gadget
  GluingGadget2,   // side 2 glues; commodities swapped, then as above
  PlanarAttempt,   // run the crossing-exchange pipeline directly
  Fallback,        // no structure found; greedy packing with certification
};

const char* route_name(SolveRoute r);

struct RoutePlan {
  SolveRoute route = SolveRoute::Fallback;
  std::vector<BridgeInfo> bridges;   // meaningful for Bridges
  GluingPieces glue;                 // meaningful for GluingTwoSided
  GluingPieces one_sided;            // meaningful for GluingGadget1/2
};

RoutePlan detect_case(const Instance& inst);

// ---------------------------------------------------------------------------
// Forbidden structure: a four-cycle w1-w2-w3-w4 together with two pendant
// edges t1-w3 and t2-w4, rooted so that s1 = w1, s2 = w2, and each pendant
// hangs opposite its partner.  An instance whose graph contains this pattern
// as a rooted minor (up to swapping the endpoints within either terminal
// pair) admits capacities for which no integral biflow reaches the bicut
// bound.  Graphs with more than `kMinorVertexLimit` vertices are rejected.
// ---------------------------------------------------------------------------

inline constexpr int kMinorVertexLimit = 12;

bool k4star_minor(const Instance& inst);

// ---------------------------------------------------------------------------
// Reduction: restrict to the biconnected block containing both direct
// terminal edges (or split into two single-commodity problems when they lie
// in different blocks), then repeatedly replace terminal-free two-separated
// lobes by a boosted direct edge between the separating pair.
// ---------------------------------------------------------------------------

struct SingleCore {
  int commodity = 1;  // 1 or 2
};

struct TwoSepStep {
  std::string u, v;       // separating pair, by vertex name
  Graph before;           // the graph this step contracted
  Graph lobe;             // the replaced lobe: interior + {u,v} + its edges
  ArcFlow through;        // a maximum u->v flow inside the lobe
  Cap through_value = 0;  // its value
  Cap base_uv_cap = 0;    // capacity of the direct u-v edge before boosting
  bool uv_edge_existed = false;
};

struct ReduceResult {
  // Either `core` is set (both direct edges in one block, lobes contracted)
  // or `singles` has two entries (direct edges in different blocks).
  std::optional<Instance> core;
  std::vector<SingleCore> singles;
  std::vector<TwoSepStep> steps;  // in contraction order
};

ReduceResult reduce(const Instance& inst);

// Lifts a biflow on the fully contracted core back through the recorded
// contraction steps, producing a biflow on the graph the reduction started
// from (the block core).  Vertices are matched by name.
Biflow splice_back(const ReduceResult& red, const Biflow& b);

}  // namespace biflow
