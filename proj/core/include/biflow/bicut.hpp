#pragma once

#include <vector>

#include "biflow/flowops.hpp"
#include "biflow/graph.hpp"

namespace biflow {

// A set of edges meeting every path of either commodity, found as the best
// of the two endpoint groupings (sources together, or first sources with
// second sinks). Its capacity upper-bounds every biflow value.
struct BicutCertificate {
  Cap value = 0;
  int grouping = -1;              // 0: {a1,a2} vs {b1,b2}; 1: {a1,b2} vs {b1,a2}
  std::vector<Vertex> side;      // source side of the winning cut
  std::vector<EdgeId> cut_edges;  // edges crossing the side
};

BicutCertificate min_bicut(const Graph& g, const ArcCaps& caps, Vertex a1,
                           Vertex b1, Vertex a2, Vertex b2);

BicutCertificate min_bicut(const Instance& inst);

// Checks both commodities for conservation and normalization and the joint
// per-edge capacity; returns the combined value.
Cap verify_biflow(const Graph& g, const Terminals& t, const Biflow& b);

// Exhaustive maximum integral biflow for small instances (at most 8 vertices
// and capacities at most 3); throws TooLarge beyond that. Independent of the
// augmenting-path machinery: path enumeration with subset-enumerated cut
// bounds.
Cap oracle_max_integral_biflow(const Instance& inst);

}  // namespace biflow
