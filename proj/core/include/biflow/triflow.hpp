#pragma once

#include "biflow/graph.hpp"

namespace biflow {

// Compatible flow pair rooted at a common vertex x: f1 carries tau units
// between x and y where tau is the minimum x-y cut, f2 carries tau_x - tau
// between x and z, and f1 + f2 respects the arc capacities jointly, where
// tau_x is the maximum flow from x into {y, z}.
struct TriflowResult {
  Cap tau = 0;
  Cap tau_x = 0;
  ArcFlow f1, f2;
};

// Flows leave x: f1 runs x to y, f2 runs x to z.
TriflowResult triflow_from_source(const Graph& g, const ArcCaps& caps,
                                  Vertex x, Vertex y, Vertex z);

// Flows enter x: f1 runs y to x, f2 runs z to x; tau is the minimum y-x cut
// and tau_x the maximum flow from {y, z} into x.
TriflowResult triflow_to_sink(const Graph& g, const ArcCaps& caps, Vertex x,
                              Vertex y, Vertex z);

ArcCaps transpose_caps(const ArcCaps& caps);

}  // namespace biflow
