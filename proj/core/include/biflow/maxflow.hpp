#pragma once

#include <span>
#include <vector>

#include "biflow/graph.hpp"

namespace biflow {

struct MaxflowResult {
  ArcFlow flow;
  std::vector<Vertex> cut;  // source side of a minimum cut, ascending
  Cap value = 0;
};

// Maximum flow from the set of sources to the set of sinks under the given
// (possibly asymmetric) arc capacities. The reported cut is the set of
// vertices residually reachable from the sources, and its capacity is
// checked against the flow value. Sources and sinks must be disjoint.
MaxflowResult max_flow(const Graph& g, const ArcCaps& caps,
                       std::span<const Vertex> sources,
                       std::span<const Vertex> sinks);

MaxflowResult max_flow(const Graph& g, const ArcCaps& caps, Vertex s,
                       Vertex t);

// A flow of value exactly k from s to t; throws ValueInfeasible if the
// maximum flow is smaller than k.
ArcFlow flow_of_value(const Graph& g, const ArcCaps& caps, Vertex s, Vertex t,
                      Cap k);

// Residual capacities c'(a) = c(a) - f(a) + f(reverse a) for both arcs of
// every edge.
ArcCaps residual_capacity(const ArcCaps& caps, const ArcFlow& f);

// Total capacity of arcs leaving the vertex set `side`.
Cap cut_capacity(const Graph& g, const ArcCaps& caps,
                 std::span<const Vertex> side);

}  // namespace biflow
