#pragma once

#include <span>
#include <vector>

#include "biflow/graph.hpp"

namespace biflow {

struct Biflow {
  ArcFlow f1, f2;
};

// Net outflow minus inflow per vertex.
std::vector<Cap> divergence(const Graph& g, const ArcFlow& f);

// Divergence at a single vertex.
Cap flow_value(const Graph& g, const ArcFlow& f, Vertex s);

// Cancel opposite flow on each edge so that fwd * bwd == 0.
void normalize(ArcFlow& f);

ArcFlow reverse_flow(const ArcFlow& f);

// Arc-wise sum followed by normalization; the natural composition of flows.
ArcFlow add_flows(const ArcFlow& a, const ArcFlow& b);

// Arc-wise difference; requires b <= a on every arc.
ArcFlow subtract_flows(const ArcFlow& a, const ArcFlow& b);

// Checks conservation away from s and t, capacity and normalization, and
// returns the flow value at s. Throws NotAFlow on any violation.
Cap verify_flow(const Graph& g, const ArcCaps& caps, const ArcFlow& f,
                Vertex s, Vertex t);

struct PathFlow {
  Cap mult = 0;
  std::vector<Vertex> vertices;
};

struct PathDecomposition {
  std::vector<PathFlow> paths;
};

// Peels f into simple source-to-sink paths; any leftover circulation is
// dropped, so the reassembled flow is bounded by f on every arc and carries
// the same divergence at the listed endpoints.
PathDecomposition decompose(const Graph& g, const ArcFlow& f,
                            std::span<const Vertex> sources,
                            std::span<const Vertex> sinks);

ArcFlow flow_from_paths(const Graph& g, std::span<const PathFlow> paths);

// Removes revisits from a vertex walk, leaving a simple path.
std::vector<Vertex> shortcut_walk(const std::vector<Vertex>& walk);

struct UncrossStep {
  Vertex exchange_vertex = -1;
  Cap moved = 0;
  Cap crossing_before = 0;
  Cap crossing_after = 0;
};

struct UncrossTrace {
  Cap initial_total = 0;
  Cap initial_crossing = 0;
  std::vector<UncrossStep> steps;
};

// Rewires mixed path pairs (s1 to t2 with s2 to t1) at a shared vertex until
// every path joins a source to its own sink. Requires every mixed pair to
// intersect; throws NotCrossing otherwise. The result uses, on each arc, at
// most the flow the input paths used.
PathDecomposition uncross(const Graph& g, PathDecomposition d,
                          const Terminals& t, UncrossTrace* trace = nullptr);

// Hands out a flow's path decomposition in portions of requested value.
class FlowDispenser {
 public:
  FlowDispenser(const Graph& g, const ArcFlow& f, Vertex source, Vertex sink);
  Cap remaining() const { return remaining_; }
  ArcFlow take(Cap units);

 private:
  const Graph* g_;
  std::vector<PathFlow> paths_;
  std::size_t next_ = 0;
  Cap remaining_ = 0;
};

// First k units of fa (a flow from a to mid) composed with the first k units
// of fb (a flow from mid to b); the result is a flow of value k from a to b.
ArcFlow concatenate(const Graph& g, const ArcFlow& fa, Vertex a, Vertex mid,
                    const ArcFlow& fb, Vertex b, Cap k);

// Reinterprets a flow on one graph as a flow on another via vertex names.
// Every edge carrying flow must exist in the target graph.
ArcFlow transport_flow(const Graph& from, const ArcFlow& f, const Graph& to);

}  // namespace biflow
