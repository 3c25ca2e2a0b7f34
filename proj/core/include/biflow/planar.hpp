#pragma once

#include "biflow/flowops.hpp"
#include "biflow/graph.hpp"

namespace biflow {

// Largest per-commodity values compatible with a maximum total: k1 takes as
// much as its own terminal cut allows within the bicut bound, k2 the rest.
// The combined value k1 + k2 always equals the minimum bicut capacity.
struct ValueTargets {
  Cap k1 = 0, k2 = 0;
  Cap total() const { return k1 + k2; }
};

ValueTargets max_value_targets(const Graph& g, const ArcCaps& caps,
                               const Terminals& t);
ValueTargets max_value_targets(const Instance& inst);

// An integral biflow carrying exactly k1 units from a1 to b1 and k2 from a2
// to b2. Requires k1 within commodity 1's minimum cut, k2 within commodity
// 2's, and k1 + k2 within the minimum bicut; throws ValueInfeasible
// otherwise. Terminals may coincide across the two commodities (shared
// endpoints are handled by dedicated constructions). For four distinct
// terminals the crossing-exchange pipeline runs, first as given and then
// with commodity 2 reversed; if both runs leave vertex-disjoint mixed paths,
// NotCrossing propagates to the caller.
Biflow biflow_with_values(const Graph& g, const ArcCaps& caps, Vertex a1,
                          Vertex b1, Vertex a2, Vertex b2, Cap k1, Cap k2,
                          UncrossTrace* trace = nullptr);

// Biflow with the requested per-commodity values via the crossing-exchange
// pipeline on the instance's own capacities.
Biflow solve_planar(const Instance& inst, Cap k1, Cap k2,
                    UncrossTrace* trace = nullptr);

// Same at the maximal targets; the result is a maximum biflow whenever the
// pipeline applies.
Biflow solve_planar(const Instance& inst, UncrossTrace* trace = nullptr);

}  // namespace biflow
