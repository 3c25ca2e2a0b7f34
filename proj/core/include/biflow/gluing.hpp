#pragma once

#include "biflow/flowops.hpp"
#include "biflow/graph.hpp"
#include "biflow/structure.hpp"

namespace biflow {

// The direct terminal edges always serve their own commodities at full
// capacity, so the case algorithms run with both capacities forced to zero
// and the remembered amounts are loaded back at the end.
struct DirectAddback {
  Cap c1 = 0, c2 = 0;
};

DirectAddback zero_direct_edges(Instance& inst);

// Restores the zeroed capacities and routes each one on its own commodity,
// oriented source to sink.
void apply_direct_addback(const Instance& inst, const DirectAddback& add,
                          Biflow& b);

// The four cut values steering one side of the gluing solve; index 0 is the
// piece hanging on hub u, index 1 the piece on hub v.  tau_s separates the
// source from the rest of the attachment triple, tau_t the sink, and tau the
// two terminals from each other, all within the piece's own edges.
struct SideCuts {
  Cap tau_s[2] = {0, 0};
  Cap tau_t[2] = {0, 0};
  Cap tau[2] = {0, 0};
};

// A side is consistent when one terminal's cut dominates in both pieces.
// Ties count as consistent and prefer the source.
struct Consistency {
  bool consistent = false;
  bool source_dominant = false;
};

Consistency consistency(const SideCuts& c);

// Algorithm for instances split by hub pairs into a central part and four
// terminal pieces.  Produces a maximum biflow for valid decompositions; the
// caller certifies against the minimum bicut.
Biflow solve_gluing(const Instance& inst, const GluingPieces& glue,
                    UncrossTrace* trace = nullptr);

}  // namespace biflow
