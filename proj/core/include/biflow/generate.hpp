#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "biflow/graph.hpp"

namespace biflow {

// Deterministic uniform integers: rejection sampling over std::mt19937_64,
// whose output sequence is fixed by the standard, so generated instances are
// identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t bits() { return eng_(); }
  // Uniform in [lo, hi], inclusive.
  long long range(long long lo, long long hi);
  bool coin() { return range(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

struct GenOptions {
  int n = 12;           // upper bound on the vertex count
  Cap max_cap = 10;     // capacities drawn from [0, max_cap]
  std::uint64_t seed = 1;
};

// Outer cycle visiting s1, s2, t2, t1 in order, filled with non-crossing
// chords: the crossing-exchange hypothesis holds by construction.
Instance gen_planar(const GenOptions& opt);

// One glued side: s1, t1 hang on a hub pair of an outer cycle that also
// carries the second direct edge; handled through the side-2 gadget.
Instance gen_gluing2(const GenOptions& opt);

// Both sides glued: either a shared hub pair joined by an edge, or four
// hubs in order v1, u1, u2, v2 on an outer cycle with non-crossing chords.
Instance gen_gluing3(const GenOptions& opt);

// Bridges of the terminal pattern only: direct edges, trivial mixed edges,
// three-feet bridges, and four-feet bridges with a split vertex.
Instance gen_bridges(const GenOptions& opt);

// The forbidden pattern: a four-cycle with the two sinks pendant on
// opposite sides; equal capacities produce a gap between the maximum
// integral biflow and the bicut bound whenever the common capacity is odd.
Instance gen_forbidden(const GenOptions& opt);

// Arbitrary connected graph (spanning tree plus random extra edges) with
// four random distinct terminals; no structural promise.
Instance gen_random_connected(const GenOptions& opt);

// Dispatch by class name: planar, gluing2, gluing3, bridges, forbidden,
// random.  Throws ParseError on an unknown name.
Instance generate(const std::string& cls, const GenOptions& opt);

// Adds `extra` decorations to an instance: pendant vertices, pendant
// triangles, and terminal-free lobes strung across existing edges.  The
// reduction strips all of them without changing the core.
Instance attach_decorations(const Instance& base, std::uint64_t seed,
                            int extra);

}  // namespace biflow
