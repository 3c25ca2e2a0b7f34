#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biflow/graph.hpp"
#include "biflow/solver.hpp"

namespace biflow {

// Instance text format, one directive per line:
//   # free-form comment
//   terminals <s1> <t1> <s2> <t2>
//   edge <u> <v> <cap>
// Vertex names are arbitrary non-whitespace tokens.  Repeated edges merge by
// adding their capacities; self-loops and negative capacities are errors.
// Exactly one terminals line is required.  Errors carry the line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

void emit_instance(std::ostream& out, const Instance& inst);

// Result format:
//   value <N>
//   bicut <N>
//   certified <yes|no>
//   path <1|2> <multiplicity> <v0> <v1> ... <vk>
// Path lines decompose each commodity's flow; they are omitted when
// with_paths is false.
void emit_result(std::ostream& out, const SolveResult& res, bool with_paths);

struct ParsedSolution {
  Cap value = 0;
  Cap bicut = 0;
  bool certified = false;
  std::vector<PathFlow> paths1, paths2;
};

// Reads the result format back, resolving vertex names against g.
ParsedSolution parse_solution(std::istream& in, const Graph& g);

}  // namespace biflow
