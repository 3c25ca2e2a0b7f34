#pragma once

#include <string>

#include "biflow/bicut.hpp"
#include "biflow/flowops.hpp"
#include "biflow/graph.hpp"

namespace biflow {

struct SolveResult {
  Instance inst;           // input with both direct terminal edges present
  Biflow flow;             // integral biflow on inst.g
  Cap val1 = 0, val2 = 0;  // per-commodity values
  Cap value = 0;           // val1 + val2
  BicutCertificate bicut;  // independently computed upper bound
  bool certified = false;  // value meets the bound and the flow re-verifies
  std::string route;       // construction that produced the kept answer
  std::string trail;       // every attempt with its outcome
};

// Computes a maximum integral biflow with a matching bicut certificate
// whenever the structural case analysis applies, and the best verified
// answer it can construct otherwise (certified = false in that case).
SolveResult solve(const Instance& input);
SolveResult solve(Graph g, const Terminals& t);

}  // namespace biflow
