#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "biflow/errors.hpp"

namespace biflow {

using Vertex = int;
using EdgeId = int;
using Cap = long long;

struct Edge {
  Vertex u = -1;
  Vertex v = -1;
  Cap cap = 0;
};

// Undirected capacitated graph with named vertices. Parallel edges merge by
// summing capacities, so each unordered vertex pair has at most one edge id.
// Vertex and edge ids are assigned in first-appearance order; copies extended
// in place keep the parent's ids as a prefix, letting flows transport by
// truncation.
class Graph {
 public:
  Vertex add_vertex(const std::string& name);
  Vertex ensure_vertex(const std::string& name);
  std::optional<Vertex> find_vertex(const std::string& name) const;

  EdgeId add_edge(Vertex u, Vertex v, Cap cap);
  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;
  void set_capacity(EdgeId e, Cap cap);

  int n() const { return static_cast<int>(names_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::string& name(Vertex v) const { return names_[v]; }
  std::span<const std::pair<Vertex, EdgeId>> adjacency(Vertex v) const {
    return adj_[v];
  }
  Vertex other_end(EdgeId e, Vertex v) const;

  Cap total_capacity() const;
  // Strictly larger than any feasible flow value; safe "infinite" capacity.
  Cap sentinel() const { return total_capacity() + 1; }
  // Unused vertex name starting with '#', which no parsed input can contain.
  std::string fresh_vertex_name(const std::string& base) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::map<std::pair<Vertex, Vertex>, EdgeId> pair_index_;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
};

struct EdgeSpec {
  std::string u, v;
  Cap cap = 0;
};

Graph build_graph(std::span<const EdgeSpec> edges);

// Per-edge values for the two arcs of each edge; fwd follows the edge's
// stored (u, v) orientation, bwd the reverse.
struct ArcVals {
  std::vector<Cap> fwd, bwd;
  ArcVals() = default;
  explicit ArcVals(int m) : fwd(m, 0), bwd(m, 0) {}
  int size() const { return static_cast<int>(fwd.size()); }
};

using ArcCaps = ArcVals;
using ArcFlow = ArcVals;

// Symmetric arc capacities c(a) = c(rev a) = c(e) for every edge.
ArcCaps undirected_caps(const Graph& g);

struct Terminals {
  Vertex s1 = -1, t1 = -1, s2 = -1, t2 = -1;
  std::array<Vertex, 4> all() const { return {s1, t1, s2, t2}; }
  bool is_terminal(Vertex v) const {
    return v == s1 || v == t1 || v == s2 || v == t2;
  }
};

// Two-commodity instance. e1 joins s1,t1 and e2 joins s2,t2; both are
// guaranteed present (possibly with capacity zero) once augment() has run.
struct Instance {
  Graph g;
  Terminals t;
  EdgeId e1 = -1, e2 = -1;
};

struct Components {
  std::vector<int> comp;  // component id per vertex, -1 for excluded vertices
  int count = 0;
};

Components connected_components(const Graph& g,
                                std::span<const Vertex> excluded = {});
bool is_connected(const Graph& g);

std::vector<Vertex> cut_vertices(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<EdgeId>> blocks;  // edge ids per biconnected block
  std::vector<int> edge_block;              // block index per edge
  std::vector<bool> is_cut_vertex;
};

BlockDecomposition block_decomposition(const Graph& g);

// All unordered pairs {u, v} whose joint removal disconnects the remaining
// vertices; pairs are returned with u < v in lexicographic order.
std::vector<std::pair<Vertex, Vertex>> two_separators(const Graph& g);

// A bridge of the terminal pattern: either one edge joining two terminals
// (other than e1, e2), or one component of G minus the terminals together
// with all edges leaving it. Feet are the attached terminals in the fixed
// order s1, t1, s2, t2.
struct RawBridge {
  std::vector<Vertex> interior;  // empty exactly for a trivial bridge
  std::vector<EdgeId> edges;
  std::vector<Vertex> feet;
};

std::vector<RawBridge> m_bridges(const Instance& inst);

}  // namespace biflow
