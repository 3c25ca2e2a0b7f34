#include "biflow/graph.hpp"

#include <algorithm>
#include <numeric>

namespace biflow {

Vertex Graph::add_vertex(const std::string& name) {
  require(!name.empty(), ErrorCode::ParseError, "empty vertex name");
  require(index_.find(name) == index_.end(), ErrorCode::Internal,
          "duplicate vertex name: " + name);
  Vertex v = n();
  names_.push_back(name);
  index_.emplace(name, v);
  adj_.emplace_back();
  return v;
}

Vertex Graph::ensure_vertex(const std::string& name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return add_vertex(name);
}

std::optional<Vertex> Graph::find_vertex(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

EdgeId Graph::add_edge(Vertex u, Vertex v, Cap cap) {
  require(u >= 0 && u < n() && v >= 0 && v < n(), ErrorCode::Internal,
          "edge endpoint out of range");
  require(u != v, ErrorCode::SelfLoop, "self-loop at " + names_[u]);
  require(cap >= 0, ErrorCode::NegativeCapacity,
          "negative capacity on " + names_[u] + "-" + names_[v]);
  auto key = std::minmax(u, v);
  if (auto it = pair_index_.find(key); it != pair_index_.end()) {
    edges_[it->second].cap += cap;
    return it->second;
  }
  EdgeId e = m();
  edges_.push_back({u, v, cap});
  pair_index_.emplace(key, e);
  adj_[u].emplace_back(v, e);
  adj_[v].emplace_back(u, e);
  return e;
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const {
  auto key = std::minmax(u, v);
  if (auto it = pair_index_.find(key); it != pair_index_.end())
    return it->second;
  return std::nullopt;
}

void Graph::set_capacity(EdgeId e, Cap cap) {
  require(cap >= 0, ErrorCode::NegativeCapacity, "negative capacity");
  edges_[e].cap = cap;
}

Vertex Graph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edges_[e];
  require(ed.u == v || ed.v == v, ErrorCode::Internal,
          "vertex not incident to edge");
  return ed.u == v ? ed.v : ed.u;
}

Cap Graph::total_capacity() const {
  Cap total = 0;
  for (const Edge& e : edges_) total += e.cap;
  return total;
}

std::string Graph::fresh_vertex_name(const std::string& base) const {
  std::string candidate = "#" + base;
  int k = 2;
  while (index_.find(candidate) != index_.end())
    candidate = "#" + base + std::to_string(k++);
  return candidate;
}

Graph build_graph(std::span<const EdgeSpec> edges) {
  Graph g;
  for (const EdgeSpec& e : edges) {
    Vertex u = g.ensure_vertex(e.u);
    Vertex v = g.ensure_vertex(e.v);
    g.add_edge(u, v, e.cap);
  }
  return g;
}

ArcCaps undirected_caps(const Graph& g) {
  ArcCaps caps(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) caps.fwd[e] = caps.bwd[e] = g.edge(e).cap;
  return caps;
}

Components connected_components(const Graph& g,
                                std::span<const Vertex> excluded) {
  Components out;
  out.comp.assign(g.n(), -2);
  for (Vertex v : excluded) out.comp[v] = -1;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.n(); ++start) {
    if (out.comp[start] != -2) continue;
    int id = out.count++;
    out.comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto [w, e] : g.adjacency(v)) {
        if (out.comp[w] == -2) {
          out.comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.n() == 0 || connected_components(g).count == 1;
}

namespace {

// Iterative biconnectivity walk shared by the block decomposition and the
// articulation helpers; `excluded` vertices are treated as absent.
struct BiconnWalk {
  const Graph& g;
  std::vector<bool> excluded;
  std::vector<int> disc, low;
  std::vector<bool> cut;
  std::vector<EdgeId> edge_stack;
  BlockDecomposition* out = nullptr;
  int timer = 0;

  explicit BiconnWalk(const Graph& graph) : g(graph) {
    excluded.assign(g.n(), false);
    disc.assign(g.n(), -1);
    low.assign(g.n(), 0);
    cut.assign(g.n(), false);
  }

  void close_block(EdgeId top_edge) {
    if (!out) {
      while (!edge_stack.empty()) {
        EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        if (e == top_edge) break;
      }
      return;
    }
    std::vector<EdgeId> block;
    while (!edge_stack.empty()) {
      EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == top_edge) break;
    }
    std::sort(block.begin(), block.end());
    int id = static_cast<int>(out->blocks.size());
    for (EdgeId e : block) out->edge_block[e] = id;
    out->blocks.push_back(std::move(block));
  }

  void run() {
    struct Frame {
      Vertex v;
      EdgeId parent_edge;
      std::size_t ai;
      int children;
    };
    std::vector<Frame> frames;
    for (Vertex root = 0; root < g.n(); ++root) {
      if (disc[root] != -1 || excluded[root]) continue;
      frames.push_back({root, -1, 0, 0});
      disc[root] = low[root] = timer++;
      while (!frames.empty()) {
        Frame& f = frames.back();
        auto adj = g.adjacency(f.v);
        if (f.ai < adj.size()) {
          auto [w, e] = adj[f.ai++];
          if (excluded[w] || e == f.parent_edge) continue;
          if (disc[w] == -1) {
            edge_stack.push_back(e);
            disc[w] = low[w] = timer++;
            frames.push_back({w, e, 0, 0});
          } else if (disc[w] < disc[f.v]) {
            edge_stack.push_back(e);
            low[f.v] = std::min(low[f.v], disc[w]);
          }
        } else {
          Frame done = f;
          frames.pop_back();
          if (frames.empty()) {
            if (done.children >= 2) cut[done.v] = true;
            continue;
          }
          Frame& parent = frames.back();
          parent.children++;
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] >= disc[parent.v]) {
            if (frames.size() >= 2) cut[parent.v] = true;
            close_block(done.parent_edge);
          }
        }
      }
    }
  }
};

}  // namespace

std::vector<Vertex> cut_vertices(const Graph& g) {
  BiconnWalk walk(g);
  walk.run();
  std::vector<Vertex> result;
  for (Vertex v = 0; v < g.n(); ++v)
    if (walk.cut[v]) result.push_back(v);
  return result;
}

BlockDecomposition block_decomposition(const Graph& g) {
  BlockDecomposition out;
  out.edge_block.assign(g.m(), -1);
  BiconnWalk walk(g);
  walk.out = &out;
  walk.run();
  out.is_cut_vertex = std::move(walk.cut);
  return out;
}

namespace {

int component_count_excluding(const Graph& g, Vertex a, Vertex b) {
  std::array<Vertex, 2> ex = {a, b};
  return connected_components(g, ex).count;
}

}  // namespace

std::vector<std::pair<Vertex, Vertex>> two_separators(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> result;
  if (g.n() < 4) return result;
  for (Vertex u = 0; u < g.n(); ++u) {
    std::array<Vertex, 1> ex = {u};
    if (connected_components(g, ex).count == 1) {
      // Remainder is connected, so partners are exactly its cut vertices.
      BiconnWalk walk(g);
      walk.excluded[u] = true;
      walk.run();
      for (Vertex v = 0; v < g.n(); ++v)
        if (walk.cut[v]) result.emplace_back(std::min(u, v), std::max(u, v));
    } else {
      for (Vertex v = 0; v < g.n(); ++v)
        if (v != u && component_count_excluding(g, u, v) >= 2)
          result.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<RawBridge> m_bridges(const Instance& inst) {
  const Graph& g = inst.g;
  auto terminals = inst.t.all();
  auto foot_rank = [&](Vertex v) {
    for (int i = 0; i < 4; ++i)
      if (terminals[i] == v) return i;
    fail(ErrorCode::Internal, "foot is not a terminal");
  };

  std::vector<RawBridge> bridges;
  // Trivial bridges: terminal-terminal edges other than the pattern's own.
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e == inst.e1 || e == inst.e2) continue;
    const Edge& ed = g.edge(e);
    if (inst.t.is_terminal(ed.u) && inst.t.is_terminal(ed.v)) {
      RawBridge b;
      b.edges.push_back(e);
      b.feet = {ed.u, ed.v};
      std::sort(b.feet.begin(), b.feet.end(),
                [&](Vertex a, Vertex c) { return foot_rank(a) < foot_rank(c); });
      bridges.push_back(std::move(b));
    }
  }
  // Nontrivial bridges: components of G minus the terminals.
  Components comps = connected_components(g, terminals);
  std::vector<RawBridge> nontrivial(comps.count);
  for (Vertex v = 0; v < g.n(); ++v)
    if (comps.comp[v] >= 0) nontrivial[comps.comp[v]].interior.push_back(v);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    int cu = comps.comp[ed.u], cv = comps.comp[ed.v];
    if (cu < 0 && cv < 0) continue;
    require(cu < 0 || cv < 0 || cu == cv, ErrorCode::Internal,
            "edge joins two distinct bridge components");
    nontrivial[cu >= 0 ? cu : cv].edges.push_back(e);
  }
  for (RawBridge& b : nontrivial) {
    std::array<bool, 4> seen = {false, false, false, false};
    for (EdgeId e : b.edges) {
      const Edge& ed = g.edge(e);
      if (inst.t.is_terminal(ed.u)) seen[foot_rank(ed.u)] = true;
      if (inst.t.is_terminal(ed.v)) seen[foot_rank(ed.v)] = true;
    }
    for (int i = 0; i < 4; ++i)
      if (seen[i]) b.feet.push_back(terminals[i]);
    bridges.push_back(std::move(b));
  }
  return bridges;
}

}  // namespace biflow
