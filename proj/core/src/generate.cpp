#include "biflow/generate.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "biflow/structure.hpp"

namespace biflow {

long long Rng::range(long long lo, long long hi) {
  require(lo <= hi, ErrorCode::Internal, "empty random range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(bits());  // full 64-bit range
  if (span == 1) return lo;
  const std::uint64_t rem = (UINT64_MAX % span + 1) % span;  // 2^64 mod span
  std::uint64_t x = bits();
  while (rem != 0 && x > UINT64_MAX - rem) x = bits();
  return lo + static_cast<long long>(x % span);
}

namespace {

// Tracks undirected vertex pairs so no generator ever merges parallel edges
// (which would push capacities past the requested bound).
class EdgeSet {
 public:
  bool add(Graph& g, Vertex u, Vertex v, Cap cap) {
    if (u == v) return false;
    auto key = std::minmax(u, v);
    if (!used_.insert(key).second) return false;
    g.add_edge(u, v, cap);
    return true;
  }
  bool has(Vertex u, Vertex v) const {
    return used_.count(std::minmax(u, v)) > 0;
  }

 private:
  std::set<std::pair<Vertex, Vertex>> used_;
};

struct Chord {
  int a, b;  // cycle positions, a < b
};

bool crosses(const Chord& x, const Chord& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) ||
         (y.a < x.a && x.a < y.b && y.b < x.b);
}

bool crosses_any(const std::vector<Chord>& list, const Chord& c) {
  for (const Chord& x : list) {
    if (crosses(x, c)) return true;
  }
  return false;
}

// Random vertices hanging on a (s, t, hub) triple: each attaches to a
// non-empty subset of the triple, sometimes also to the previous vertex of
// the same piece.
void grow_piece(Graph& g, EdgeSet& edges, Rng& rng, Cap max_cap, Vertex s,
                Vertex t, Vertex hub, int count, const std::string& prefix) {
  Vertex prev = -1;
  for (int i = 0; i < count; ++i) {
    Vertex w = g.add_vertex(prefix + std::to_string(i));
    const int mask = static_cast<int>(rng.range(1, 7));
    if (mask & 1) edges.add(g, w, s, rng.range(0, max_cap));
    if (mask & 2) edges.add(g, w, t, rng.range(0, max_cap));
    if (mask & 4) edges.add(g, w, hub, rng.range(0, max_cap));
    if (prev >= 0 && rng.coin()) edges.add(g, w, prev, rng.range(0, max_cap));
    prev = w;
  }
}

}  // namespace

Instance gen_planar(const GenOptions& opt) {
  Rng rng(opt.seed);
  const int L = std::max(4, opt.n);
  Graph g;
  for (int i = 0; i < L; ++i) g.add_vertex("v" + std::to_string(i));
  EdgeSet edges;
  for (int i = 0; i < L; ++i) {
    edges.add(g, i, (i + 1) % L, rng.range(0, opt.max_cap));
  }
  // Terminal positions in cycle order s1, s2, t2, t1.
  int p = 1, q = 2, r = 3;
  if (L > 4) {
    std::set<int> picks;
    while (static_cast<int>(picks.size()) < 3) {
      picks.insert(static_cast<int>(rng.range(1, L - 1)));
    }
    auto it = picks.begin();
    p = *it++;
    q = *it++;
    r = *it;
  }
  Terminals t{0, r, p, q};
  // Direct terminal edges sit on the outer face; they never affect the
  // crossing property of the inner chords.
  if (!edges.has(t.s1, t.t1)) edges.add(g, t.s1, t.t1, rng.range(0, opt.max_cap));
  if (!edges.has(t.s2, t.t2)) edges.add(g, t.s2, t.t2, rng.range(0, opt.max_cap));

  std::vector<Chord> chords;
  const long long attempts = rng.range(0, 2 * L);
  for (long long i = 0; i < attempts; ++i) {
    int a = static_cast<int>(rng.range(0, L - 1));
    int b = static_cast<int>(rng.range(0, L - 1));
    if (a > b) std::swap(a, b);
    if (b - a <= 1 || (a == 0 && b == L - 1)) continue;  // loop or cycle edge
    Chord c{a, b};
    if (crosses_any(chords, c)) continue;
    if (!edges.add(g, a, b, rng.range(0, opt.max_cap))) continue;
    chords.push_back(c);
  }
  return augment(std::move(g), t);
}

Instance gen_gluing3(const GenOptions& opt) {
  Rng rng(opt.seed);
  Graph g;
  EdgeSet edges;
  Vertex s1 = g.add_vertex("s1");
  Vertex t1 = g.add_vertex("t1");
  Vertex s2 = g.add_vertex("s2");
  Vertex t2 = g.add_vertex("t2");
  const bool shared_hubs = opt.n < 8 || rng.coin();

  Vertex u1, v1, u2, v2;
  int budget;
  if (shared_hubs) {
    u1 = u2 = g.add_vertex("u");
    v1 = v2 = g.add_vertex("v");
    edges.add(g, u1, v1, rng.range(0, opt.max_cap));
    budget = std::max(0, opt.n - 6);
  } else {
    const int h = static_cast<int>(rng.range(4, std::max(4, opt.n - 4)));
    std::vector<Vertex> cyc;
    for (int i = 0; i < h; ++i) cyc.push_back(g.add_vertex("c" + std::to_string(i)));
    for (int i = 0; i < h; ++i) {
      edges.add(g, cyc[i], cyc[(i + 1) % h], rng.range(0, opt.max_cap));
    }
    // Hubs in cycle order v1, u1, u2, v2.
    int a = 1, b = 2, c = 3;
    if (h > 4) {
      std::set<int> picks;
      while (static_cast<int>(picks.size()) < 3) {
        picks.insert(static_cast<int>(rng.range(1, h - 1)));
      }
      auto it = picks.begin();
      a = *it++;
      b = *it++;
      c = *it;
    }
    v1 = cyc[0];
    u1 = cyc[a];
    u2 = cyc[b];
    v2 = cyc[c];
    std::vector<Chord> chords;
    const long long attempts = rng.range(0, h);
    for (long long i = 0; i < attempts; ++i) {
      int x = static_cast<int>(rng.range(0, h - 1));
      int y = static_cast<int>(rng.range(0, h - 1));
      if (x > y) std::swap(x, y);
      if (y - x <= 1 || (x == 0 && y == h - 1)) continue;
      Chord ch{x, y};
      if (crosses_any(chords, ch)) continue;
      if (!edges.add(g, cyc[x], cyc[y], rng.range(0, opt.max_cap))) continue;
      chords.push_back(ch);
    }
    budget = std::max(0, opt.n - 4 - h);
  }

  edges.add(g, s1, t1, rng.range(0, opt.max_cap));
  edges.add(g, s2, t2, rng.range(0, opt.max_cap));
  for (Vertex hub : {u1, v1}) {
    edges.add(g, s1, hub, rng.range(0, opt.max_cap));
    edges.add(g, t1, hub, rng.range(0, opt.max_cap));
  }
  for (Vertex hub : {u2, v2}) {
    edges.add(g, s2, hub, rng.range(0, opt.max_cap));
    edges.add(g, t2, hub, rng.range(0, opt.max_cap));
  }

  const int extra = budget > 0 ? static_cast<int>(rng.range(0, budget)) : 0;
  int left = extra;
  int counts[4] = {0, 0, 0, 0};
  while (left-- > 0) ++counts[rng.range(0, 3)];
  grow_piece(g, edges, rng, opt.max_cap, s1, t1, u1, counts[0], "a");
  grow_piece(g, edges, rng, opt.max_cap, s1, t1, v1, counts[1], "b");
  grow_piece(g, edges, rng, opt.max_cap, s2, t2, u2, counts[2], "d");
  grow_piece(g, edges, rng, opt.max_cap, s2, t2, v2, counts[3], "e");
  return augment(std::move(g), Terminals{s1, t1, s2, t2});
}

Instance gen_gluing2(const GenOptions& opt) {
  Rng rng(opt.seed);
  Graph g;
  EdgeSet edges;
  const int n = std::max(6, opt.n);
  const int h = static_cast<int>(rng.range(4, n - 2));
  std::vector<Vertex> cyc;
  for (int i = 0; i < h; ++i) cyc.push_back(g.add_vertex("c" + std::to_string(i)));
  for (int i = 0; i < h; ++i) {
    edges.add(g, cyc[i], cyc[(i + 1) % h], rng.range(0, opt.max_cap));
  }
  // Cycle order u1 .. s2 t2 .. v1; the direct side-2 edge is a cycle edge.
  const int p = static_cast<int>(rng.range(1, h - 3));
  const int q = static_cast<int>(rng.range(p + 2, h - 1));
  const Vertex u1 = cyc[0];
  const Vertex s2 = cyc[p];
  const Vertex t2 = cyc[p + 1];
  const Vertex v1 = cyc[q];

  std::vector<Chord> chords;
  if (h >= p + 5) {
    // Nested chords off s2 and t2 keep side 2 from gluing onto a hub pair.
    const Cap cmax = std::max<Cap>(1, opt.max_cap);
    const int y = static_cast<int>(rng.range(p + 3, h - 2));
    const int x = static_cast<int>(rng.range(y + 1, h - 1));
    if (edges.add(g, cyc[p], cyc[x], rng.range(1, cmax)))
      chords.push_back(Chord{p, x});
    if (edges.add(g, cyc[p + 1], cyc[y], rng.range(1, cmax)))
      chords.push_back(Chord{p + 1, y});
  }
  const long long attempts = rng.range(0, h);
  for (long long i = 0; i < attempts; ++i) {
    int x = static_cast<int>(rng.range(0, h - 1));
    int y = static_cast<int>(rng.range(0, h - 1));
    if (x > y) std::swap(x, y);
    if (y - x <= 1 || (x == 0 && y == h - 1)) continue;
    Chord ch{x, y};
    if (crosses_any(chords, ch)) continue;
    if (!edges.add(g, cyc[x], cyc[y], rng.range(0, opt.max_cap))) continue;
    chords.push_back(ch);
  }

  Vertex s1 = g.add_vertex("s1");
  Vertex t1 = g.add_vertex("t1");
  edges.add(g, s1, t1, rng.range(0, opt.max_cap));
  edges.add(g, s1, u1, rng.range(0, opt.max_cap));
  edges.add(g, s1, v1, rng.range(0, opt.max_cap));
  edges.add(g, t1, u1, rng.range(0, opt.max_cap));
  edges.add(g, t1, v1, rng.range(0, opt.max_cap));

  int budget = std::max(0, n - h - 2);
  const int extra = budget > 0 ? static_cast<int>(rng.range(0, budget)) : 0;
  int on_u = static_cast<int>(rng.range(0, extra));
  grow_piece(g, edges, rng, opt.max_cap, s1, t1, u1, on_u, "a");
  grow_piece(g, edges, rng, opt.max_cap, s1, t1, v1, extra - on_u, "b");
  return augment(std::move(g), Terminals{s1, t1, s2, t2});
}

Instance gen_bridges(const GenOptions& opt) {
  Rng rng(opt.seed);
  Graph g;
  EdgeSet edges;
  Vertex s1 = g.add_vertex("s1");
  Vertex t1 = g.add_vertex("t1");
  Vertex s2 = g.add_vertex("s2");
  Vertex t2 = g.add_vertex("t2");
  const Terminals t{s1, t1, s2, t2};
  const Cap cmax = std::max<Cap>(1, opt.max_cap);
  edges.add(g, s1, t1, rng.range(0, opt.max_cap));
  edges.add(g, s2, t2, rng.range(0, opt.max_cap));
  // A cycle through both direct edges keeps them in one biconnected block.
  edges.add(g, t1, t2, rng.range(1, cmax));
  Vertex w0 = g.add_vertex("w0");
  edges.add(g, w0, s1, rng.range(1, cmax));
  edges.add(g, w0, t1, rng.range(1, cmax));
  edges.add(g, w0, s2, rng.range(1, cmax));

  const Vertex mixed_from[4] = {s1, s1, s2, t2};
  const Vertex mixed_to[4] = {s2, t2, t1, t1};
  int budget = std::max(0, opt.n - 5);
  int next_id = 1;
  auto fresh = [&]() { return g.add_vertex("w" + std::to_string(next_id++)); };
  for (int guard = 0; budget > 0 && guard < 4 * opt.n + 16; ++guard) {
    if (rng.range(0, 3) == 0) break;  // occasional small instance
    switch (rng.range(0, 3)) {
      case 0: {  // trivial mixed edge
        const int k = static_cast<int>(rng.range(0, 3));
        edges.add(g, mixed_from[k], mixed_to[k], rng.range(0, opt.max_cap));
        break;
      }
      case 1: {  // three feet
        const bool pair1 = rng.coin();
        const Vertex fs = pair1 ? s1 : s2, ft = pair1 ? t1 : t2;
        const Vertex fr = pair1 ? (rng.coin() ? s2 : t2)
                                : (rng.coin() ? s1 : t1);
        if (budget >= 2 && rng.coin()) {
          Vertex w1 = fresh(), w2 = fresh();
          edges.add(g, w1, fs, rng.range(0, opt.max_cap));
          edges.add(g, w1, ft, rng.range(0, opt.max_cap));
          edges.add(g, w2, w1, rng.range(0, opt.max_cap));
          edges.add(g, w2, fr, rng.range(0, opt.max_cap));
          budget -= 2;
        } else {
          Vertex w = fresh();
          edges.add(g, w, fs, rng.range(0, opt.max_cap));
          edges.add(g, w, ft, rng.range(0, opt.max_cap));
          edges.add(g, w, fr, rng.range(0, opt.max_cap));
          budget -= 1;
        }
        break;
      }
      case 2: {  // four feet with a split vertex
        if (budget >= 3 && rng.coin()) {
          Vertex a = fresh(), x = fresh(), b = fresh();
          edges.add(g, a, s1, rng.range(0, opt.max_cap));
          edges.add(g, a, t1, rng.range(0, opt.max_cap));
          edges.add(g, a, x, rng.range(0, opt.max_cap));
          edges.add(g, b, s2, rng.range(0, opt.max_cap));
          edges.add(g, b, t2, rng.range(0, opt.max_cap));
          edges.add(g, b, x, rng.range(0, opt.max_cap));
          budget -= 3;
        } else {
          Vertex x = fresh();
          for (Vertex f : t.all()) edges.add(g, x, f, rng.range(0, opt.max_cap));
          budget -= 1;
        }
        break;
      }
      default: {  // two feet; the reduction contracts it onto its pair
        Vertex w = fresh();
        const int k = static_cast<int>(rng.range(0, 5));
        Vertex fa, fb;
        if (k == 4) {
          fa = s1;
          fb = t1;
        } else if (k == 5) {
          fa = s2;
          fb = t2;
        } else {
          fa = mixed_from[k];
          fb = mixed_to[k];
        }
        edges.add(g, w, fa, rng.range(1, cmax));
        edges.add(g, w, fb, rng.range(1, cmax));
        budget -= 1;
        break;
      }
    }
  }
  return augment(std::move(g), t);
}

Instance gen_forbidden(const GenOptions& opt) {
  Rng rng(opt.seed);
  Graph g;
  Vertex c1 = g.add_vertex("c1");
  Vertex c2 = g.add_vertex("c2");
  Vertex c3 = g.add_vertex("c3");
  Vertex c4 = g.add_vertex("c4");
  Vertex p3 = g.add_vertex("p3");
  Vertex p4 = g.add_vertex("p4");
  const Cap cap_max = std::max<Cap>(1, opt.max_cap);
  Cap caps[6];
  if (rng.coin()) {
    const Cap k = rng.range(1, cap_max);
    for (Cap& c : caps) c = k;
  } else {
    for (Cap& c : caps) c = rng.range(1, cap_max);
  }
  g.add_edge(c1, c2, caps[0]);
  g.add_edge(c2, c3, caps[1]);
  g.add_edge(c3, c4, caps[2]);
  g.add_edge(c4, c1, caps[3]);
  g.add_edge(c3, p3, caps[4]);
  g.add_edge(c4, p4, caps[5]);
  return augment(std::move(g), Terminals{c1, p3, c2, p4});
}

Instance gen_random_connected(const GenOptions& opt) {
  Rng rng(opt.seed);
  const int n = std::max(4, opt.n);
  Graph g;
  EdgeSet edges;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    edges.add(g, i, static_cast<Vertex>(rng.range(0, i - 1)),
              rng.range(0, opt.max_cap));
  }
  const long long extra = rng.range(0, n);
  for (long long i = 0; i < extra; ++i) {
    const Vertex a = static_cast<Vertex>(rng.range(0, n - 1));
    const Vertex b = static_cast<Vertex>(rng.range(0, n - 1));
    if (a != b) edges.add(g, a, b, rng.range(0, opt.max_cap));
  }
  std::set<int> picks;
  while (static_cast<int>(picks.size()) < 4) {
    picks.insert(static_cast<int>(rng.range(0, n - 1)));
  }
  std::vector<Vertex> term(picks.begin(), picks.end());
  return augment(std::move(g),
                 Terminals{term[0], term[1], term[2], term[3]});
}

Instance generate(const std::string& cls, const GenOptions& opt) {
  if (cls == "planar") return gen_planar(opt);
  if (cls == "gluing2") return gen_gluing2(opt);
  if (cls == "gluing3") return gen_gluing3(opt);
  if (cls == "bridges") return gen_bridges(opt);
  if (cls == "forbidden") return gen_forbidden(opt);
  if (cls == "random") return gen_random_connected(opt);
  fail(ErrorCode::ParseError, "unknown instance class: " + cls);
}

Instance attach_decorations(const Instance& base, std::uint64_t seed,
                            int extra) {
  Rng rng(seed);
  Instance out = base;
  Graph& g = out.g;
  int next = 0;
  auto fresh = [&]() { return g.add_vertex("dec" + std::to_string(next++)); };
  const int base_m = g.m();
  for (int i = 0; i < extra; ++i) {
    switch (rng.range(0, 3)) {
      case 0: {  // lobe across an existing edge: one middle vertex
        const Edge e = g.edge(static_cast<EdgeId>(rng.range(0, base_m - 1)));
        Vertex m = fresh();
        g.add_edge(e.u, m, rng.range(1, 5));
        g.add_edge(m, e.v, rng.range(1, 5));
        break;
      }
      case 1: {  // lobe across an existing edge: two middle vertices
        const Edge e = g.edge(static_cast<EdgeId>(rng.range(0, base_m - 1)));
        Vertex m1 = fresh(), m2 = fresh();
        g.add_edge(e.u, m1, rng.range(1, 5));
        g.add_edge(m1, m2, rng.range(1, 5));
        g.add_edge(m2, e.v, rng.range(1, 5));
        break;
      }
      case 2: {  // pendant triangle block
        const Vertex u = static_cast<Vertex>(rng.range(0, g.n() - 1));
        Vertex p = fresh(), q = fresh();
        g.add_edge(u, p, rng.range(1, 5));
        g.add_edge(p, q, rng.range(1, 5));
        g.add_edge(q, u, rng.range(1, 5));
        break;
      }
      default: {  // pendant vertex
        const Vertex u = static_cast<Vertex>(rng.range(0, g.n() - 1));
        g.add_edge(u, fresh(), rng.range(1, 5));
        break;
      }
    }
  }
  return out;
}

}  // namespace biflow
