#include "biflow/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "biflow/structure.hpp"

namespace biflow {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

Cap parse_cap(const std::string& tok, int line) {
  std::size_t pos = 0;
  Cap value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    parse_fail(line, "bad capacity '" + tok + "'");
  }
  if (pos != tok.size()) parse_fail(line, "bad capacity '" + tok + "'");
  if (value < 0) parse_fail(line, "negative capacity '" + tok + "'");
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Graph g;
  bool have_terminals = false;
  std::string tnames[4];
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank line
    if (word[0] == '#') continue;
    if (word == "terminals") {
      if (have_terminals) parse_fail(lineno, "duplicate terminals line");
      for (std::string& name : tnames) {
        if (!(ls >> name)) parse_fail(lineno, "terminals needs four names");
      }
      std::string rest;
      if (ls >> rest) parse_fail(lineno, "trailing tokens after terminals");
      have_terminals = true;
    } else if (word == "edge") {
      std::string u, v, cap;
      if (!(ls >> u >> v >> cap)) {
        parse_fail(lineno, "edge needs two names and a capacity");
      }
      std::string rest;
      if (ls >> rest) parse_fail(lineno, "trailing tokens after edge");
      if (u == v) parse_fail(lineno, "self-loop at '" + u + "'");
      g.add_edge(g.ensure_vertex(u), g.ensure_vertex(v), parse_cap(cap, lineno));
    } else {
      parse_fail(lineno, "unknown directive '" + word + "'");
    }
  }
  if (!have_terminals) {
    fail(ErrorCode::ParseError, "missing terminals line");
  }
  Terminals t;
  Vertex* slots[4] = {&t.s1, &t.t1, &t.s2, &t.t2};
  for (int i = 0; i < 4; ++i) {
    *slots[i] = g.ensure_vertex(tnames[i]);
  }
  return augment(std::move(g), t);
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return parse_instance(in);
}

void emit_instance(std::ostream& out, const Instance& inst) {
  const Graph& g = inst.g;
  out << "terminals " << g.name(inst.t.s1) << ' ' << g.name(inst.t.t1) << ' '
      << g.name(inst.t.s2) << ' ' << g.name(inst.t.t2) << '\n';
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    out << "edge " << g.name(ed.u) << ' ' << g.name(ed.v) << ' ' << ed.cap
        << '\n';
  }
}

void emit_result(std::ostream& out, const SolveResult& res, bool with_paths) {
  out << "value " << res.value << '\n';
  out << "bicut " << res.bicut.value << '\n';
  out << "certified " << (res.certified ? "yes" : "no") << '\n';
  if (!with_paths) return;
  const Graph& g = res.inst.g;
  const Terminals& t = res.inst.t;
  const ArcFlow* flows[2] = {&res.flow.f1, &res.flow.f2};
  const Vertex src[2] = {t.s1, t.s2};
  const Vertex snk[2] = {t.t1, t.t2};
  for (int c = 0; c < 2; ++c) {
    const Vertex sources[1] = {src[c]};
    const Vertex sinks[1] = {snk[c]};
    PathDecomposition d = decompose(g, *flows[c], sources, sinks);
    for (const PathFlow& p : d.paths) {
      out << "path " << (c + 1) << ' ' << p.mult;
      for (Vertex v : p.vertices) out << ' ' << g.name(v);
      out << '\n';
    }
  }
}

ParsedSolution parse_solution(std::istream& in, const Graph& g) {
  ParsedSolution sol;
  std::string line;
  int lineno = 0;
  bool have_value = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word[0] == '#') continue;
    if (word == "value") {
      std::string tok;
      if (!(ls >> tok)) parse_fail(lineno, "value needs a number");
      sol.value = parse_cap(tok, lineno);
      have_value = true;
    } else if (word == "bicut") {
      std::string tok;
      if (!(ls >> tok)) parse_fail(lineno, "bicut needs a number");
      sol.bicut = parse_cap(tok, lineno);
    } else if (word == "certified") {
      std::string tok;
      if (!(ls >> tok)) parse_fail(lineno, "certified needs yes or no");
      if (tok != "yes" && tok != "no") {
        parse_fail(lineno, "certified must be yes or no");
      }
      sol.certified = tok == "yes";
    } else if (word == "path") {
      int commodity = 0;
      std::string mult_tok;
      if (!(ls >> commodity >> mult_tok) || (commodity != 1 && commodity != 2)) {
        parse_fail(lineno, "path needs a commodity (1 or 2) and a multiplicity");
      }
      PathFlow p;
      p.mult = parse_cap(mult_tok, lineno);
      std::string name;
      while (ls >> name) {
        auto v = g.find_vertex(name);
        if (!v) parse_fail(lineno, "unknown vertex '" + name + "'");
        p.vertices.push_back(*v);
      }
      if (p.vertices.size() < 2) parse_fail(lineno, "path needs two vertices");
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        if (!g.edge_between(p.vertices[i], p.vertices[i + 1])) {
          parse_fail(lineno, "path uses a missing edge");
        }
      }
      (commodity == 1 ? sol.paths1 : sol.paths2).push_back(std::move(p));
    } else {
      parse_fail(lineno, "unknown directive '" + word + "'");
    }
  }
  if (!have_value) fail(ErrorCode::ParseError, "missing value line");
  return sol;
}

}  // namespace biflow
