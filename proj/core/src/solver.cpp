#include "biflow/solver.hpp"

#include <array>
#include <optional>
#include <utility>

#include "biflow/bridges.hpp"
#include "biflow/gluing.hpp"
#include "biflow/maxflow.hpp"
#include "biflow/planar.hpp"
#include "biflow/structure.hpp"

namespace biflow {

namespace {

// One commodity at full strength, the other in whatever joint capacity is
// left; both orders, better total wins.
Biflow greedy_biflow(const Instance& inst) {
  const Graph& g = inst.g;
  const Terminals& t = inst.t;
  auto pack = [&](bool commodity1_first) -> std::pair<Biflow, Cap> {
    const Vertex sa = commodity1_first ? t.s1 : t.s2;
    const Vertex ta = commodity1_first ? t.t1 : t.t2;
    const Vertex sb = commodity1_first ? t.s2 : t.s1;
    const Vertex tb = commodity1_first ? t.t2 : t.t1;
    MaxflowResult ma = max_flow(g, undirected_caps(g), sa, ta);
    normalize(ma.flow);
    ArcCaps rest(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
      const Cap left = g.edge(e).cap - ma.flow.fwd[e] - ma.flow.bwd[e];
      rest.fwd[e] = left;
      rest.bwd[e] = left;
    }
    MaxflowResult mb = max_flow(g, rest, sb, tb);
    normalize(mb.flow);
    Biflow b = commodity1_first ? Biflow{std::move(ma.flow), std::move(mb.flow)}
                                : Biflow{std::move(mb.flow), std::move(ma.flow)};
    return {std::move(b), ma.value + mb.value};
  };
  auto [b1, v1] = pack(true);
  auto [b2, v2] = pack(false);
  return v2 > v1 ? std::move(b2) : std::move(b1);
}

// Direct terminal edges in different biconnected blocks: the two commodities
// never compete, so two independent maximum flows are jointly feasible once
// each is rebuilt from simple paths (simple paths cannot leave the block of
// their endpoints' direct edge).
Biflow solve_independent(const Instance& inst) {
  const Graph& g = inst.g;
  auto one = [&](Vertex s, Vertex t) {
    MaxflowResult mf = max_flow(g, undirected_caps(g), s, t);
    normalize(mf.flow);
    const std::array<Vertex, 1> src = {s};
    const std::array<Vertex, 1> snk = {t};
    PathDecomposition d = decompose(g, mf.flow, src, snk);
    return flow_from_paths(g, d.paths);
  };
  return Biflow{one(inst.t.s1, inst.t.t1), one(inst.t.s2, inst.t.t2)};
}

struct GluingAttempt {
  SolveRoute route;
  GluingPieces pieces;
};

std::optional<GluingAttempt> find_gluing(const Instance& core) {
  if (auto two = detect_gluing(core)) {
    return GluingAttempt{SolveRoute::GluingTwoSided, std::move(*two)};
  }
  if (auto one = detect_one_sided_gluing(core)) {
    return GluingAttempt{SolveRoute::GluingGadget1, std::move(*one)};
  }
  if (auto one = detect_one_sided_gluing(swap_commodities(core))) {
    return GluingAttempt{SolveRoute::GluingGadget2, std::move(*one)};
  }
  return std::nullopt;
}

Biflow run_gluing(const Instance& core, const GluingAttempt& ga) {
  switch (ga.route) {
    case SolveRoute::GluingTwoSided:
      return solve_gluing(core, ga.pieces);
    case SolveRoute::GluingGadget1: {
      GadgetResult gr = case_ii_gadget(core, ga.pieces);
      return project_gadget_biflow(gr, core, solve_gluing(gr.inst, gr.glue));
    }
    case SolveRoute::GluingGadget2: {
      Instance sw = swap_commodities(core);
      GadgetResult gr = case_ii_gadget(sw, ga.pieces);
      return swap_commodities(
          project_gadget_biflow(gr, sw, solve_gluing(gr.inst, gr.glue)));
    }
    default:
      fail(ErrorCode::Internal, "not a gluing route");
  }
}

struct CoreAnswer {
  Biflow b;
  Cap value = -1;
  std::string route;
  std::string trail;
};

enum class Family { Bridges = 0, Gluing = 1, Planar = 2, Greedy = 3 };

Family family_of(SolveRoute r) {
  switch (r) {
    case SolveRoute::Bridges:
      return Family::Bridges;
    case SolveRoute::GluingTwoSided:
    case SolveRoute::GluingGadget1:
    case SolveRoute::GluingGadget2:
      return Family::Gluing;
    case SolveRoute::PlanarAttempt:
      return Family::Planar;
    case SolveRoute::Fallback:
      return Family::Greedy;
  }
  return Family::Greedy;
}

// Runs the structural constructions in order of detected applicability and
// keeps the best answer that re-verifies; recoverable structural failures
// move on to the next construction.
CoreAnswer solve_core(const Instance& core) {
  const Cap target = min_bicut(core).value;
  const RoutePlan plan = detect_case(core);
  CoreAnswer best;
  std::string trail;
  bool tried[4] = {false, false, false, false};

  auto note = [&trail](const std::string& entry) {
    if (!trail.empty()) trail += ' ';
    trail += entry;
  };

  auto attempt = [&](Family fam) {
    if (tried[static_cast<int>(fam)] || best.value >= target) return;
    tried[static_cast<int>(fam)] = true;
    std::string name;
    try {
      Biflow b;
      switch (fam) {
        case Family::Bridges: {
          name = "bridges";
          const BridgeReport rep = plan.route == SolveRoute::Bridges
                                       ? plan.bridges
                                       : classify_bridges(core);
          b = solve_bridges(core, rep);
          break;
        }
        case Family::Gluing: {
          std::optional<GluingAttempt> ga;
          if (plan.route == SolveRoute::GluingTwoSided) {
            ga = GluingAttempt{plan.route, plan.glue};
          } else if (plan.route == SolveRoute::GluingGadget1 ||
                     plan.route == SolveRoute::GluingGadget2) {
            ga = GluingAttempt{plan.route, plan.one_sided};
          } else {
            ga = find_gluing(core);
          }
          if (!ga) {
            note("gluing:no-structure");
            return;
          }
          name = route_name(ga->route);
          b = run_gluing(core, *ga);
          break;
        }
        case Family::Planar:
          name = "planar";
          b = solve_planar(core);
          break;
        case Family::Greedy:
          name = "greedy";
          b = greedy_biflow(core);
          break;
      }
      const Cap v = verify_biflow(core.g, core.t, b);
      note(name + ":ok(" + std::to_string(v) + ")");
      if (v > best.value) {
        best.b = std::move(b);
        best.value = v;
        best.route = name;
      }
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::NotCrossing:
        case ErrorCode::NotSeymourLike:
        case ErrorCode::ValueInfeasible:
          note(name + ":" + error_name(e.code()));
          return;
        default:
          throw;
      }
    }
  };

  attempt(family_of(plan.route));
  attempt(Family::Planar);
  attempt(Family::Gluing);
  attempt(Family::Bridges);
  attempt(Family::Greedy);
  require(best.value >= 0, ErrorCode::Internal, "no construction produced a flow");
  best.trail = std::move(trail);
  return best;
}

}  // namespace

SolveResult solve(const Instance& input) {
  Instance inst = input;
  augment(inst);
  SolveResult res;
  res.inst = inst;
  res.bicut = min_bicut(inst);

  ReduceResult red = reduce(inst);
  if (!red.singles.empty()) {
    res.flow = solve_independent(inst);
    res.route = "independent";
    res.trail = "independent";
  } else {
    CoreAnswer ans = solve_core(*red.core);
    Biflow lifted = splice_back(red, ans.b);
    const Graph& block =
        red.steps.empty() ? red.core->g : red.steps.front().before;
    res.flow = Biflow{transport_flow(block, lifted.f1, inst.g),
                      transport_flow(block, lifted.f2, inst.g)};
    res.route = std::move(ans.route);
    res.trail = std::move(ans.trail);
  }

  res.value = verify_biflow(inst.g, inst.t, res.flow);
  res.val1 = flow_value(inst.g, res.flow.f1, inst.t.s1);
  res.val2 = flow_value(inst.g, res.flow.f2, inst.t.s2);
  res.certified = res.value == res.bicut.value;
  return res;
}

SolveResult solve(Graph g, const Terminals& t) {
  Instance inst;
  inst.g = std::move(g);
  inst.t = t;
  return solve(inst);
}

}  // namespace biflow
