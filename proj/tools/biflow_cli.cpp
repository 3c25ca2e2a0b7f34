#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "biflow/bicut.hpp"
#include "biflow/generate.hpp"
#include "biflow/io.hpp"
#include "biflow/solver.hpp"
#include "biflow/structure.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUncertified = 2;

biflow::Instance read_instance(const std::string& path) {
  if (path == "-") return biflow::parse_instance(std::cin);
  return biflow::parse_instance_file(path);
}

int cmd_solve(const std::string& path, bool with_paths, bool with_trail) {
  biflow::SolveResult res = biflow::solve(read_instance(path));
  biflow::emit_result(std::cout, res, with_paths);
  if (with_trail) {
    std::cout << "# route " << res.route << "\n# trail " << res.trail << "\n";
  }
  return res.certified ? kOk : kUncertified;
}

int cmd_analyze(const std::string& path) {
  biflow::Instance inst = read_instance(path);
  std::cout << "n " << inst.g.n() << "\nm " << inst.g.m() << '\n';
  std::cout << "bicut " << biflow::min_bicut(inst).value << '\n';
  biflow::ReduceResult red = biflow::reduce(inst);
  if (!red.core.has_value()) {
    std::cout << "reduction independent\n";
    return kOk;
  }
  std::cout << "reduction core steps " << red.steps.size() << '\n';
  const biflow::Instance& core = *red.core;
  std::cout << "core-n " << core.g.n() << "\ncore-m " << core.g.m() << '\n';
  biflow::RoutePlan plan = biflow::detect_case(core);
  std::cout << "route " << biflow::route_name(plan.route) << '\n';
  if (plan.route == biflow::SolveRoute::Bridges) {
    int counts[4] = {0, 0, 0, 0};
    for (const biflow::BridgeInfo& b : plan.bridges) {
      ++counts[static_cast<int>(b.kind)];
    }
    std::cout << "bridges trivial " << counts[0] << " threefeet " << counts[1]
              << " fourfeetsplit " << counts[2] << " fourfeetlinked "
              << counts[3] << '\n';
  }
  if (plan.route == biflow::SolveRoute::GluingTwoSided) {
    const biflow::GluingPieces& gl = plan.glue;
    std::cout << "hubs " << core.g.name(gl.u1) << ' ' << core.g.name(gl.v1)
              << ' ' << core.g.name(gl.u2) << ' ' << core.g.name(gl.v2)
              << '\n';
  }
  if (plan.route == biflow::SolveRoute::GluingGadget1 ||
      plan.route == biflow::SolveRoute::GluingGadget2) {
    const biflow::GluingPieces& gl = plan.one_sided;
    std::cout << "hubs " << core.g.name(gl.u1) << ' ' << core.g.name(gl.v1)
              << '\n';
  }
  return kOk;
}

int cmd_bicut(const std::string& path) {
  biflow::Instance inst = read_instance(path);
  biflow::BicutCertificate cert = biflow::min_bicut(inst);
  std::cout << "bicut " << cert.value << '\n';
  std::cout << "grouping " << cert.grouping << '\n';
  for (biflow::EdgeId e : cert.cut_edges) {
    const biflow::Edge& ed = inst.g.edge(e);
    std::cout << "cut " << inst.g.name(ed.u) << ' ' << inst.g.name(ed.v)
              << ' ' << ed.cap << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
  biflow::Instance inst = read_instance(inst_path);
  std::ifstream sin(sol_path);
  if (!sin) {
    biflow::fail(biflow::ErrorCode::ParseError, "cannot open " + sol_path);
  }
  biflow::ParsedSolution sol = biflow::parse_solution(sin, inst.g);
  biflow::Biflow b{biflow::flow_from_paths(inst.g, sol.paths1),
                   biflow::flow_from_paths(inst.g, sol.paths2)};
  biflow::Cap value = 0;
  try {
    value = biflow::verify_biflow(inst.g, inst.t, b);
  } catch (const biflow::Error& e) {
    if (e.code() != biflow::ErrorCode::NotAFlow) throw;
    std::cout << "verdict infeasible\n# " << e.what() << '\n';
    return kUncertified;
  }
  if (value != sol.value) {
    std::cout << "verdict value-mismatch computed " << value << " claimed "
              << sol.value << '\n';
    return kUncertified;
  }
  const biflow::Cap bicut = biflow::min_bicut(inst).value;
  if (sol.certified && value != bicut) {
    std::cout << "verdict bicut-mismatch computed " << bicut << " value "
              << value << '\n';
    return kUncertified;
  }
  std::cout << "verdict ok\n";
  return kOk;
}

int cmd_gen(const std::string& cls, int n, long long cap, std::uint64_t seed,
            int decorate) {
  biflow::GenOptions opt;
  opt.n = n;
  opt.max_cap = cap;
  opt.seed = seed;
  biflow::Instance inst = biflow::generate(cls, opt);
  if (decorate > 0) {
    inst = biflow::attach_decorations(inst, seed + 1, decorate);
  }
  biflow::emit_instance(std::cout, inst);
  return kOk;
}

int cmd_minor(const std::string& path) {
  biflow::Instance inst = read_instance(path);
  std::cout << "minor " << (biflow::k4star_minor(inst) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_oracle(const std::string& path) {
  biflow::Instance inst = read_instance(path);
  std::cout << "value " << biflow::oracle_max_integral_biflow(inst) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum integral two-commodity flows with bicut certificates"};
  app.require_subcommand(1);

  std::string path = "-";
  std::string sol_path;
  bool no_paths = false;
  bool trail = false;
  std::string cls;
  int n = 12;
  long long cap = 10;
  std::uint64_t seed = 1;
  int decorate = 0;

  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("file", path, "instance file, - for stdin");
  solve->add_flag("--no-paths", no_paths, "omit the path lines");
  solve->add_flag("--trail", trail, "append route/trail comment lines");

  CLI::App* analyze = app.add_subcommand("analyze", "structural case report");
  analyze->add_option("file", path, "instance file, - for stdin");

  CLI::App* bicut = app.add_subcommand("bicut", "minimum bicut certificate");
  bicut->add_option("file", path, "instance file, - for stdin");

  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("instance", path, "instance file, - for stdin")
      ->required();
  verify->add_option("solution", sol_path, "solution file")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("class", cls,
                  "planar | gluing2 | gluing3 | bridges | forbidden | random")
      ->required();
  gen->add_option("--n", n, "vertex budget");
  gen->add_option("--cap", cap, "maximum capacity");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--decorate", decorate, "extra reducible decorations");

  CLI::App* minor = app.add_subcommand("minor", "forbidden pattern check");
  minor->add_option("file", path, "instance file, - for stdin");

  CLI::App* oracle = app.add_subcommand("oracle",
                                        "exhaustive optimum (small inputs)");
  oracle->add_option("file", path, "instance file, - for stdin");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(path, !no_paths, trail);
    if (analyze->parsed()) return cmd_analyze(path);
    if (bicut->parsed()) return cmd_bicut(path);
    if (verify->parsed()) return cmd_verify(path, sol_path);
    if (gen->parsed()) return cmd_gen(cls, n, cap, seed, decorate);
    if (minor->parsed()) return cmd_minor(path);
    if (oracle->parsed()) return cmd_oracle(path);
  } catch (const biflow::Error& e) {
    std::cerr << "error (" << biflow::error_name(e.code()) << "): " << e.what()
              << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
