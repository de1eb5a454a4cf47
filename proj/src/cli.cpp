#include "selfconf/cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "selfconf/error.hpp"
#include "selfconf/report.hpp"
#include "selfconf/scenario.hpp"

namespace selfconf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string z;
  Index agent = 0;
  double tol = kRayTolerance;
  // simulate
  std::string z0;
  SolverConfig solver;
  std::string field = "y";
  std::uint64_t seed = 1;
  std::string out_path;
  // oracle
  double limit_tol = 1e-11;
  double grid_step = 0.001;
  double theta = 0.0;
  std::size_t samples = 100000;
  std::size_t horizon = 10000;
  unsigned workers = 1;
};

SelfConfidenceProfile profile_for(const ScenarioFile& sc,
                                  const std::string& spec) {
  if (!spec.empty()) return parse_profile_spec(spec, sc.network.size());
  if (sc.z) return *sc.z;
  throw UsageError("no profile given: pass --z or put \"z\" in the scenario");
}

Index agent_index(const Options& o, const ScenarioFile& sc) {
  if (o.agent < 1 || o.agent > sc.network.size())
    throw Error(ErrorCode::AgentOutOfRange,
                "--agent must be in 1.." + std::to_string(sc.network.size()));
  return o.agent - 1;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

void add_file(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.file, "scenario JSON file")->required();
}

void add_profile(CLI::App* cmd, Options& o) {
  cmd->add_option("--z", o.z,
                  "profile: const:<v> | csv:<v1,..> | random:<seed> | JSON array");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-confidence adaptation on averaging networks"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "validate a scenario network");
  add_file(validate, o);
  auto* central = app.add_subcommand("centrality", "print the centrality vector");
  add_file(central, o);
  auto* limit = app.add_subcommand("limit", "limit matrix H(z)");
  add_file(limit, o);
  add_profile(limit, o);
  auto* costs = app.add_subcommand("costs", "asymptotic estimation costs");
  add_file(costs, o);
  add_profile(costs, o);
  auto* br = app.add_subcommand("best-response", "best-response set of one agent");
  add_file(br, o);
  add_profile(br, o);
  br->add_option("--agent", o.agent, "agent id (1-based)")->required();
  auto* pareto = app.add_subcommand("pareto", "Pareto ray of strict equilibria");
  add_file(pareto, o);
  auto* nash = app.add_subcommand("nash-check", "classify a profile");
  add_file(nash, o);
  add_profile(nash, o);
  nash->add_option("--tol", o.tol, "sup-norm tolerance for ray membership");

  auto* sim = app.add_subcommand("simulate", "integrate the adaptation dynamics");
  add_file(sim, o);
  sim->add_option("--z0", o.z0, "initial profile (const:|csv:|random:<seed>|random|JSON)")
      ->required();
  sim->add_option("--dt", o.solver.step, "RK4 step");
  sim->add_option("--t-max", o.solver.t_max, "time horizon");
  sim->add_option("--stop-tol", o.solver.stop_tol, "stop when max |z'| falls below");
  sim->add_option("--floor", o.solver.floor, "keep z_i <= 1 - floor");
  sim->add_option("--seed", o.seed, "seed used by --z0 random");
  sim->add_option("--sample-every", o.solver.sample_every, "steps between samples");
  sim->add_option("--field", o.field, "gradient coordinates: y (default) or z")
      ->check(CLI::IsMember({"y", "z"}));
  sim->add_option("--out", o.out_path, "trajectory CSV path");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
  oracle->require_subcommand(1);
  auto* power = oracle->add_subcommand("power-limit", "limit matrix by repeated squaring");
  add_file(power, o);
  add_profile(power, o);
  power->add_option("--tol", o.limit_tol, "Cauchy tolerance");
  auto* grid = oracle->add_subcommand("grid-br", "grid-search best response");
  add_file(grid, o);
  add_profile(grid, o);
  grid->add_option("--agent", o.agent, "agent id (1-based)")->required();
  grid->add_option("--step", o.grid_step, "grid step");
  auto* rollout = oracle->add_subcommand("rollout", "Monte-Carlo opinion rollout");
  add_file(rollout, o);
  add_profile(rollout, o);
  rollout->add_option("--theta", o.theta, "state of the world");
  rollout->add_option("--samples", o.samples, "number of samples");
  rollout->add_option("--horizon", o.horizon, "iterations per sample");
  rollout->add_option("--seed", o.seed, "RNG seed");
  rollout->add_option("--workers", o.workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ScenarioFile sc = load_scenario(o.file);
    const auto& net = sc.network;
    if (validate->parsed()) {
      emit(out, {{"n", net.size()}, {"irreducible", true}, {"aperiodic", true}});
      return kExitOk;
    }
    const CentralityVector pi = centrality(net);
    if (central->parsed()) {
      emit(out, to_json(pi.values()));
    } else if (limit->parsed()) {
      emit(out, to_json(limit_matrix(net, pi, profile_for(sc, o.z))));
    } else if (costs->parsed()) {
      const auto h = limit_matrix(net, pi, profile_for(sc, o.z));
      const auto opt = optimal_weights(sc.sigma2);
      emit(out, {{"upsilon", to_json(estimation_costs(h, sc.sigma2).upsilon)},
                 {"cost_floor", opt.cost_floor},
                 {"mu_star", to_json(opt.mu_star)}});
    } else if (br->parsed()) {
      const Index k = agent_index(o, sc);
      emit(out, to_json(best_response(net, pi, sc.sigma2, profile_for(sc, o.z), k), k));
    } else if (pareto->parsed()) {
      emit(out, to_json(pareto_set(pi, sc.sigma2)));
    } else if (nash->parsed()) {
      emit(out, to_json(classify_equilibrium(net, pi, sc.sigma2,
                                             profile_for(sc, o.z), o.tol)));
    } else if (sim->parsed()) {
      o.solver.field = o.field == "z" ? VectorField::SelfConfidence : VectorField::Reciprocal;
      const auto z0 = o.z0 == "random" ? random_profile(net.size(), o.seed)
                                       : parse_profile_spec(o.z0, net.size());
      const auto rec = simulate_adaptation(net, pi, sc.sigma2, z0, o.solver);
      if (!o.out_path.empty()) {
        std::ofstream csv(o.out_path);
        if (!csv) throw Error(ErrorCode::ParseError, o.out_path + ": cannot write");
        write_trajectory_csv(csv, rec);
      }
      emit(out, summary_json(rec));
    } else if (power->parsed()) {
      emit(out, to_json(power_limit(net, profile_for(sc, o.z), o.limit_tol)));
    } else if (grid->parsed()) {
      const Index k = agent_index(o, sc);
      const double v =
          grid_best_response(net, sc.sigma2, profile_for(sc, o.z), k, o.grid_step);
      emit(out, {{"agent", k + 1}, {"value", v}, {"grid_step", o.grid_step}});
    } else if (rollout->parsed()) {
      emit(out, to_json(opinion_rollout(net, profile_for(sc, o.z), sc.sigma2, o.theta,
                                        o.samples, o.horizon, o.seed, o.workers)));
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    emit(err, {{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    return kExitValidation;
  }
}

}  // namespace selfconf::cli
