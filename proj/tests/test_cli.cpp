#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "fixtures.hpp"
#include "selfconf/cli.hpp"
#include "selfconf/scenario.hpp"

using namespace selfconf;
using namespace selfconf::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "selfconf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("validate and centrality") {
  const auto r = invoke({"validate", fixture_path("paper4.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(r.out) ==
        nlohmann::json{{"n", 4}, {"irreducible", true}, {"aperiodic", true}});

  const auto c = invoke({"centrality", fixture_path("paper4.json")});
  REQUIRE(c.code == 0);
  const auto pi = nlohmann::json::parse(c.out).get<std::vector<double>>();
  const double expected[] = {0.2507, 0.1783, 0.3064, 0.2646};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(pi[i] - expected[i]) <= 5e-5);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({"centrality"}).code == cli::kExitUsage);
  CHECK(invoke({"limit", fixture_path("tri3.json")}).code == cli::kExitUsage);

  const auto missing = invoke({"validate", "/nonexistent/scenario.json"});
  CHECK(missing.code == cli::kExitValidation);
  CHECK(missing.err.find("/nonexistent/scenario.json") != std::string::npos);

  const std::string bad = temp_path("selfconf_periodic.json");
  std::ofstream(bad) << R"({"P": [[0,1],[1,0]], "sigma2": [1,1]})";
  const auto periodic = invoke({"validate", bad});
  CHECK(periodic.code == cli::kExitValidation);
  CHECK(nlohmann::json::parse(periodic.err)["error"] == "Periodic");
  std::remove(bad.c_str());

  CHECK(invoke({"best-response", fixture_path("paper4.json"), "--agent", "9"}).code ==
        cli::kExitValidation);
}

TEST_CASE("reports follow their schemas") {
  const std::string f = fixture_path("paper4.json");

  auto limit = nlohmann::json::parse(invoke({"limit", f, "--z", "csv:1,0,0,1"}).out);
  CHECK(limit["branch"] == "Absorption");
  CHECK(limit["H"].size() == 4);

  auto costs = nlohmann::json::parse(invoke({"costs", f, "--z", "random:3"}).out);
  CHECK(costs["upsilon"].size() == 4);
  CHECK(costs["cost_floor"].get<double>() == doctest::Approx(0.0272148).epsilon(1e-5));

  auto br = nlohmann::json::parse(invoke({"best-response", f, "--agent", "4"}).out);
  CHECK(br["kind"] == "Singleton");
  CHECK(br["value"].get<double>() == doctest::Approx(0.3148387).epsilon(1e-6));
  CHECK(br["constant_cost"].is_null());

  auto pareto = nlohmann::json::parse(invoke({"pareto", f}).out);
  CHECK(pareto["direction"].size() == 4);
  CHECK(pareto["alpha_max"].is_number());

  auto nash = nlohmann::json::parse(invoke({"nash-check", f}).out);
  CHECK(nash["classification"] == "NotNash");
  CHECK(nash["deviating_agent"] == 4);
  CHECK(nash["structure_checks"]["stubborn_count"] == 0);

  auto power = nlohmann::json::parse(invoke({"oracle", "power-limit", f, "--z", "const:0.5"}).out);
  CHECK(power["branch"] == "Consensus");

  auto grid = nlohmann::json::parse(
      invoke({"oracle", "grid-br", f, "--agent", "4", "--step", "0.01"}).out);
  CHECK(std::abs(grid["value"].get<double>() - 0.31) <= 0.01);

  auto roll = nlohmann::json::parse(invoke({"oracle", "rollout", f, "--z", "const:0.5", "--samples",
                                            "500", "--horizon", "200"}).out);
  CHECK(roll["empirical_variances"].size() == 4);
}

TEST_CASE("JSON numbers round-trip bit for bit") {
  const auto r = invoke({"limit", fixture_path("paper4.json"), "--z", "random:11"});
  const auto scenario = load_scenario(fixture_path("paper4.json"));
  const auto pi = centrality(scenario.network);
  const auto h = limit_matrix(scenario.network, pi,
                              parse_profile_spec("random:11", 4));
  const auto parsed = nlohmann::json::parse(r.out)["H"];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(parsed[i][j].get<double>() == h.H(i, j));
}

TEST_CASE("simulate writes a fixed-shape CSV deterministically") {
  const std::string a = temp_path("selfconf_traj_a.csv");
  const std::string b = temp_path("selfconf_traj_b.csv");
  const std::vector<std::string> base{"simulate", fixture_path("paper4.json"), "--z0",
                                      "random", "--seed", "5", "--t-max", "20",
                                      "--sample-every", "100"};
  auto args_a = base;
  args_a.insert(args_a.end(), {"--out", a});
  auto args_b = base;
  args_b.insert(args_b.end(), {"--out", b});
  const auto ra = invoke(args_a);
  const auto rb = invoke(args_b);
  REQUIRE(ra.code == 0);
  CHECK(ra.out == rb.out);

  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string csv = slurp(a);
  CHECK(csv == slurp(b));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,z_1,z_2,z_3,z_4,alpha_hat,grad_norm");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
    ++rows;
  }
  const auto summary = nlohmann::json::parse(ra.out);
  CHECK(rows == summary["samples"].get<int>());
  CHECK(summary["steady"].size() == 4);
  std::remove(a.c_str());
  std::remove(b.c_str());

  CHECK(invoke({"simulate", fixture_path("paper4.json"), "--z0", "csv:1,0.5,0.5,0.5"}).code ==
        cli::kExitValidation);
  CHECK(invoke({"simulate", fixture_path("paper4.json"), "--z0", "const:0.5", "--field", "w"})
            .code == cli::kExitUsage);
}

TEST_CASE("profile specs") {
  CHECK(parse_profile_spec("const:0.25", 3).values() == Eigen::VectorXd::Constant(3, 0.25));
  CHECK(parse_profile_spec("csv:0.1,0.2", 2)[1] == 0.2);
  CHECK(parse_profile_spec("0.1,0.2", 2)[0] == 0.1);
  CHECK(parse_profile_spec("[0.5, 1]", 2).is_stubborn(1));
  CHECK(parse_profile_spec("random:4", 5).values() == parse_profile_spec("random:4", 5).values());
  CHECK_THROWS(parse_profile_spec("csv:0.1,x", 2));
  CHECK_THROWS(parse_profile_spec("csv:0.1", 2));
  CHECK_THROWS(parse_profile_spec("random:-1", 2));
  CHECK_THROWS(parse_profile_spec("const:2", 2));
}
