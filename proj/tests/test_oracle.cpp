#include <cmath>
#include <random>

#include "doctest.h"

#include "fixtures.hpp"
#include "selfconf/error.hpp"
#include "selfconf/oracle.hpp"

using namespace selfconf;
using namespace selfconf::testing;

TEST_CASE("power limit reproduces the closed forms") {
  const auto s = paper4();
  const auto h0 = power_limit(s.net, SelfConfidenceProfile::constant(4, 0.0));
  CHECK(h0.branch == LimitBranch::Consensus);
  for (Index i = 0; i < 4; ++i)
    CHECK((h0.H.row(i).transpose() - s.pi.values()).lpNorm<Eigen::Infinity>() <= 1e-9);

  const auto h1 = power_limit(s.net, SelfConfidenceProfile::constant(4, 0.4).with(1, 1.0));
  CHECK(h1.branch == LimitBranch::Absorption);
  for (Index i = 0; i < 4; ++i) CHECK(h1.H(i, 1) == doctest::Approx(1.0).epsilon(1e-9));

  std::mt19937_64 rng(2);
  for (auto setup : {paper4(), tri3()})
    for (int k = 0; k < 25; ++k) {
      const auto z = random_mixed(setup.n(), rng);
      CHECK((power_limit(setup.net, z).H - limit_matrix(setup.net, setup.pi, z).H)
                .lpNorm<Eigen::Infinity>() <= 1e-9);
    }
}

TEST_CASE("power limit reports non-convergence") {
  const auto s = paper4();
  try {
    power_limit(s.net, SelfConfidenceProfile::constant(4, 0.0), 0.0, 3);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoConvergence);
  }
}

TEST_CASE("grid best response") {
  const auto t = tri3();
  CHECK(grid_best_response(t.net, t.sigma2, SelfConfidenceProfile::constant(3, 0.0), 0, 0.01) == 0.0);

  const auto s = paper4();
  const double v = grid_best_response(s.net, s.sigma2, SelfConfidenceProfile::constant(4, 0.0), 3, 0.001);
  CHECK(std::abs(v - 0.315) <= 0.001);
  const SelfConfidenceProfile z((Eigen::VectorXd(4) << 0.0, 0.0, 1.0, 0.0).finished());
  CHECK(grid_best_response(s.net, s.sigma2, z, 0, 0.01) == 1.0);
  CHECK_THROWS_AS(grid_best_response(s.net, s.sigma2, z, 0, 0.0), Error);
}

TEST_CASE("opinion rollout matches the asymptotic costs") {
  const auto s = paper4();
  const auto z = s.ray.member(0.5 * s.ray.alpha_max);
  const std::size_t samples = 20000;
  const auto r0 = opinion_rollout(s.net, z, s.sigma2, 0.0, samples, 2000, 5);
  const auto r5 = opinion_rollout(s.net, z, s.sigma2, 5.0, samples, 2000, 5);
  const double floor = optimal_weights(s.sigma2).cost_floor;
  const double se = floor * std::sqrt(2.0 / (samples - 1));
  for (Index i = 0; i < 4; ++i) {
    CHECK(std::abs(r0.empirical_variances(i) - floor) <= 4 * se);
    // Same seed, shifted state of the world: identical errors up to rounding.
    CHECK(r5.empirical_variances(i) == doctest::Approx(r0.empirical_variances(i)).epsilon(1e-9));
  }

  const auto single = opinion_rollout(s.net, SelfConfidenceProfile::constant(4, 0.2).with(0, 1.0),
                                      s.sigma2, 1.0, 10000, 2000, 8);
  for (Index i = 0; i < 4; ++i)
    CHECK(single.empirical_variances(i) ==
          doctest::Approx(s.sigma2[0]).epsilon(5 * std::sqrt(2.0 / 9999)));

  const VarianceVector tiny(Eigen::VectorXd::Constant(4, 1e-20));
  const auto quiet = opinion_rollout(s.net, z, tiny, 3.0, 5000, 1000, 1);
  CHECK(quiet.empirical_variances.maxCoeff() <= 1e-18);
}

TEST_CASE("rollout does not depend on the worker count") {
  const auto s = paper4();
  const auto z = SelfConfidenceProfile::constant(4, 0.3);
  const auto a = opinion_rollout(s.net, z, s.sigma2, 0.0, 9000, 300, 42, 1);
  const auto b = opinion_rollout(s.net, z, s.sigma2, 0.0, 9000, 300, 42, 3);
  CHECK(a.empirical_variances == b.empirical_variances);
  CHECK(a.mean_errors == b.mean_errors);
}
