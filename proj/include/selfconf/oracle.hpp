#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "selfconf/estimation.hpp"

namespace selfconf {

// Brute-force references that share no code path with the closed forms in
// limits/game and are used to cross-check them.

/// Limit of Q^t by repeated squaring until successive iterates agree to
/// `tol` entrywise. Throws NoConvergence after `max_squarings`.
LimitMatrix power_limit(const InfluenceNetwork& net,
                        const SelfConfidenceProfile& z, double tol = 1e-11,
                        int max_squarings = 80);

/// Argmin of agent k's cost over {0, step, 2 step, ...} u {1}, with costs
/// from power_limit. Ties resolve to the smallest grid value.
double grid_best_response(const InfluenceNetwork& net,
                          const VarianceVector& sigma2,
                          const SelfConfidenceProfile& z, Index k,
                          double grid_step);

struct OpinionRollout {
  double theta;
  std::size_t samples;
  std::size_t horizon;
  std::uint64_t seed;
  Eigen::VectorXd empirical_variances;  // of x_i(T) - theta
  Eigen::VectorXd mean_errors;          // mean of x_i(T) - theta
};

/// Monte-Carlo run of x(t+1) = Q x(t) from x(0) = theta + xi with Gaussian
/// xi_i ~ N(0, sigma_i^2). Samples are split into fixed blocks with their own
/// seeded streams, so the result does not depend on `workers`.
OpinionRollout opinion_rollout(const InfluenceNetwork& net,
                               const SelfConfidenceProfile& z,
                               const VarianceVector& sigma2, double theta,
                               std::size_t samples, std::size_t horizon = 10000,
                               std::uint64_t seed = 1, unsigned workers = 1);

}  // namespace selfconf
