#pragma once

#include <vector>

#include <Eigen/Dense>

#include "selfconf/estimation.hpp"
#include "selfconf/network.hpp"

namespace selfconf {

/// Interior cost terms in the reciprocal variables y_i = 1 / (1 - z_i).
/// With nobody stubborn every agent has the same cost B / A^2.
struct GradientTerms {
  double A;           // sum_j pi_j y_j
  double B;           // sum_j pi_j^2 sigma_j^2 y_j^2
  Eigen::VectorXd y;
};

GradientTerms gradient_terms(const CentralityVector& pi,
                             const VarianceVector& sigma2,
                             const SelfConfidenceProfile& z);

/// d upsilon_i / d z_i for every agent i. Throws StubbornPresent.
Eigen::VectorXd cost_gradient(const CentralityVector& pi,
                              const VarianceVector& sigma2,
                              const SelfConfidenceProfile& z);

/// d upsilon_i / d y_i = (1 - z_i)^2 d upsilon_i / d z_i.
Eigen::VectorXd reciprocal_cost_gradient(const CentralityVector& pi,
                                         const VarianceVector& sigma2,
                                         const SelfConfidenceProfile& z);

/// Which partial derivative drives the adaptation z_i' = -z_i * grad_i.
enum class VectorField {
  /// grad_i = d upsilon_i / d y_i. Reproduces the published trajectories.
  Reciprocal,
  /// grad_i = d upsilon_i / d z_i.
  SelfConfidence,
};

struct SolverConfig {
  double step = 0.01;
  double t_max = 1e7;
  double stop_tol = 1e-10;   // on max_i |z_i'|
  double floor = 1e-12;      // z_i is kept <= 1 - floor
  Index sample_every = 1000; // steps between recorded samples
  VectorField field = VectorField::Reciprocal;

  void validate() const;
};

struct AlphaFit {
  double alpha_hat;  // mean_i (1 - z_i) / (pi_i sigma_i^2)
  double spread;     // (max - min) / mean of the same ratios
};

AlphaFit fit_alpha(const CentralityVector& pi, const VarianceVector& sigma2,
                   const SelfConfidenceProfile& z);

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> profiles;
  std::vector<double> alpha_hats;
  std::vector<double> grad_norms;

  Eigen::VectorXd steady;
  double fitted_alpha = 0.0;
  double alpha_spread = 0.0;
  double t_final = 0.0;
  std::size_t steps = 0;
  bool converged = false;
  /// Sign changes of z_i' per agent, counted while |z_i'| > stop_tol.
  std::vector<Index> reversals;
};

/// Adaptation field z' = -z .* grad for the chosen field.
Eigen::VectorXd adaptation_velocity(const CentralityVector& pi,
                                    const VarianceVector& sigma2,
                                    const SelfConfidenceProfile& z,
                                    VectorField field);

/// Fixed-step RK4 integration of the myopic adaptation dynamics from an
/// interior start. Stops once max_i |z_i'| <= stop_tol or at t_max.
TrajectoryRecord simulate_adaptation(const InfluenceNetwork& net,
                                     const CentralityVector& pi,
                                     const VarianceVector& sigma2,
                                     const SelfConfidenceProfile& z0,
                                     const SolverConfig& cfg = {});

}  // namespace selfconf
