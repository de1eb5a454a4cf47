#pragma once

#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "selfconf/estimation.hpp"

namespace selfconf {

/// Absolute tolerance for comparing estimation costs.
inline constexpr double kCostTieTolerance = 1e-9;
/// Default sup-norm tolerance for membership of the Pareto ray.
inline constexpr double kRayTolerance = 1e-9;

enum class ResponseKind { Singleton, HalfOpenInterval, FullInterval, StubbornOnly };

/// Best-response set of one agent. Interval kinds only arise when some other
/// agent is stubborn; the cost is then constant on [0,1).
struct BestResponse {
  ResponseKind kind;
  std::optional<double> value;          // Singleton only
  std::optional<double> constant_cost;  // when others are stubborn
};

BestResponse best_response(const InfluenceNetwork& net,
                           const CentralityVector& pi,
                           const VarianceVector& sigma2,
                           const SelfConfidenceProfile& z, Index k);

/// Z* = { 1 - alpha d : 0 < alpha <= alpha_max } with d = [pi] sigma^2.
struct ParetoRay {
  Eigen::VectorXd direction;
  double alpha_max;

  SelfConfidenceProfile member(double alpha) const;
};

ParetoRay pareto_set(const CentralityVector& pi, const VarianceVector& sigma2);

struct RayFit {
  bool member;
  double alpha;  // mean_i (1 - z_i) / d_i
};

RayFit ray_membership(const ParetoRay& ray, const SelfConfidenceProfile& z,
                      double tol = kRayTolerance);

enum class Classification { StrictNash, NonStrictNash, NotNash };

/// Necessary conditions for a non-strict equilibrium, recorded as
/// cross-checks next to the cost-based verdict.
struct StructureChecks {
  Index stubborn_count = 0;
  bool variances_equal_on_stubborn = false;
  bool restricted_ring = false;
};

struct EquilibriumReport {
  Classification classification;
  std::optional<double> fitted_alpha;
  std::optional<Index> deviating_agent;
  std::optional<double> deviation_value;
  std::optional<double> deviation_cost;  // witness cost after deviating
  std::optional<double> current_cost;    // witness cost at z
  StructureChecks checks;
};

EquilibriumReport classify_equilibrium(const InfluenceNetwork& net,
                                       const CentralityVector& pi,
                                       const VarianceVector& sigma2,
                                       const SelfConfidenceProfile& z,
                                       double tol = kRayTolerance);

std::string_view to_string(ResponseKind kind);
std::string_view to_string(Classification c);

}  // namespace selfconf
