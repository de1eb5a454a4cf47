#include "selfconf/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "selfconf/error.hpp"

namespace selfconf {

namespace {

void check_sizes(const InfluenceNetwork& net, const CentralityVector& pi,
                 const VarianceVector& sigma2, const SelfConfidenceProfile& z) {
  const Index n = net.size();
  if (pi.size() != n || sigma2.size() != n || z.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "game inputs differ in size");
}

double cost_of(const InfluenceNetwork& net, const CentralityVector& pi,
               const VarianceVector& sigma2, const SelfConfidenceProfile& z,
               Index agent) {
  const auto costs = estimation_costs(limit_matrix(net, pi, z), sigma2);
  return costs.upsilon(static_cast<Eigen::Index>(agent));
}

// [1 - a_{-k} pi_k sigma_k^2 / b_{-k}]_+ ; requires z_j < 1 for all j != k.
double interior_best_response(const CentralityVector& pi,
                              const VarianceVector& sigma2,
                              const SelfConfidenceProfile& z, Index k) {
  double a = 0.0, b = 0.0;
  for (Index j = 0; j < z.size(); ++j) {
    if (j == k) continue;
    const double y = 1.0 / (1.0 - z[j]);
    a += pi[j] * y;
    b += pi[j] * pi[j] * sigma2[j] * y * y;
  }
  return std::max(0.0, 1.0 - a * pi[k] * sigma2[k] / b);
}

}  // namespace

BestResponse best_response(const InfluenceNetwork& net,
                           const CentralityVector& pi,
                           const VarianceVector& sigma2,
                           const SelfConfidenceProfile& z, Index k) {
  if (k >= net.size())
    throw Error(ErrorCode::AgentOutOfRange,
                "agent " + std::to_string(k) + " out of range");
  check_sizes(net, pi, sigma2, z);

  if (z.stubborn_set_without(k).empty())
    return {ResponseKind::Singleton, interior_best_response(pi, sigma2, z, k),
            std::nullopt};

  const double c = cost_of(net, pi, sigma2, z.with(k, 0.0), k);
  const double own = sigma2[k];
  ResponseKind kind = ResponseKind::FullInterval;
  if (c < own - kCostTieTolerance)
    kind = ResponseKind::HalfOpenInterval;
  else if (c > own + kCostTieTolerance)
    kind = ResponseKind::StubbornOnly;
  return {kind, std::nullopt, c};
}

SelfConfidenceProfile ParetoRay::member(double alpha) const {
  Eigen::VectorXd z = (1.0 - alpha * direction.array()).matrix();
  // alpha_max * max(d) can round a hair past 1.
  z = z.cwiseMax(0.0);
  return SelfConfidenceProfile(std::move(z));
}

ParetoRay pareto_set(const CentralityVector& pi, const VarianceVector& sigma2) {
  if (pi.size() != sigma2.size())
    throw Error(ErrorCode::DimensionMismatch, "pi and sigma2 differ in size");
  Eigen::VectorXd d = pi.values().cwiseProduct(sigma2.values());
  const double alpha_max = 1.0 / d.maxCoeff();
  return {std::move(d), alpha_max};
}

RayFit ray_membership(const ParetoRay& ray, const SelfConfidenceProfile& z,
                      double tol) {
  if (z.size() != static_cast<Index>(ray.direction.size()))
    throw Error(ErrorCode::DimensionMismatch, "profile and ray differ in size");
  const Eigen::ArrayXd slack = 1.0 - z.values().array();
  const double alpha = (slack / ray.direction.array()).mean();
  if (z.has_stubborn() || !(alpha > 0.0)) return {false, alpha};
  const double d_max = ray.direction.maxCoeff();
  const double residual =
      (slack - alpha * ray.direction.array()).abs().maxCoeff();
  const bool in_range = alpha <= ray.alpha_max + tol / d_max;
  return {in_range && residual <= tol, alpha};
}

EquilibriumReport classify_equilibrium(const InfluenceNetwork& net,
                                       const CentralityVector& pi,
                                       const VarianceVector& sigma2,
                                       const SelfConfidenceProfile& z,
                                       double tol) {
  check_sizes(net, pi, sigma2, z);
  const Index n = net.size();
  const auto stubborn = z.stubborn_set();

  EquilibriumReport report{Classification::NotNash, std::nullopt, std::nullopt,
                           std::nullopt, std::nullopt, std::nullopt, {}};
  report.checks.stubborn_count = stubborn.size();
  if (!stubborn.empty()) {
    const double first = sigma2[stubborn.front()];
    report.checks.variances_equal_on_stubborn =
        std::all_of(stubborn.begin(), stubborn.end(), [&](Index j) {
          return std::abs(sigma2[j] - first) <= kCostTieTolerance;
        });
    report.checks.restricted_ring =
        is_directed_ring(restricted_graph(net, stubborn));
  }

  auto set_witness = [&](Index agent, double value, double deviated,
                         double current) {
    report.classification = Classification::NotNash;
    report.deviating_agent = agent;
    report.deviation_value = value;
    report.deviation_cost = deviated;
    report.current_cost = current;
  };

  if (stubborn.empty()) {
    const RayFit fit = ray_membership(pareto_set(pi, sigma2), z, tol);
    if (fit.member) {
      report.classification = Classification::StrictNash;
      report.fitted_alpha = fit.alpha;
      return report;
    }
    Index witness = 0;
    double best_value = 0.0, largest = -1.0;
    for (Index i = 0; i < n; ++i) {
      const double br = interior_best_response(pi, sigma2, z, i);
      const double displacement = std::abs(br - z[i]);
      if (displacement > largest) {
        largest = displacement;
        witness = i;
        best_value = br;
      }
    }
    set_witness(witness, best_value,
                cost_of(net, pi, sigma2, z.with(witness, best_value), witness),
                cost_of(net, pi, sigma2, z, witness));
    return report;
  }

  if (stubborn.size() == 1) {
    const Index k = stubborn.front();
    const double br = interior_best_response(pi, sigma2, z, k);
    set_witness(k, br, cost_of(net, pi, sigma2, z.with(k, br), k), sigma2[k]);
    return report;
  }

  const Eigen::VectorXd upsilon =
      estimation_costs(limit_matrix(net, pi, z), sigma2).upsilon;
  std::optional<Index> witness;
  double witness_value = 0.0, witness_cost = 0.0, largest_gain = 0.0;
  auto consider = [&](Index agent, double value, double deviated) {
    const double gain = upsilon(static_cast<Eigen::Index>(agent)) - deviated;
    if (gain > kCostTieTolerance && gain > largest_gain) {
      largest_gain = gain;
      witness = agent;
      witness_value = value;
      witness_cost = deviated;
    }
  };
  for (Index i = 0; i < n; ++i) {
    if (z.is_stubborn(i)) {
      // Leaving stubbornness: any value in [0,1) gives the same cost.
      consider(i, 0.0, cost_of(net, pi, sigma2, z.with(i, 0.0), i));
    } else {
      consider(i, 1.0, sigma2[i]);
    }
  }
  if (witness) {
    set_witness(*witness, witness_value, witness_cost,
                upsilon(static_cast<Eigen::Index>(*witness)));
  } else {
    report.classification = Classification::NonStrictNash;
  }
  return report;
}

std::string_view to_string(ResponseKind kind) {
  switch (kind) {
    case ResponseKind::Singleton: return "Singleton";
    case ResponseKind::HalfOpenInterval: return "HalfOpenInterval";
    case ResponseKind::FullInterval: return "FullInterval";
    case ResponseKind::StubbornOnly: return "StubbornOnly";
  }
  return "Unknown";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::StrictNash: return "StrictNash";
    case Classification::NonStrictNash: return "NonStrictNash";
    case Classification::NotNash: return "NotNash";
  }
  return "Unknown";
}

}  // namespace selfconf
