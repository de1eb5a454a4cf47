#pragma once

#include <Eigen/Dense>

#include "selfconf/limits.hpp"

namespace selfconf {

/// Initial-opinion noise variances; strictly positive.
class VarianceVector {
 public:
  explicit VarianceVector(Eigen::VectorXd sigma2);

  Index size() const noexcept { return static_cast<Index>(sigma2_.size()); }
  const Eigen::VectorXd& values() const noexcept { return sigma2_; }
  double operator[](Index i) const {
    return sigma2_(static_cast<Eigen::Index>(i));
  }

 private:
  Eigen::VectorXd sigma2_;
};

/// upsilon_i: variance of agent i's asymptotic estimate.
struct CostVector {
  Eigen::VectorXd upsilon;
};

struct OptimalAggregate {
  Eigen::VectorXd mu_star;  // proportional to sigma^-2
  double cost_floor;        // 1 / sum_j sigma_j^-2
};

/// upsilon_i = sum_j H_ij^2 sigma_j^2.
CostVector estimation_costs(const LimitMatrix& h, const VarianceVector& sigma2);

OptimalAggregate optimal_weights(const VarianceVector& sigma2);

}  // namespace selfconf
