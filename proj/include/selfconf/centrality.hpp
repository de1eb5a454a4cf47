#pragma once

#include <Eigen/Dense>

#include "selfconf/network.hpp"

namespace selfconf {

/// Residual bound ||P'pi - pi||_inf accepted from the direct solve.
inline constexpr double kFixedPointTolerance = 1e-10;

/// Invariant distribution pi = P'pi of an irreducible network. Positive,
/// sums to one.
class CentralityVector {
 public:
  explicit CentralityVector(Eigen::VectorXd pi);

  Index size() const noexcept { return static_cast<Index>(pi_.size()); }
  const Eigen::VectorXd& values() const noexcept { return pi_; }
  double operator[](Index i) const { return pi_(static_cast<Eigen::Index>(i)); }

 private:
  Eigen::VectorXd pi_;
};

/// Solves (I - P')pi = 0 with one equation replaced by 1'pi = 1.
/// Throws SingularSystem if the solve fails or violates the invariants.
CentralityVector centrality(const InfluenceNetwork& net);

}  // namespace selfconf
