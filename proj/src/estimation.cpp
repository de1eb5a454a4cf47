#include "selfconf/estimation.hpp"

#include "selfconf/error.hpp"

namespace selfconf {

VarianceVector::VarianceVector(Eigen::VectorXd sigma2)
    : sigma2_(std::move(sigma2)) {
  if (sigma2_.size() == 0 || !sigma2_.allFinite() ||
      (sigma2_.array() <= 0.0).any())
    throw Error(ErrorCode::NonpositiveVariance,
                "variances must be finite and strictly positive");
}

CostVector estimation_costs(const LimitMatrix& h, const VarianceVector& sigma2) {
  if (h.H.cols() != static_cast<Eigen::Index>(sigma2.size()))
    throw Error(ErrorCode::DimensionMismatch,
                "limit matrix and variances differ in size");
  return {h.H.array().square().matrix() * sigma2.values()};
}

OptimalAggregate optimal_weights(const VarianceVector& sigma2) {
  const Eigen::VectorXd wisdom = sigma2.values().cwiseInverse();
  const double total = wisdom.sum();
  return {wisdom / total, 1.0 / total};
}

}  // namespace selfconf
