#include "selfconf/limits.hpp"

#include <string>

#include "selfconf/error.hpp"

namespace selfconf {

SelfConfidenceProfile::SelfConfidenceProfile(Eigen::VectorXd z)
    : z_(std::move(z)) {
  for (Eigen::Index i = 0; i < z_.size(); ++i) {
    const double v = z_(i);
    if (!(v >= 0.0 && v <= 1.0))
      throw Error(ErrorCode::InvalidProfile,
                  "self-confidence z_" + std::to_string(i + 1) + " = " +
                      std::to_string(v) + " outside [0,1]");
  }
}

SelfConfidenceProfile SelfConfidenceProfile::constant(Index n, double value) {
  return SelfConfidenceProfile(
      Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), value));
}

std::vector<Index> SelfConfidenceProfile::stubborn_set() const {
  std::vector<Index> s;
  for (Index i = 0; i < size(); ++i)
    if (is_stubborn(i)) s.push_back(i);
  return s;
}

bool SelfConfidenceProfile::has_stubborn() const {
  return (z_.array() == 1.0).any();
}

std::vector<Index> SelfConfidenceProfile::stubborn_set_without(Index k) const {
  std::vector<Index> s;
  for (Index i = 0; i < size(); ++i)
    if (i != k && is_stubborn(i)) s.push_back(i);
  return s;
}

SelfConfidenceProfile SelfConfidenceProfile::with(Index k, double value) const {
  Eigen::VectorXd z = z_;
  z(static_cast<Eigen::Index>(k)) = value;
  return SelfConfidenceProfile(std::move(z));
}

Eigen::MatrixXd effective_update_matrix(const InfluenceNetwork& net,
                                        const SelfConfidenceProfile& z) {
  if (z.size() != net.size())
    throw Error(ErrorCode::DimensionMismatch, "profile size != network size");
  const Eigen::VectorXd& zv = z.values();
  Eigen::MatrixXd q = (1.0 - zv.array()).matrix().asDiagonal() * net.weights();
  q.diagonal() += zv;
  return q;
}

double gamma(const CentralityVector& pi, const SelfConfidenceProfile& z) {
  if (pi.size() != z.size())
    throw Error(ErrorCode::DimensionMismatch, "pi and z differ in size");
  if (z.has_stubborn())
    throw Error(ErrorCode::StubbornPresent, "gamma undefined with stubborn agents");
  return (pi.values().array() / (1.0 - z.values().array())).sum();
}

LimitMatrix limit_matrix(const InfluenceNetwork& net,
                         const CentralityVector& pi,
                         const SelfConfidenceProfile& z) {
  const Index n = net.size();
  if (pi.size() != n || z.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "limit_matrix inputs differ in size");
  const auto en = static_cast<Eigen::Index>(n);

  const auto stubborn = z.stubborn_set();
  if (stubborn.empty()) {
    const Eigen::VectorXd weighted =
        pi.values().array() / (1.0 - z.values().array());
    const Eigen::RowVectorXd row = (weighted / weighted.sum()).transpose();
    return {row.replicate(en, 1), LimitBranch::Consensus};
  }

  std::vector<Index> transient;
  for (Index i = 0; i < n; ++i)
    if (!z.is_stubborn(i)) transient.push_back(i);

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(en, en);
  for (Index s : stubborn) h(s, s) = 1.0;
  if (transient.empty()) return {h, LimitBranch::Absorption};

  const auto nt = static_cast<Eigen::Index>(transient.size());
  const auto ns = static_cast<Eigen::Index>(stubborn.size());
  // (I - Q_TT) = (I - [z_T])(I - P_TT) and Q_TS = (I - [z_T]) P_TS; the common
  // left factor is invertible on T and cancels, so the solve uses P directly.
  const Eigen::MatrixXd& p = net.weights();
  Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(nt, nt);
  Eigen::MatrixXd rhs(nt, ns);
  for (Eigen::Index a = 0; a < nt; ++a) {
    for (Eigen::Index b = 0; b < nt; ++b)
      lhs(a, b) -= p(transient[a], transient[b]);
    for (Eigen::Index b = 0; b < ns; ++b) rhs(a, b) = p(transient[a], stubborn[b]);
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
  const Eigen::MatrixXd x = lu.solve(rhs);
  if (!x.allFinite() || (lhs * x - rhs).lpNorm<Eigen::Infinity>() > 1e-10)
    throw Error(ErrorCode::SingularSystem, "absorption solve failed");

  for (Eigen::Index a = 0; a < nt; ++a)
    for (Eigen::Index b = 0; b < ns; ++b)
      h(transient[a], stubborn[b]) = x(a, b);
  return {h, LimitBranch::Absorption};
}

}  // namespace selfconf
