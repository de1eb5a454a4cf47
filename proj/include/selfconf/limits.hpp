#pragma once

#include <vector>

#include <Eigen/Dense>

#include "selfconf/centrality.hpp"
#include "selfconf/network.hpp"

namespace selfconf {

/// Self-confidence profile z in [0,1]^n. An agent is stubborn iff z_i == 1
/// exactly; values such as 1 - 1e-17 that round to 1.0 are stubborn.
class SelfConfidenceProfile {
 public:
  explicit SelfConfidenceProfile(Eigen::VectorXd z);

  static SelfConfidenceProfile constant(Index n, double value);

  Index size() const noexcept { return static_cast<Index>(z_.size()); }
  const Eigen::VectorXd& values() const noexcept { return z_; }
  double operator[](Index i) const { return z_(static_cast<Eigen::Index>(i)); }

  bool is_stubborn(Index i) const { return (*this)[i] == 1.0; }
  std::vector<Index> stubborn_set() const;
  bool has_stubborn() const;
  /// Stubborn agents other than k.
  std::vector<Index> stubborn_set_without(Index k) const;

  /// Copy with z_k replaced.
  SelfConfidenceProfile with(Index k, double value) const;

 private:
  Eigen::VectorXd z_;
};

/// Q = (I - [z])P + [z].
Eigen::MatrixXd effective_update_matrix(const InfluenceNetwork& net,
                                        const SelfConfidenceProfile& z);

enum class LimitBranch { Consensus, Absorption };

struct LimitMatrix {
  Eigen::MatrixXd H;
  LimitBranch branch;
};

/// gamma(z) = sum_i pi_i / (1 - z_i). Throws StubbornPresent.
double gamma(const CentralityVector& pi, const SelfConfidenceProfile& z);

/// Limit of Q^t: the consensus closed form when nobody is stubborn, otherwise
/// absorption probabilities into the stubborn set.
LimitMatrix limit_matrix(const InfluenceNetwork& net,
                         const CentralityVector& pi,
                         const SelfConfidenceProfile& z);

}  // namespace selfconf
