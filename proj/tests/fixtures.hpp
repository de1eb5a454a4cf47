#pragma once

#include <random>
#include <string>

#include <Eigen/Dense>

#include "selfconf/centrality.hpp"
#include "selfconf/estimation.hpp"
#include "selfconf/game.hpp"
#include "selfconf/network.hpp"

namespace selfconf::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(SELFCONF_FIXTURES) + "/" + name;
}

inline Eigen::MatrixXd paper4_matrix() {
  Eigen::MatrixXd p(4, 4);
  p << 0.0, 0.1, 0.2, 0.7,
       0.25, 0.0, 0.25, 0.5,
       0.5, 0.5, 0.0, 0.0,
       0.2, 0.0, 0.8, 0.0;
  return p;
}

inline Eigen::MatrixXd tri3_matrix() {
  Eigen::MatrixXd p(3, 3);
  p << 0.0, 0.5, 0.5,
       0.5, 0.0, 0.5,
       0.5, 0.5, 0.0;
  return p;
}

inline Eigen::VectorXd paper4_sigma2() {
  Eigen::VectorXd s(4);
  s << 0.32 * 0.32, 0.35 * 0.35, 0.38 * 0.38, 0.29 * 0.29;
  return s;
}

/// Everything derived from one network + variances.
struct Setup {
  std::string name;
  InfluenceNetwork net;
  CentralityVector pi;
  VarianceVector sigma2;
  ParetoRay ray;

  Setup(std::string label, const Eigen::MatrixXd& p, const Eigen::VectorXd& s2)
      : name(std::move(label)),
        net(validate_network(p)),
        pi(centrality(net)),
        sigma2(s2),
        ray(pareto_set(pi, sigma2)) {}

  Index n() const { return net.size(); }
};

inline Setup paper4() { return {"paper4", paper4_matrix(), paper4_sigma2()}; }
inline Setup tri3() { return {"tri3", tri3_matrix(), Eigen::VectorXd::Ones(3)}; }

/// Random dense-ish stochastic zero-diagonal matrix on a ring backbone plus a
/// chord, so it is irreducible and aperiodic. Needs n >= 3.
inline Eigen::MatrixXd random_network(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    p(i, (i + 1) % n) = 0.2 + u(rng);
    for (Index j = 0; j < n; ++j)
      if (j != i && u(rng) < 0.4) p(i, j) += u(rng);
  }
  p(0, 2) += 0.3;  // cycles of length n and n - 1
  for (Index i = 0; i < n; ++i) p.row(i) /= p.row(i).sum();
  return p;
}

inline Setup random_setup(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Eigen::VectorXd s2(n);
  for (Index i = 0; i < n; ++i) s2(i) = u(rng);
  return {"random" + std::to_string(n), random_network(n, rng), s2};
}

/// Uniform interior profile in [lo, hi]^n.
inline SelfConfidenceProfile random_interior(Index n, std::mt19937_64& rng,
                                             double lo = 0.0, double hi = 0.99) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd z(n);
  for (Index i = 0; i < n; ++i) z(i) = u(rng);
  return SelfConfidenceProfile(z);
}

/// Interior entries, each set stubborn with probability `p_stubborn`.
inline SelfConfidenceProfile random_mixed(Index n, std::mt19937_64& rng,
                                          double p_stubborn = 0.25) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd z(n);
  for (Index i = 0; i < n; ++i) z(i) = u(rng) < p_stubborn ? 1.0 : 0.99 * u(rng);
  return SelfConfidenceProfile(z);
}

}  // namespace selfconf::testing
