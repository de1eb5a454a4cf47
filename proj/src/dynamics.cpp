#include "selfconf/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "selfconf/error.hpp"

namespace selfconf {

namespace {

void require_interior(const SelfConfidenceProfile& z) {
  if (z.has_stubborn())
    throw Error(ErrorCode::StubbornPresent,
                "gradient is only defined when nobody is stubborn");
}

void check_sizes(const CentralityVector& pi, const VarianceVector& sigma2,
                 Index n) {
  if (pi.size() != n || sigma2.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "dynamics inputs differ in size");
}

// Allocation-free evaluation of z' on raw state; the integrator calls this
// four times per step for up to ~1e9 steps.
class AdaptationField {
 public:
  AdaptationField(const CentralityVector& pi, const VarianceVector& sigma2,
                  VectorField field)
      : pi_(pi.values()),
        weight_(pi.values().cwiseProduct(sigma2.values())),
        field_(field) {}

  void operator()(const Eigen::VectorXd& z, Eigen::VectorXd& out) const {
    const Eigen::Index n = z.size();
    double a = 0.0, b = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double y = 1.0 / (1.0 - z(j));
      a += pi_(j) * y;
      b += pi_(j) * weight_(j) * y * y;
    }
    const double a3 = a * a * a;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double y = 1.0 / (1.0 - z(i));
      double grad = 2.0 * pi_(i) * (a * weight_(i) * y - b) / a3;
      if (field_ == VectorField::SelfConfidence) grad *= y * y;
      out(i) = -z(i) * grad;
    }
  }

 private:
  const Eigen::VectorXd& pi_;
  Eigen::VectorXd weight_;
  VectorField field_;
};

}  // namespace

GradientTerms gradient_terms(const CentralityVector& pi,
                             const VarianceVector& sigma2,
                             const SelfConfidenceProfile& z) {
  check_sizes(pi, sigma2, z.size());
  require_interior(z);
  const Eigen::ArrayXd y = 1.0 / (1.0 - z.values().array());
  const Eigen::ArrayXd p = pi.values().array();
  const double a = (p * y).sum();
  const double b = (p * p * sigma2.values().array() * y * y).sum();
  return {a, b, y.matrix()};
}

Eigen::VectorXd reciprocal_cost_gradient(const CentralityVector& pi,
                                         const VarianceVector& sigma2,
                                         const SelfConfidenceProfile& z) {
  const GradientTerms t = gradient_terms(pi, sigma2, z);
  const Eigen::ArrayXd p = pi.values().array();
  const Eigen::ArrayXd numerator =
      t.A * p * sigma2.values().array() * t.y.array() - t.B;
  return (2.0 * p * numerator / (t.A * t.A * t.A)).matrix();
}

Eigen::VectorXd cost_gradient(const CentralityVector& pi,
                              const VarianceVector& sigma2,
                              const SelfConfidenceProfile& z) {
  const Eigen::VectorXd dy = reciprocal_cost_gradient(pi, sigma2, z);
  const Eigen::ArrayXd y = 1.0 / (1.0 - z.values().array());
  return (y * y * dy.array()).matrix();
}

Eigen::VectorXd adaptation_velocity(const CentralityVector& pi,
                                    const VarianceVector& sigma2,
                                    const SelfConfidenceProfile& z,
                                    VectorField field) {
  check_sizes(pi, sigma2, z.size());
  require_interior(z);
  Eigen::VectorXd out(z.values().size());
  AdaptationField(pi, sigma2, field)(z.values(), out);
  return out;
}

void SolverConfig::validate() const {
  if (!(step > 0.0) || !(t_max > 0.0) || !(stop_tol > 0.0) ||
      !(floor > 0.0 && floor < 1.0) || sample_every == 0)
    throw Error(ErrorCode::InvalidConfig,
                "solver needs step, t_max, stop_tol > 0, 0 < floor < 1 and "
                "sample_every >= 1");
}

AlphaFit fit_alpha(const CentralityVector& pi, const VarianceVector& sigma2,
                   const SelfConfidenceProfile& z) {
  check_sizes(pi, sigma2, z.size());
  require_interior(z);
  const Eigen::ArrayXd ratios = (1.0 - z.values().array()) /
                                (pi.values().array() * sigma2.values().array());
  const double mean = ratios.mean();
  return {mean, (ratios.maxCoeff() - ratios.minCoeff()) / mean};
}

TrajectoryRecord simulate_adaptation(const InfluenceNetwork& net,
                                     const CentralityVector& pi,
                                     const VarianceVector& sigma2,
                                     const SelfConfidenceProfile& z0,
                                     const SolverConfig& cfg) {
  cfg.validate();
  const Index n = net.size();
  if (z0.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "z0 and network differ in size");
  check_sizes(pi, sigma2, n);
  if (z0.has_stubborn())
    throw Error(ErrorCode::NonInteriorStart,
                "adaptation dynamics need every z_i(0) < 1");

  const AdaptationField field(pi, sigma2, cfg.field);
  const auto en = static_cast<Eigen::Index>(n);
  const double h = cfg.step;
  const double upper = 1.0 - cfg.floor;

  Eigen::VectorXd z = z0.values().cwiseMin(upper);
  Eigen::VectorXd k1(en), k2(en), k3(en), k4(en), stage(en);
  std::vector<bool> pinned(n);
  for (Index i = 0; i < n; ++i) pinned[i] = z(static_cast<Eigen::Index>(i)) == 0.0;

  TrajectoryRecord rec;
  rec.reversals.assign(n, 0);
  std::vector<int> last_sign(n, 0);

  auto record = [&](double t, double norm) {
    const SelfConfidenceProfile p(z);
    rec.times.push_back(t);
    rec.profiles.push_back(z);
    rec.alpha_hats.push_back(fit_alpha(pi, sigma2, p).alpha_hat);
    rec.grad_norms.push_back(norm);
  };
  auto check_stage = [&](const Eigen::VectorXd& s, double t) {
    for (Eigen::Index i = 0; i < en; ++i)
      if (!(s(i) >= -cfg.floor && s(i) < 1.0))
        throw Error(ErrorCode::StepTooLarge,
                    "RK4 stage left the admissible box at t = " +
                        std::to_string(t) + " (agent " + std::to_string(i + 1) +
                        ", z = " + std::to_string(s(i)) + ")");
  };

  const auto max_steps = static_cast<std::size_t>(std::ceil(cfg.t_max / h));
  std::size_t step = 0;
  double t = 0.0;
  double norm = 0.0;
  for (;; ++step) {
    t = static_cast<double>(step) * h;
    field(z, k1);
    norm = k1.lpNorm<Eigen::Infinity>();
    for (Index i = 0; i < n; ++i) {
      const double v = k1(static_cast<Eigen::Index>(i));
      if (std::abs(v) <= cfg.stop_tol) continue;
      const int sign = v > 0.0 ? 1 : -1;
      if (last_sign[i] != 0 && sign != last_sign[i]) ++rec.reversals[i];
      last_sign[i] = sign;
    }
    const bool converged = norm <= cfg.stop_tol;
    if (converged || step >= max_steps) {
      rec.converged = converged;
      break;
    }
    if (step % cfg.sample_every == 0) record(t, norm);

    stage = z + 0.5 * h * k1;
    check_stage(stage, t);
    field(stage, k2);
    stage = z + 0.5 * h * k2;
    check_stage(stage, t);
    field(stage, k3);
    stage = z + h * k3;
    check_stage(stage, t);
    field(stage, k4);
    z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    z = z.cwiseMax(0.0).cwiseMin(upper);

    for (Index i = 0; i < n; ++i)
      if (pinned[i] && z(static_cast<Eigen::Index>(i)) != 0.0)
        throw std::logic_error("agent starting at z = 0 left the boundary");
  }

  record(t, norm);
  rec.steady = z;
  rec.t_final = t;
  rec.steps = step;
  const AlphaFit fit = fit_alpha(pi, sigma2, SelfConfidenceProfile(z));
  rec.fitted_alpha = fit.alpha_hat;
  rec.alpha_spread = fit.spread;
  return rec;
}

}  // namespace selfconf
