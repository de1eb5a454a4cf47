#include "selfconf/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "selfconf/error.hpp"

namespace selfconf {

LimitMatrix power_limit(const InfluenceNetwork& net,
                        const SelfConfidenceProfile& z, double tol,
                        int max_squarings) {
  Eigen::MatrixXd q = effective_update_matrix(net, z);
  const LimitBranch branch =
      z.has_stubborn() ? LimitBranch::Absorption : LimitBranch::Consensus;
  for (int m = 0; m < max_squarings; ++m) {
    Eigen::MatrixXd next = q * q;
    // Keep rows stochastic so rounding cannot compound over 2^m steps.
    for (Eigen::Index i = 0; i < next.rows(); ++i) next.row(i) /= next.row(i).sum();
    const double change = (next - q).lpNorm<Eigen::Infinity>();
    q = std::move(next);
    if (change <= tol) return {q, branch};
  }
  throw Error(ErrorCode::NoConvergence,
              "Q^(2^m) did not settle after " + std::to_string(max_squarings) +
                  " squarings");
}

double grid_best_response(const InfluenceNetwork& net,
                          const VarianceVector& sigma2,
                          const SelfConfidenceProfile& z, Index k,
                          double grid_step) {
  if (!(grid_step > 0.0))
    throw Error(ErrorCode::InvalidConfig, "grid step must be positive");
  if (k >= net.size())
    throw Error(ErrorCode::AgentOutOfRange, "agent out of range");
  std::vector<double> grid;
  for (std::size_t m = 0;; ++m) {
    const double v = static_cast<double>(m) * grid_step;
    if (v >= 1.0) break;
    grid.push_back(v);
  }
  grid.push_back(1.0);

  double best_value = grid.front();
  double best_cost = std::numeric_limits<double>::infinity();
  for (double v : grid) {
    const auto h = power_limit(net, z.with(k, v));
    const double cost =
        estimation_costs(h, sigma2).upsilon(static_cast<Eigen::Index>(k));
    if (cost < best_cost) {
      best_cost = cost;
      best_value = v;
    }
  }
  return best_value;
}

namespace {

constexpr std::size_t kBlockSize = 4096;

struct BlockMoments {
  Eigen::VectorXd sum;
  Eigen::VectorXd sum_sq;
};

BlockMoments run_block(const Eigen::MatrixXd& q, const Eigen::VectorXd& sd,
                       double theta, std::size_t count, std::size_t horizon,
                       std::uint64_t seed, std::uint64_t block) {
  const auto n = q.rows();
  const auto cols = static_cast<Eigen::Index>(count);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::MatrixXd x(n, cols), next(n, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index i = 0; i < n; ++i) x(i, c) = theta + sd(i) * normal(rng);
  for (std::size_t t = 0; t < horizon; ++t) {
    next.noalias() = q * x;
    x.swap(next);
  }
  const Eigen::ArrayXXd err = x.array() - theta;
  return {err.rowwise().sum().matrix(), err.square().rowwise().sum().matrix()};
}

}  // namespace

OpinionRollout opinion_rollout(const InfluenceNetwork& net,
                               const SelfConfidenceProfile& z,
                               const VarianceVector& sigma2, double theta,
                               std::size_t samples, std::size_t horizon,
                               std::uint64_t seed, unsigned workers) {
  if (samples < 2)
    throw Error(ErrorCode::InvalidConfig, "rollout needs at least 2 samples");
  if (sigma2.size() != net.size())
    throw Error(ErrorCode::DimensionMismatch, "sigma2 and network differ in size");
  const Eigen::MatrixXd q = effective_update_matrix(net, z);
  const Eigen::VectorXd sd = sigma2.values().cwiseSqrt();

  const std::size_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockMoments> moments(blocks);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t b = first; b < blocks; b += stride) {
      const std::size_t count = std::min(kBlockSize, samples - b * kBlockSize);
      moments[b] = run_block(q, sd, theta, count, horizon, seed, b);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(blocks)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  const auto n = static_cast<Eigen::Index>(net.size());
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(n), sum_sq = Eigen::VectorXd::Zero(n);
  for (const auto& m : moments) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const double count = static_cast<double>(samples);
  const Eigen::VectorXd mean = sum / count;
  Eigen::VectorXd var =
      ((sum_sq - count * mean.cwiseProduct(mean)) / (count - 1.0)).cwiseMax(0.0);
  return {theta, samples, horizon, seed, std::move(var), mean};
}

}  // namespace selfconf
