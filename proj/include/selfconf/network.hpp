#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace selfconf {

using Index = std::size_t;

/// Absolute tolerance on each row sum of a raw influence matrix.
inline constexpr double kStochasticTolerance = 1e-9;

/// Row-stochastic, zero-diagonal, irreducible and aperiodic influence matrix.
/// Can only be obtained through validate_network().
class InfluenceNetwork {
 public:
  Index size() const noexcept { return static_cast<Index>(weights_.rows()); }
  const Eigen::MatrixXd& weights() const noexcept { return weights_; }
  double weight(Index i, Index j) const { return weights_(i, j); }
  bool has_edge(Index i, Index j) const { return weights_(i, j) > 0.0; }

  /// Out-neighbours of each node in G_P.
  const std::vector<std::vector<Index>>& adjacency() const noexcept {
    return adjacency_;
  }

 private:
  friend InfluenceNetwork validate_network(const Eigen::MatrixXd& raw);
  explicit InfluenceNetwork(Eigen::MatrixXd weights);

  Eigen::MatrixXd weights_;
  std::vector<std::vector<Index>> adjacency_;
};

struct RestrictedGraph {
  std::vector<Index> subset;                     // sorted node ids
  std::vector<std::pair<Index, Index>> edges;    // sorted, i != j
};

/// Validates a raw matrix and renormalizes rows that are within tolerance.
/// Throws Error with NotSquare, NegativeEntry, NonzeroDiagonal,
/// RowSumOutOfTolerance, NotStronglyConnected or Periodic.
InfluenceNetwork validate_network(const Eigen::MatrixXd& raw);

// Graph queries on an adjacency list; exposed so that they can be checked
// against brute force independently of matrix validation.
bool is_strongly_connected(const std::vector<std::vector<Index>>& adjacency);

/// Period of a strongly connected graph (gcd of its cycle lengths).
Index graph_period(const std::vector<std::vector<Index>>& adjacency);

/// G[S]: edge (i, j) iff j is reachable from i without passing through an
/// intermediate node of S.
RestrictedGraph restricted_graph(const InfluenceNetwork& net,
                                 std::vector<Index> subset);

/// True iff the graph is 1-regular and its edges form one cycle covering S.
bool is_directed_ring(const RestrictedGraph& g);

}  // namespace selfconf
