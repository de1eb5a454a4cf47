#include "selfconf/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "selfconf/error.hpp"

namespace selfconf {

namespace {

std::vector<std::vector<Index>> adjacency_of(const Eigen::MatrixXd& m) {
  const auto n = static_cast<Index>(m.rows());
  std::vector<std::vector<Index>> adj(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (m(i, j) > 0.0) adj[i].push_back(j);
  return adj;
}

std::vector<bool> reachable_from(const std::vector<std::vector<Index>>& adj,
                                 Index source) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<Index> frontier;
  seen[source] = true;
  frontier.push(source);
  while (!frontier.empty()) {
    const Index u = frontier.front();
    frontier.pop();
    for (Index v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        frontier.push(v);
      }
    }
  }
  return seen;
}

std::string cell(Index i, Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

InfluenceNetwork::InfluenceNetwork(Eigen::MatrixXd weights)
    : weights_(std::move(weights)), adjacency_(adjacency_of(weights_)) {}

bool is_strongly_connected(const std::vector<std::vector<Index>>& adjacency) {
  const Index n = adjacency.size();
  if (n == 0) return false;
  std::vector<std::vector<Index>> reversed(n);
  for (Index u = 0; u < n; ++u)
    for (Index v : adjacency[u]) reversed[v].push_back(u);
  const auto fwd = reachable_from(adjacency, 0);
  const auto bwd = reachable_from(reversed, 0);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

Index graph_period(const std::vector<std::vector<Index>>& adjacency) {
  // BFS levels from node 0; every edge (u,v) closes cycles whose lengths are
  // congruent to level[u] + 1 - level[v] modulo the period.
  const Index n = adjacency.size();
  constexpr long kUnset = -1;
  std::vector<long> level(n, kUnset);
  std::queue<Index> frontier;
  level[0] = 0;
  frontier.push(0);
  long period = 0;
  while (!frontier.empty()) {
    const Index u = frontier.front();
    frontier.pop();
    for (Index v : adjacency[u]) {
      if (level[v] == kUnset) {
        level[v] = level[u] + 1;
        frontier.push(v);
      } else {
        period = std::gcd(period, std::labs(level[u] + 1 - level[v]));
      }
    }
  }
  return static_cast<Index>(period);
}

InfluenceNetwork validate_network(const Eigen::MatrixXd& raw) {
  if (raw.rows() != raw.cols())
    throw Error(ErrorCode::NotSquare, "influence matrix is " +
                                          std::to_string(raw.rows()) + "x" +
                                          std::to_string(raw.cols()));
  const auto n = static_cast<Index>(raw.rows());
  if (n < 2)
    throw Error(ErrorCode::NotSquare, "influence matrix needs n >= 2");

  Eigen::MatrixXd p = raw;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double w = p(i, j);
      if (!std::isfinite(w) || w < 0.0)
        throw Error(ErrorCode::NegativeEntry,
                    "entry " + cell(i, j) + " is negative or not finite");
    }
    if (p(i, i) != 0.0)
      throw Error(ErrorCode::NonzeroDiagonal,
                  "diagonal entry " + cell(i, i) + " is nonzero");
    const double sum = p.row(i).sum();
    if (std::abs(sum - 1.0) > kStochasticTolerance)
      throw Error(ErrorCode::RowSumOutOfTolerance,
                  "row " + std::to_string(i + 1) + " sums to " +
                      std::to_string(sum));
    p.row(i) /= sum;
  }

  const auto adj = adjacency_of(p);
  if (!is_strongly_connected(adj))
    throw Error(ErrorCode::NotStronglyConnected,
                "influence graph is not strongly connected");
  if (const Index period = graph_period(adj); period != 1)
    throw Error(ErrorCode::Periodic,
                "influence graph has period " + std::to_string(period));
  return InfluenceNetwork(std::move(p));
}

RestrictedGraph restricted_graph(const InfluenceNetwork& net,
                                 std::vector<Index> subset) {
  if (subset.empty())
    throw Error(ErrorCode::EmptySubset, "restricted graph needs a nonempty set");
  const Index n = net.size();
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<bool> in_set(n, false);
  for (Index s : subset) {
    if (s >= n)
      throw Error(ErrorCode::NodeOutOfRange,
                  "node " + std::to_string(s) + " out of range");
    in_set[s] = true;
  }

  RestrictedGraph g{subset, {}};
  const auto& adj = net.adjacency();
  for (Index source : subset) {
    // Nodes of S may be reached but never expanded.
    std::vector<bool> seen(n, false);
    std::queue<Index> frontier;
    frontier.push(source);
    seen[source] = true;
    std::vector<Index> hits;
    while (!frontier.empty()) {
      const Index u = frontier.front();
      frontier.pop();
      for (Index v : adj[u]) {
        if (in_set[v]) {
          if (v != source && !seen[v]) hits.push_back(v);
          seen[v] = true;
          continue;
        }
        if (!seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(hits.begin(), hits.end());
    for (Index t : hits) g.edges.emplace_back(source, t);
  }
  return g;
}

bool is_directed_ring(const RestrictedGraph& g) {
  const Index m = g.subset.size();
  if (m == 0 || g.edges.size() != m) return false;
  auto position = [&](Index node) -> std::ptrdiff_t {
    auto it = std::lower_bound(g.subset.begin(), g.subset.end(), node);
    if (it == g.subset.end() || *it != node) return -1;
    return it - g.subset.begin();
  };
  std::vector<Index> successor(m, m), in_degree(m, 0), out_degree(m, 0);
  for (const auto& [from, to] : g.edges) {
    const auto a = position(from), b = position(to);
    if (a < 0 || b < 0 || a == b) return false;
    successor[a] = static_cast<Index>(b);
    ++out_degree[a];
    ++in_degree[b];
  }
  for (Index k = 0; k < m; ++k)
    if (in_degree[k] != 1 || out_degree[k] != 1) return false;
  // A permutation with in/out-degree one is a ring iff one cycle covers all.
  Index steps = 0, at = 0;
  do {
    at = successor[at];
    ++steps;
  } while (at != 0 && steps <= m);
  return steps == m;
}

}  // namespace selfconf
