#pragma once

#include "msu/metric_space.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace msu {

template <typename Scalar>
struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Scalar weight{};
};

/// Simple undirected graph with nonnegative edge weights.
template <typename Scalar>
class WeightedGraph {
 public:
  WeightedGraph() = default;

  explicit WeightedGraph(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size())
      fail(ErrorCode::InvalidInput, "vertex labels are not distinct");
  }

  explicit WeightedGraph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) vertices_.push_back(std::to_string(i));
  }

  void add_edge(std::size_t u, std::size_t v, const Scalar& w) {
    if (u >= vertices_.size() || v >= vertices_.size()) fail(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
    if (u == v) fail(ErrorCode::InvalidInput, "loops are not allowed");
    if (w < Scalar(0)) fail(ErrorCode::InvalidInput, "edge weights must be nonnegative");
    auto key = std::minmax(u, v);
    if (!index_.emplace(key, edges_.size()).second) fail(ErrorCode::InvalidInput, "parallel edges are not allowed");
    edges_.push_back({key.first, key.second, w});
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<WeightedEdge<Scalar>>& edges() const { return edges_; }

  std::optional<Scalar> weight(std::size_t u, std::size_t v) const {
    auto it = index_.find(std::minmax(u, v));
    if (it == index_.end()) return std::nullopt;
    return edges_[it->second].weight;
  }

  std::vector<std::vector<std::pair<std::size_t, Scalar>>> adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> adj(vertices_.size());
    for (const auto& e : edges_) {
      adj[e.u].emplace_back(e.v, e.weight);
      adj[e.v].emplace_back(e.u, e.weight);
    }
    return adj;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<WeightedEdge<Scalar>> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

template <typename Scalar>
struct ShortestPaths {
  DistanceMatrix<Scalar> distance;
  /// predecessor[s][v] is the vertex before v on a shortest s-v path (s for v == s).
  std::vector<std::vector<std::size_t>> predecessor;

  std::vector<std::size_t> path(std::size_t s, std::size_t t) const {
    std::vector<std::size_t> out{t};
    while (t != s) {
      t = predecessor[s][t];
      out.push_back(t);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

/// All-pairs minimum path weight, one dense Dijkstra per source. Exact when the
/// scalar is exact. Ties keep the earlier-found predecessor.
template <typename Scalar>
ShortestPaths<Scalar> all_pairs_shortest_paths(const WeightedGraph<Scalar>& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = g.adjacency();
  ShortestPaths<Scalar> sp;
  sp.distance = DistanceMatrix<Scalar>::Zero(Eigen::Index(n), Eigen::Index(n));
  sp.predecessor.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::optional<Scalar>> dist(n);
    std::vector<char> done(n, 0);
    dist[s] = Scalar(0);
    sp.predecessor[s][s] = s;
    for (std::size_t round = 0; round < n; ++round) {
      std::optional<std::size_t> best;
      for (std::size_t v = 0; v < n; ++v)
        if (!done[v] && dist[v] && (!best || *dist[v] < *dist[*best])) best = v;
      if (!best) break;
      const std::size_t u = *best;
      done[u] = 1;
      for (const auto& [v, w] : adj[u]) {
        Scalar cand = *dist[u] + w;
        if (!done[v] && (!dist[v] || cand < *dist[v])) {
          dist[v] = cand;
          sp.predecessor[s][v] = u;
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!dist[v])
        fail(ErrorCode::DisconnectedGraph,
             "graph is disconnected: no path between '" + g.vertices()[s] + "' and '" + g.vertices()[v] + "'");
      sp.distance(Eigen::Index(s), Eigen::Index(v)) = *dist[v];
    }
  }
  return sp;
}

/// The weighted shortest-path pseudometric d_{w,G}.
template <typename Scalar>
DistanceMatrix<Scalar> shortest_path_pseudometric(const WeightedGraph<Scalar>& g) {
  return all_pairs_shortest_paths(g).distance;
}

template <typename Scalar>
struct MetrizationReport {
  bool pseudometrizable = false;
  bool metrizable = false;
  std::optional<std::vector<std::size_t>> violating_cycle;  ///< closed walk listed without repeating the start
  std::optional<MetricSpace<Scalar>> metric;
  DistanceMatrix<Scalar> pseudometric;
};

/// A weight is pseudometrizable iff every edge is itself a shortest path
/// (equivalently 2 max w(e) <= w(C) on every cycle C); metrizable iff in
/// addition all distinct vertices are at positive distance. When an edge is
/// beaten by a path, that path plus the edge is reported as the violating cycle.
template <typename Scalar>
MetrizationReport<Scalar> check_metrizability(const WeightedGraph<Scalar>& g, double tol = kDefaultTolerance) {
  if (g.vertex_count() == 0) fail(ErrorCode::InvalidInput, "graph has no vertices");
  auto sp = all_pairs_shortest_paths(g);
  MetrizationReport<Scalar> report;
  report.pseudometrizable = true;
  for (const auto& e : g.edges()) {
    if (approx_lt<Scalar>(sp.distance(Eigen::Index(e.u), Eigen::Index(e.v)), e.weight, tol)) {
      report.pseudometrizable = false;
      report.violating_cycle = sp.path(e.u, e.v);
      break;
    }
  }
  if (report.pseudometrizable) {
    report.metrizable = true;
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n && report.metrizable; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (!approx_lt<Scalar>(Scalar(0), sp.distance(Eigen::Index(u), Eigen::Index(v)), tol)) {
          report.metrizable = false;
          break;
        }
    if (report.metrizable) report.metric.emplace(sp.distance, g.vertices(), tol);
  }
  report.pseudometric = std::move(sp.distance);
  return report;
}

}  // namespace msu
