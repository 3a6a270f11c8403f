#pragma once

#include "msu/embedding.hpp"

#include <algorithm>
#include <vector>

namespace msu {

struct SpaceFlags {
  bool ultrametric = false;
  bool discrete = false;
  bool strongly_rigid = false;
  bool homogeneous = false;

  friend bool operator==(const SpaceFlags&, const SpaceFlags&) = default;
};

template <typename Scalar>
bool is_ultrametric(const MetricSpace<Scalar>& x, double tol = kDefaultTolerance) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Scalar& m = std::max(x(i, k), x(k, j));
        if (!approx_le<Scalar>(x(i, j), m, tol)) return false;
      }
  return true;
}

/// All nonzero distances equal 1.
template <typename Scalar>
bool is_discrete(const MetricSpace<Scalar>& x, double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!approx_eq<Scalar>(x(i, j), Scalar(1), tol)) return false;
  return true;
}

/// Distances over unordered pairs are pairwise distinct.
template <typename Scalar>
bool is_strongly_rigid(const MetricSpace<Scalar>& x, double tol = kDefaultTolerance) {
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) values.push_back(x(i, j));
  std::sort(values.begin(), values.end());
  for (std::size_t a = 1; a < values.size(); ++a)
    if (approx_eq<Scalar>(values[a - 1], values[a], tol)) return false;
  return true;
}

/// The isometry group acts transitively: every point is the image of point 0
/// under some self-isometry.
template <typename Scalar>
bool is_homogeneous(const MetricSpace<Scalar>& x, const EmbeddingOptions& opts = {}) {
  if (x.size() <= 1) return true;
  std::vector<char> reached(x.size(), 0);
  EmbeddingOptions all = opts;
  all.limit = 0;
  for (const auto& f : find_embeddings(x, x, all)) reached[f[0]] = 1;
  return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

template <typename Scalar>
SpaceFlags classify_space(const MetricSpace<Scalar>& x, const EmbeddingOptions& opts = {}) {
  SpaceFlags flags;
  flags.ultrametric = is_ultrametric(x, opts.tol);
  flags.discrete = is_discrete(x, opts.tol);
  flags.strongly_rigid = is_strongly_rigid(x, opts.tol);
  flags.homogeneous = is_homogeneous(x, opts);
  return flags;
}

}  // namespace msu
