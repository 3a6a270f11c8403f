#pragma once

#include "msu/metric_space.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

namespace msu {

/// Coordinates on the real line, one per point, with |coords[i] - coords[j]| = d(i, j).
template <typename Scalar>
struct LineRealization {
  std::vector<Scalar> coords;
};

/// Ordering p0..p3 with d(p0,p1)=d(p2,p3), d(p1,p2)=d(p3,p0) and
/// d(p0,p2) = d(p0,p1) + d(p1,p2) = d(p1,p3).
struct PLLabeling {
  std::array<std::size_t, 4> perm{};

  friend bool operator==(const PLLabeling&, const PLLabeling&) = default;
};

/// Point j lies between i and k: d(i,k) = d(i,j) + d(j,k).
template <typename Scalar>
bool lies_between(const MetricSpace<Scalar>& x, std::size_t i, std::size_t j, std::size_t k,
                  double tol = kDefaultTolerance) {
  if (i >= x.size() || j >= x.size() || k >= x.size())
    fail(ErrorCode::IndexOutOfRange, "point index out of range");
  if (i == j || j == k || i == k) fail(ErrorCode::InvalidInput, "lies_between needs three distinct points");
  return approx_eq<Scalar>(x(i, k), Scalar(x(i, j) + x(j, k)), tol);
}

namespace detail {

template <typename Scalar>
void require_triple(const Scalar& d12, const Scalar& d13, const Scalar& d23, double tol) {
  const Scalar zero(0);
  if (!approx_lt<Scalar>(zero, d12, tol) || !approx_lt<Scalar>(zero, d13, tol) || !approx_lt<Scalar>(zero, d23, tol))
    fail(ErrorCode::InvalidTriple, "triple distances must be positive");
  if (!approx_le<Scalar>(d12, Scalar(d13 + d23), tol) || !approx_le<Scalar>(d13, Scalar(d12 + d23), tol) ||
      !approx_le<Scalar>(d23, Scalar(d12 + d13), tol))
    fail(ErrorCode::InvalidTriple, "triple violates the triangle inequality");
}

}  // namespace detail

/// One of the three points lies between the other two: 2 max = sum.
template <typename Scalar>
bool is_mb_triple(const Scalar& d12, const Scalar& d13, const Scalar& d23, double tol = kDefaultTolerance) {
  detail::require_triple(d12, d13, d23, tol);
  const Scalar m = std::max({d12, d13, d23});
  return approx_eq<Scalar>(Scalar(m + m), Scalar(d12 + d13 + d23), tol);
}

/// Cayley-Menger determinant of a triple; equals -16 * area^2.
template <typename Scalar>
Scalar cayley_menger(const Scalar& d12, const Scalar& d13, const Scalar& d23, double tol = kDefaultTolerance) {
  detail::require_triple(d12, d13, d23, tol);
  const Scalar a = d12 * d12, b = d13 * d13, c = d23 * d23;
  const Scalar one(1), zero(0);
  Eigen::Matrix<Scalar, 4, 4> m;
  m << zero, a, b, one,
       a, zero, c, one,
       b, c, zero, one,
       one, one, one, zero;
  return m.determinant();
}

template <typename Scalar>
struct MBReport {
  bool is_mb = true;
  std::optional<std::array<std::size_t, 3>> violating_triple;
};

/// Every 3-subset has a point between the other two.
template <typename Scalar>
MBReport<Scalar> is_mb_space(const MetricSpace<Scalar>& x, double tol = kDefaultTolerance) {
  MBReport<Scalar> report;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!is_mb_triple(x(i, j), x(i, k), x(j, k), tol)) {
          report.is_mb = false;
          report.violating_triple = std::array<std::size_t, 3>{i, j, k};
          return report;
        }
  return report;
}

/// First ordering (lexicographic over the 24 permutations) satisfying the
/// pseudo-linear labeling equalities.
template <typename Scalar>
std::optional<PLLabeling> pl_labeling(const MetricSpace<Scalar>& x, double tol = kDefaultTolerance) {
  if (x.size() != 4) fail(ErrorCode::WrongCardinality, "pseudo-linear labeling needs exactly 4 points");
  std::array<std::size_t, 4> p{0, 1, 2, 3};
  do {
    const auto& d01 = x(p[0], p[1]);
    const auto& d12 = x(p[1], p[2]);
    if (approx_eq<Scalar>(d01, x(p[2], p[3]), tol) && approx_eq<Scalar>(d12, x(p[3], p[0]), tol) &&
        approx_eq<Scalar>(x(p[0], p[2]), Scalar(d01 + d12), tol) && approx_eq<Scalar>(x(p[0], p[2]), x(p[1], p[3]), tol))
      return PLLabeling{p};
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

namespace detail {

template <typename Scalar>
bool place_points(const MetricSpace<Scalar>& x, std::vector<Scalar>& coords, std::size_t next, double tol) {
  if (next == x.size()) return true;
  const Scalar& r = x(0, next);
  for (int sign : {+1, -1}) {
    Scalar c = sign > 0 ? r : Scalar(-r);
    bool ok = true;
    for (std::size_t k = 1; k < next && ok; ++k) ok = approx_eq<Scalar>(abs_diff(c, coords[k]), x(next, k), tol);
    if (!ok) continue;
    coords[next] = c;
    if (place_points(x, coords, next + 1, tol)) return true;
  }
  return false;
}

}  // namespace detail

/// Isometric embedding into the real line, canonicalized with the first point
/// at 0 and the second on the positive side. Signs of later points are found
/// by full backtracking.
template <typename Scalar>
std::optional<LineRealization<Scalar>> line_realization(const MetricSpace<Scalar>& x, double tol = kDefaultTolerance) {
  LineRealization<Scalar> out;
  out.coords.assign(x.size(), Scalar(0));
  if (x.size() <= 1) return out;
  out.coords[1] = x(0, 1);
  if (!detail::place_points(x, out.coords, 2, tol)) return std::nullopt;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!approx_eq<Scalar>(abs_diff(out.coords[i], out.coords[j]), x(i, j), tol)) return std::nullopt;
  return out;
}

/// Every proper subset of size at most 3 embeds in the line, the whole does not.
template <typename Scalar>
bool is_pseudolinear(const MetricSpace<Scalar>& x, double tol = kDefaultTolerance) {
  if (x.size() != 4) fail(ErrorCode::WrongCardinality, "pseudo-linear quadruples have exactly 4 points");
  for (std::size_t skip = 0; skip < 4; ++skip)
    if (!line_realization(x.without_point(skip), tol)) return false;
  return !line_realization(x, tol).has_value();
}

/// The quadruple with consecutive sides a, b, a, b and both diagonals a + b.
template <typename Scalar>
MetricSpace<Scalar> pl_quadruple(const Scalar& a, const Scalar& b) {
  const Scalar s = a + b;
  return space_from_upper<Scalar>(4, {a, s, b, b, s, a});
}

}  // namespace msu
