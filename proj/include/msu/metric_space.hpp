#pragma once

#include "msu/error.hpp"
#include "msu/scalar.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace msu {

enum class Axiom { Asymmetry, NonzeroDiagonal, NonpositiveOffDiagonal, TriangleViolation };

std::string_view axiom_name(Axiom axiom);

/// One failed metric axiom. For TriangleViolation, d(i,k) > d(i,j) + d(j,k);
/// for the pairwise axioms k is unused and equals j.
struct AxiomViolation {
  Axiom axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// Every violated axiom of a square matrix. Triangle violations are reported
/// once per ordered (i, j, k) with i < k and j distinct from both.
template <typename Scalar>
std::vector<AxiomViolation> check_axioms(const DistanceMatrix<Scalar>& d, double tol = kDefaultTolerance) {
  std::vector<AxiomViolation> out;
  const Eigen::Index n = d.rows();
  const auto u = [](Eigen::Index v) { return static_cast<std::size_t>(v); };
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!approx_eq<Scalar>(d(i, i), Scalar(0), tol)) out.push_back({Axiom::NonzeroDiagonal, u(i), u(i), u(i)});
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!approx_eq<Scalar>(d(i, j), d(j, i), tol)) out.push_back({Axiom::Asymmetry, u(i), u(j), u(j)});
      if (!approx_lt<Scalar>(Scalar(0), d(i, j), tol) || !approx_lt<Scalar>(Scalar(0), d(j, i), tol))
        out.push_back({Axiom::NonpositiveOffDiagonal, u(i), u(j), u(j)});
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        Scalar via = d(i, j) + d(j, k);
        if (!approx_le<Scalar>(d(i, k), via, tol)) out.push_back({Axiom::TriangleViolation, u(i), u(j), u(k)});
      }
    }
  }
  return out;
}

/// A finite metric space: distinct labels plus a validated distance matrix.
/// Immutable after construction.
template <typename Scalar>
class MetricSpace {
 public:
  using scalar_type = Scalar;
  using Matrix = DistanceMatrix<Scalar>;

  MetricSpace() = default;

  /// Validates and constructs; throws Error(InvalidSpace) listing violations.
  /// Labels default to "0", "1", ... when empty.
  MetricSpace(Matrix d, std::vector<std::string> labels = {}, double tol = kDefaultTolerance)
      : labels_(std::move(labels)), d_(std::move(d)) {
    if (d_.rows() != d_.cols()) fail(ErrorCode::InvalidInput, "distance matrix is not square");
    if (labels_.empty()) {
      for (Eigen::Index i = 0; i < d_.rows(); ++i) labels_.push_back(std::to_string(i));
    }
    if (static_cast<Eigen::Index>(labels_.size()) != d_.rows())
      fail(ErrorCode::InvalidInput, "label count does not match matrix size");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
      fail(ErrorCode::InvalidInput, "labels are not distinct");
    violations_check(tol);
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return d_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& matrix() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  Scalar diameter() const { return d_.size() == 0 ? Scalar(0) : Scalar(d_.maxCoeff()); }

  /// Restriction to the given indices, in the given order.
  MetricSpace subspace(std::span<const std::size_t> indices) const {
    Matrix sub(static_cast<Eigen::Index>(indices.size()), static_cast<Eigen::Index>(indices.size()));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < indices.size(); ++a) {
      labels.push_back(labels_.at(indices[a]));
      for (std::size_t b = 0; b < indices.size(); ++b) sub(Eigen::Index(a), Eigen::Index(b)) = (*this)(indices[a], indices[b]);
    }
    return from_trusted(std::move(sub), std::move(labels));
  }

  MetricSpace without_point(std::size_t removed) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != removed) keep.push_back(i);
    return subspace(keep);
  }

  /// Skips validation; only for matrices derived from an already valid space.
  static MetricSpace from_trusted(Matrix d, std::vector<std::string> labels) {
    MetricSpace s;
    s.d_ = std::move(d);
    s.labels_ = std::move(labels);
    return s;
  }

 private:
  void violations_check(double tol) {
    auto violations = check_axioms<Scalar>(d_, tol);
    if (violations.empty()) return;
    const auto& v = violations.front();
    std::string msg = "metric axiom violated: " + std::string(axiom_name(v.axiom)) + " at (" + std::to_string(v.i) +
                      "," + std::to_string(v.j);
    if (v.axiom == Axiom::TriangleViolation) msg += "," + std::to_string(v.k);
    msg += ")";
    if (violations.size() > 1) msg += " and " + std::to_string(violations.size() - 1) + " more";
    fail(ErrorCode::InvalidSpace, msg);
  }

  std::vector<std::string> labels_;
  Matrix d_;
};

template <typename Scalar>
struct ValidationResult {
  std::vector<AxiomViolation> violations;
  std::optional<MetricSpace<Scalar>> space;

  bool valid() const { return space.has_value(); }
};

/// Checks the metric axioms and returns either the space or every violation.
template <typename Scalar>
ValidationResult<Scalar> validate_space(const DistanceMatrix<Scalar>& d, std::vector<std::string> labels = {},
                                        double tol = kDefaultTolerance) {
  if (d.rows() != d.cols()) fail(ErrorCode::InvalidInput, "distance matrix is not square");
  ValidationResult<Scalar> out;
  out.violations = check_axioms<Scalar>(d, tol);
  if (out.violations.empty()) out.space.emplace(d, std::move(labels), tol);
  return out;
}

/// Builds a symmetric matrix from the strict upper triangle given row by row:
/// d01, d02, ..., d0(n-1), d12, ...
template <typename Scalar>
DistanceMatrix<Scalar> from_upper(std::size_t n, std::span<const Scalar> upper) {
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) fail(ErrorCode::InvalidInput, "wrong number of upper-triangle entries");
  DistanceMatrix<Scalar> d = DistanceMatrix<Scalar>::Zero(Eigen::Index(n), Eigen::Index(n));
  std::size_t at = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d(Eigen::Index(i), Eigen::Index(j)) = upper[at];
      d(Eigen::Index(j), Eigen::Index(i)) = upper[at];
      ++at;
    }
  return d;
}

template <typename Scalar>
MetricSpace<Scalar> space_from_upper(std::size_t n, std::initializer_list<Scalar> upper) {
  return MetricSpace<Scalar>(from_upper<Scalar>(n, std::span<const Scalar>(upper.begin(), upper.size())));
}

/// Points of the real line with the induced metric |x - y|.
template <typename Scalar>
MetricSpace<Scalar> line_space(std::span<const Scalar> coords) {
  const auto n = static_cast<Eigen::Index>(coords.size());
  DistanceMatrix<Scalar> d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = abs_diff(coords[std::size_t(i)], coords[std::size_t(j)]);
  return MetricSpace<Scalar>(std::move(d));
}

template <typename Scalar>
MetricSpace<Scalar> line_space(std::initializer_list<Scalar> coords) {
  return line_space<Scalar>(std::span<const Scalar>(coords.begin(), coords.size()));
}

/// n points at mutual distance `side`.
template <typename Scalar>
MetricSpace<Scalar> equilateral(std::size_t n, const Scalar& side) {
  DistanceMatrix<Scalar> d = DistanceMatrix<Scalar>::Constant(Eigen::Index(n), Eigen::Index(n), side);
  for (Eigen::Index i = 0; i < Eigen::Index(n); ++i) d(i, i) = Scalar(0);
  return MetricSpace<Scalar>(std::move(d));
}

}  // namespace msu
