#pragma once

#include "msu/metric_space.hpp"

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

namespace msu::rays {

inline constexpr double kGeoTolerance = 1e-9;
inline constexpr double kSolverTolerance = 1e-6;
inline constexpr int kMultistarts = 64;

/// Side lengths of a planar triangle with vertices 0, 1, 2:
/// a = d(1,2), b = d(0,2), c = d(0,1).
struct Triangle {
  double a = 0;
  double b = 0;
  double c = 0;

  /// Length of the side joining vertices i and j.
  double side(std::size_t i, std::size_t j) const;
  /// Interior angle at vertex i, in [0, pi].
  double angle(std::size_t i) const;
  /// Whether the triangle inequality holds with equality for some vertex.
  bool degenerate(double tol = kGeoTolerance) const;
  /// Vertices placed at (0,0), (c,0) and the upper half plane.
  std::array<Eigen::Vector2d, 3> canonical_vertices() const;

  static Triangle from_space(const MetricSpace<double>& x);
};

/// Checks positivity and the (non-strict) triangle inequality.
void validate_triangle(const Triangle& tri, double tol = kGeoTolerance);

/// Union of rays from a common origin o.
struct RaySpace {
  std::vector<double> angles;
  bool include_origin = true;

  std::size_t ray_count() const { return angles.size(); }
  Eigen::Vector2d direction(std::size_t ray) const;
  /// Smaller angle between two rays, in [0, pi].
  double angle_between(std::size_t r1, std::size_t r2) const;

  /// Three rays at mutual angle 2pi/3, origin included.
  static RaySpace tripod();
  /// Two rays at angle alpha, origin excluded.
  static RaySpace two_rays(double alpha);
};

struct RayPoint {
  std::size_t ray = 0;
  double t = 0;
};

Eigen::Vector2d planar(const RaySpace& rays, const RayPoint& p);

using TripleEmbedding = std::array<RayPoint, 3>;

/// Largest pairwise-distance error of an embedding relative to the sides,
/// divided by max(1, side).
double embedding_error(const Triangle& tri, const RaySpace& rays, const TripleEmbedding& e);

struct FermatPoint {
  enum class Kind { Interior, AtVertex };
  Kind kind = Kind::Interior;
  std::array<double, 3> distances{};  ///< to vertices 0, 1, 2
  std::size_t vertex = 0;             ///< meaningful for AtVertex
  double total_cost = 0;
  Eigen::Vector2d location = Eigen::Vector2d::Zero();  ///< in canonical_vertices() coordinates
};

/// Point minimizing the sum of distances to the vertices. Interior when all
/// angles are below 2pi/3 (distances r_i solve r_i^2 + r_j^2 + r_i r_j =
/// side_ij^2), otherwise the vertex with the angle >= 2pi/3.
FermatPoint fermat_torricelli(const Triangle& tri, double tol = kGeoTolerance);

/// Embedding of any 3-point space into the tripod.
TripleEmbedding embed_triple_tripod(const Triangle& tri, double tol = kGeoTolerance);

/// Embedding into X_alpha (two rays at angle alpha, origin excluded), or none.
std::optional<TripleEmbedding> embed_triple_two_rays(const Triangle& tri, double alpha, double tol = kGeoTolerance);

struct WitnessTriangle {
  Triangle triangle;
  std::array<RayPoint, 3> points;  ///< the witness as placed in the ray space
  double base_angle = 0;           ///< measured from the placed points (two-ray witness only)
};

/// Equilateral triangle through e and the points at the same distance from o
/// on the other two tripod rays.
WitnessTriangle witness_triangle_tripod(const RayPoint& e);

/// For z on one ray of X_alpha: z1 on the other ray with |oz1| = |oz|, z2 on
/// that ray beyond z1 with |z1z2| = |zz1|. Isosceles with apex z1 and base
/// angles pi/4 - alpha/4. Requires alpha in [pi/5, pi/3).
WitnessTriangle witness_triangle_two_rays(const RayPoint& z, double alpha);

/// Same construction without the range check on alpha.
WitnessTriangle two_ray_isosceles_triangle(const RayPoint& z, double alpha);

struct SolverOptions {
  double tol = kSolverTolerance;
  int multistarts = kMultistarts;
};

/// Enumerates every vertex-to-ray assignment and solves the three distance
/// equations per assignment by multistart damped Newton. Solutions are
/// verified, deduplicated within tol, and dropped when they meet a forbidden
/// point or the excluded origin. An empty result is a claim at this budget,
/// not a proof.
std::vector<TripleEmbedding> solve_constrained_embedding(const Triangle& tri, const RaySpace& rays,
                                                         const std::vector<RayPoint>& forbidden,
                                                         const SolverOptions& opts = {});

/// Image points of an embedding as a set comparable within tol.
bool same_image_set(const RaySpace& rays, const TripleEmbedding& e, const std::array<RayPoint, 3>& points,
                    double tol);

}  // namespace msu::rays
