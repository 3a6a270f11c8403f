#include "msu/rays.hpp"

#include "msu/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <tuple>

namespace msu::rays {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoThirdsPi = 2.0 * kPi / 3.0;

double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

bool rel_eq(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

/// The vertex with the largest angle and the other two in index order.
std::tuple<std::size_t, std::size_t, std::size_t> split_at_largest_angle(const Triangle& tri) {
  std::size_t f = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (tri.angle(i) > tri.angle(f)) f = i;
  std::size_t e = f == 0 ? 1 : 0;
  std::size_t g = 3 - f - e;
  return {f, e, g};
}

/// Coordinates on a line for a degenerate triple, vertex 0 at 0, vertex 1 at +c.
std::array<double, 3> line_coords(const Triangle& tri) {
  std::array<double, 3> x{0.0, tri.c, tri.b};
  if (std::abs(std::abs(x[2] - x[1]) - tri.a) > std::abs(std::abs(-x[2] - x[1]) - tri.a)) x[2] = -tri.b;
  return x;
}

}  // namespace

double Triangle::side(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  const std::size_t opposite = 3 - i - j;
  return opposite == 0 ? a : opposite == 1 ? b : c;
}

double Triangle::angle(std::size_t i) const {
  const double opp = side((i + 1) % 3, (i + 2) % 3);
  const double s1 = side(i, (i + 1) % 3);
  const double s2 = side(i, (i + 2) % 3);
  const double cosv = (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2);
  return std::acos(std::clamp(cosv, -1.0, 1.0));
}

bool Triangle::degenerate(double tol) const {
  const double m = std::max({a, b, c});
  return rel_eq(2.0 * m, a + b + c, tol);
}

std::array<Eigen::Vector2d, 3> Triangle::canonical_vertices() const {
  const double x = (b * b + c * c - a * a) / (2.0 * c);
  const double y = std::sqrt(std::max(0.0, b * b - x * x));
  return {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(c, 0.0), Eigen::Vector2d(x, y)};
}

Triangle Triangle::from_space(const MetricSpace<double>& x) {
  if (x.size() != 3) fail(ErrorCode::WrongCardinality, "a triangle needs exactly 3 points");
  return Triangle{x(1, 2), x(0, 2), x(0, 1)};
}

void validate_triangle(const Triangle& tri, double tol) {
  if (!(tri.a > 0) || !(tri.b > 0) || !(tri.c > 0) || !std::isfinite(tri.a + tri.b + tri.c))
    fail(ErrorCode::InvalidTriple, "triangle sides must be positive and finite");
  const double m = std::max({tri.a, tri.b, tri.c});
  if (2.0 * m > (tri.a + tri.b + tri.c) * (1.0 + tol))
    fail(ErrorCode::InvalidTriple, "triangle sides violate the triangle inequality");
}

Eigen::Vector2d RaySpace::direction(std::size_t ray) const {
  const double th = angles.at(ray);
  return {std::cos(th), std::sin(th)};
}

double RaySpace::angle_between(std::size_t r1, std::size_t r2) const {
  double d = std::fmod(std::abs(angles.at(r1) - angles.at(r2)), 2.0 * kPi);
  return d > kPi ? 2.0 * kPi - d : d;
}

RaySpace RaySpace::tripod() { return RaySpace{{0.0, kTwoThirdsPi, 2.0 * kTwoThirdsPi}, true}; }

RaySpace RaySpace::two_rays(double alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, pi)");
  return RaySpace{{0.0, alpha}, false};
}

Eigen::Vector2d planar(const RaySpace& rays, const RayPoint& p) { return p.t * rays.direction(p.ray); }

double embedding_error(const Triangle& tri, const RaySpace& rays, const TripleEmbedding& e) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const double got = (planar(rays, e[i]) - planar(rays, e[j])).norm();
      const double want = tri.side(i, j);
      worst = std::max(worst, std::abs(got - want) / std::max(1.0, want));
    }
  return worst;
}

FermatPoint fermat_torricelli(const Triangle& tri, double tol) {
  validate_triangle(tri, tol);
  if (tri.degenerate(tol)) fail(ErrorCode::DegenerateTriangle, "triangle is degenerate; the minimizer lies on a segment");
  const auto verts = tri.canonical_vertices();
  FermatPoint out;
  for (std::size_t v = 0; v < 3; ++v) {
    if (tri.angle(v) >= kTwoThirdsPi - tol) {
      out.kind = FermatPoint::Kind::AtVertex;
      out.vertex = v;
      for (std::size_t i = 0; i < 3; ++i) out.distances[i] = tri.side(v, i);
      out.total_cost = out.distances[0] + out.distances[1] + out.distances[2];
      out.location = verts[v];
      return out;
    }
  }
  const double a2 = tri.a * tri.a, b2 = tri.b * tri.b, c2 = tri.c * tri.c;
  // Heron's formula in the numerically stable ordering.
  std::array<double, 3> s{tri.a, tri.b, tri.c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double area = 0.25 * std::sqrt((s[0] + (s[1] + s[2])) * (s[2] - (s[0] - s[1])) * (s[2] + (s[0] - s[1])) *
                                       (s[0] + (s[1] - s[2])));
  const double pair_sum = 4.0 * area / std::sqrt(3.0);  // r0 r1 + r1 r2 + r2 r0
  const double total = std::sqrt(0.5 * (a2 + b2 + c2) + 2.0 * std::sqrt(3.0) * area);
  const std::array<double, 3> opposite2{a2, b2, c2};
  out.kind = FermatPoint::Kind::Interior;
  for (std::size_t i = 0; i < 3; ++i) out.distances[i] = (total * total - pair_sum - opposite2[i]) / total;
  out.total_cost = total;
  const double r0 = out.distances[0], r1 = out.distances[1];
  const double x = (r0 * r0 - r1 * r1 + c2) / (2.0 * tri.c);
  out.location = Eigen::Vector2d(x, std::sqrt(std::max(0.0, r0 * r0 - x * x)));
  return out;
}

TripleEmbedding embed_triple_tripod(const Triangle& tri, double tol) {
  validate_triangle(tri, tol);
  TripleEmbedding out;
  if (tri.degenerate(tol)) {
    auto x = line_coords(tri);
    const double lo = *std::min_element(x.begin(), x.end());
    for (std::size_t i = 0; i < 3; ++i) out[i] = {0, x[i] - lo};
    return out;
  }
  const auto [f, e, g] = split_at_largest_angle(tri);
  const double phi = tri.angle(f);
  if (phi >= kTwoThirdsPi - tol) {
    // f and g on ray 0 (g farther out), e on ray 1; slide along ray 0 until e
    // lands on ray 1.
    const double m = tri.side(f, e);
    const double u = std::max(0.0, -m * (2.0 / std::sqrt(3.0)) * std::sin(phi + kPi / 3.0));
    out[f] = {0, u};
    out[g] = {0, u + tri.side(f, g)};
    out[e] = {1, m * std::sin(phi) / (std::sqrt(3.0) / 2.0)};
    return out;
  }
  const auto ft = fermat_torricelli(tri, tol);
  for (std::size_t i = 0; i < 3; ++i) out[i] = {i, ft.distances[i]};
  return out;
}

std::optional<TripleEmbedding> embed_triple_two_rays(const Triangle& tri, double alpha, double tol) {
  validate_triangle(tri, tol);
  const RaySpace rays = RaySpace::two_rays(alpha);
  TripleEmbedding out;
  if (tri.degenerate(tol)) {
    auto x = line_coords(tri);
    const double shift = std::min({tri.a, tri.b, tri.c}) / 2.0 - *std::min_element(x.begin(), x.end());
    for (std::size_t i = 0; i < 3; ++i) out[i] = {0, x[i] + shift};
    return out;
  }
  const auto [f, e, g] = split_at_largest_angle(tri);
  const double phi = tri.angle(f);
  if (phi > alpha + tol) {
    // f, g on ray 0 with g farther out; e on ray 1 after sliding along ray 0.
    const double m = tri.side(f, e);
    const double u = m * std::sin(phi - alpha) / std::sin(alpha);
    if (u > tol) {
      out[f] = {0, u};
      out[g] = {0, u + tri.side(f, g)};
      out[e] = {1, m * std::sin(phi) / std::sin(alpha)};
      if (embedding_error(tri, rays, out) <= std::max(tol, 1e-9) * 10) return out;
    }
  }
  auto solutions = solve_constrained_embedding(tri, rays, {});
  if (solutions.empty()) return std::nullopt;
  return solutions.front();
}

WitnessTriangle witness_triangle_tripod(const RayPoint& e) {
  if (e.ray >= 3) fail(ErrorCode::IndexOutOfRange, "tripod has rays 0, 1, 2");
  if (!(e.t > 0)) fail(ErrorCode::OriginNotAllowed, "the witness point must differ from the origin");
  const double side = e.t * std::sqrt(3.0);
  WitnessTriangle w;
  w.triangle = {side, side, side};
  w.points = {e, RayPoint{(e.ray + 1) % 3, e.t}, RayPoint{(e.ray + 2) % 3, e.t}};
  return w;
}

WitnessTriangle two_ray_isosceles_triangle(const RayPoint& z, double alpha) {
  if (z.ray >= 2) fail(ErrorCode::IndexOutOfRange, "two-ray space has rays 0 and 1");
  if (!(z.t > 0)) fail(ErrorCode::OriginNotAllowed, "the origin is not part of the two-ray space");
  const RaySpace rays = RaySpace::two_rays(alpha);
  const std::size_t other = 1 - z.ray;
  const double leg = 2.0 * z.t * std::sin(alpha / 2.0);
  WitnessTriangle w;
  w.points = {z, RayPoint{other, z.t}, RayPoint{other, z.t + leg}};
  const auto p0 = planar(rays, w.points[0]), p1 = planar(rays, w.points[1]), p2 = planar(rays, w.points[2]);
  w.triangle = {(p1 - p2).norm(), (p0 - p2).norm(), (p0 - p1).norm()};
  w.base_angle = w.triangle.angle(0);
  return w;
}

WitnessTriangle witness_triangle_two_rays(const RayPoint& z, double alpha) {
  constexpr double slack = 1e-12;
  if (!(alpha >= kPi / 5.0 - slack && alpha < kPi / 3.0))
    fail(ErrorCode::AlphaOutOfRange, "the two-ray witness needs alpha in [pi/5, pi/3)");
  return two_ray_isosceles_triangle(z, alpha);
}

std::vector<TripleEmbedding> solve_constrained_embedding(const Triangle& tri, const RaySpace& rays,
                                                         const std::vector<RayPoint>& forbidden,
                                                         const SolverOptions& opts) {
  validate_triangle(tri, kGeoTolerance);
  if (rays.ray_count() == 0) return {};
  const double scale = std::max({tri.a, tri.b, tri.c});
  const double tol = opts.tol;

  double min_gap = kPi / 2.0;
  for (std::size_t i = 0; i < rays.ray_count(); ++i)
    for (std::size_t j = i + 1; j < rays.ray_count(); ++j) min_gap = std::min(min_gap, rays.angle_between(i, j));
  const double box = scale * (1.0 + 1.0 / std::sin(std::max(min_gap, 1e-3)));

  std::vector<Eigen::Vector2d> forbidden_pts;
  for (const auto& p : forbidden) forbidden_pts.push_back(planar(rays, p));

  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::vector<TripleEmbedding> out;
  const std::size_t k = rays.ray_count();

  for (std::size_t code = 0; code < k * k * k; ++code) {
    const std::array<std::size_t, 3> ray{code / (k * k), (code / k) % k, code % k};
    std::array<double, 3> cosg{}, d2{};
    for (std::size_t p = 0; p < 3; ++p) {
      const auto [i, j] = pairs[p];
      cosg[p] = std::cos(rays.angle_between(ray[i], ray[j]));
      const double d = tri.side(i, j) / scale;
      d2[p] = d * d;
    }
    auto residual = [&](const Eigen::Vector3d& s) {
      Eigen::Vector3d r;
      for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pairs[p];
        r[Eigen::Index(p)] = s[Eigen::Index(i)] * s[Eigen::Index(i)] + s[Eigen::Index(j)] * s[Eigen::Index(j)] -
                             2.0 * cosg[p] * s[Eigen::Index(i)] * s[Eigen::Index(j)] - d2[p];
      }
      return r;
    };
    auto jacobian = [&](const Eigen::Vector3d& s) {
      Eigen::Matrix3d jm = Eigen::Matrix3d::Zero();
      for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pairs[p];
        const auto ii = Eigen::Index(i), jj = Eigen::Index(j), pp = Eigen::Index(p);
        jm(pp, ii) = 2.0 * s[ii] - 2.0 * cosg[p] * s[jj];
        jm(pp, jj) = 2.0 * s[jj] - 2.0 * cosg[p] * s[ii];
      }
      return jm;
    };

    std::vector<TripleEmbedding> found;
    for (int start = 1; start <= opts.multistarts; ++start) {
      const double ub = box / scale;
      Eigen::Vector3d s(halton(start, 2) * ub, halton(start, 3) * ub, halton(start, 5) * ub);
      Eigen::Vector3d r = residual(s);
      for (int iter = 0; iter < 100 && r.norm() > 1e-15; ++iter) {
        const Eigen::Vector3d step = jacobian(s).completeOrthogonalDecomposition().solve(-r);
        double lambda = 1.0;
        bool improved = false;
        while (lambda > 1e-8) {
          const Eigen::Vector3d cand = s + lambda * step;
          const Eigen::Vector3d rc = residual(cand);
          if (rc.norm() < r.norm()) {
            s = cand;
            r = rc;
            improved = true;
            break;
          }
          lambda *= 0.5;
        }
        if (!improved) break;
      }

      TripleEmbedding emb;
      bool ok = true;
      for (std::size_t i = 0; i < 3 && ok; ++i) {
        double t = s[Eigen::Index(i)] * scale;
        if (t < -tol) ok = false;
        t = std::max(0.0, t);
        if (t <= tol) {
          if (!rays.include_origin) ok = false;
          emb[i] = {0, 0.0};
        } else {
          emb[i] = {ray[i], t};
        }
      }
      if (!ok || embedding_error(tri, rays, emb) > tol) continue;
      bool blocked = false;
      for (const auto& pt : emb)
        for (const auto& fp : forbidden_pts)
          if ((planar(rays, pt) - fp).norm() < tol) blocked = true;
      if (blocked) continue;
      const bool dup = std::any_of(found.begin(), found.end(), [&](const TripleEmbedding& other) {
        for (std::size_t i = 0; i < 3; ++i)
          if ((planar(rays, other[i]) - planar(rays, emb[i])).lpNorm<Eigen::Infinity>() > tol) return false;
        return true;
      }) || std::any_of(out.begin(), out.end(), [&](const TripleEmbedding& other) {
        for (std::size_t i = 0; i < 3; ++i)
          if ((planar(rays, other[i]) - planar(rays, emb[i])).lpNorm<Eigen::Infinity>() > tol) return false;
        return true;
      });
      if (!dup) found.push_back(emb);
    }
    std::sort(found.begin(), found.end(), [](const TripleEmbedding& x, const TripleEmbedding& y) {
      return std::tie(x[0].t, x[1].t, x[2].t) < std::tie(y[0].t, y[1].t, y[2].t);
    });
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

bool same_image_set(const RaySpace& rays, const TripleEmbedding& e, const std::array<RayPoint, 3>& points,
                    double tol) {
  auto covered = [&](const std::array<RayPoint, 3>& from, const std::array<RayPoint, 3>& into) {
    for (const auto& p : from) {
      const auto pp = planar(rays, p);
      if (std::none_of(into.begin(), into.end(), [&](const RayPoint& q) { return (planar(rays, q) - pp).norm() < tol; }))
        return false;
    }
    return true;
  };
  return covered(e, points) && covered(points, e);
}

}  // namespace msu::rays
