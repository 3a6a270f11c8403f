#pragma once

#include "msu/betweenness.hpp"
#include "msu/classify.hpp"
#include "msu/embedding.hpp"
#include "msu/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace msu {

struct TaggedPoint {
  std::size_t part = 0;
  std::size_t point = 0;

  friend bool operator==(const TaggedPoint&, const TaggedPoint&) = default;
  friend auto operator<=>(const TaggedPoint&, const TaggedPoint&) = default;
};

struct Provenance {
  std::string builder;
  std::vector<std::pair<std::string, std::string>> params;
};

/// A metric space together with the partition into the parts it was built from.
/// parts[p][q] is the index in `space` of point q of part p.
template <typename Scalar>
struct UnionSpace {
  MetricSpace<Scalar> space;
  std::vector<std::vector<std::size_t>> parts;
  Provenance provenance;

  std::size_t index_of(const TaggedPoint& t) const {
    if (t.part >= parts.size() || t.point >= parts[t.part].size())
      fail(ErrorCode::IndexOutOfRange, "tagged point out of range");
    return parts[t.part][t.point];
  }

  MetricSpace<Scalar> part_space(std::size_t p) const { return space.subspace(parts.at(p)); }
};

namespace detail {

inline std::string tagged_label(std::size_t part, const std::string& label) {
  return std::to_string(part) + "." + label;
}

template <typename Scalar>
std::string param(const Scalar& v) {
  return to_string(v);
}

/// Lays the parts out consecutively; cross entries are filled by `cross(part_a,
/// point_a, part_b, point_b)`.
template <typename Scalar, typename Cross>
UnionSpace<Scalar> assemble(const std::vector<MetricSpace<Scalar>>& parts, Cross&& cross, Provenance provenance,
                            double tol) {
  UnionSpace<Scalar> u;
  std::vector<TaggedPoint> owner;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    u.parts.emplace_back();
    for (std::size_t q = 0; q < parts[p].size(); ++q) {
      u.parts.back().push_back(owner.size());
      owner.push_back({p, q});
      labels.push_back(tagged_label(p, parts[p].label(q)));
    }
  }
  const auto n = Eigen::Index(owner.size());
  DistanceMatrix<Scalar> d = DistanceMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto& a = owner[std::size_t(i)];
      const auto& b = owner[std::size_t(j)];
      d(i, j) = a.part == b.part ? parts[a.part](a.point, b.point) : Scalar(cross(a.part, a.point, b.part, b.point));
      d(j, i) = d(i, j);
    }
  auto checked = validate_space<Scalar>(d, labels, tol);
  if (!checked.valid()) fail(ErrorCode::Internal, "union builder " + provenance.builder + " produced a non-metric");
  u.space = std::move(*checked.space);
  u.provenance = std::move(provenance);
  return u;
}

}  // namespace detail

/// Glues two ultrametric spaces so that d(x0, y0) = r0 and the result is an
/// ultrametric: d(x, y) = max(d_X(x, x0), r0, d_Y(y0, y)) across the parts.
template <typename Scalar>
UnionSpace<Scalar> glue_ultrametric_pair(const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y, std::size_t x0,
                                         std::size_t y0, const Scalar& r0, double tol = kDefaultTolerance) {
  if (!is_ultrametric(x, tol) || !is_ultrametric(y, tol)) fail(ErrorCode::NotUltrametric, "input is not ultrametric");
  if (x0 >= x.size() || y0 >= y.size()) fail(ErrorCode::IndexOutOfRange, "gluing point out of range");
  if (!(r0 > Scalar(0))) fail(ErrorCode::InvalidInput, "r0 must be positive");
  const std::vector<MetricSpace<Scalar>> parts{x, y};
  auto cross = [&](std::size_t pa, std::size_t a, std::size_t, std::size_t b) -> Scalar {
    // pa == 0 always since part 0 precedes part 1.
    (void)pa;
    return std::max({x(a, x0), r0, y(y0, b)});
  };
  auto u = detail::assemble(parts, cross,
                            {"glue_ultrametric_pair",
                             {{"x0", std::to_string(x0)}, {"y0", std::to_string(y0)}, {"r0", detail::param(r0)}}},
                            tol);
  if (!is_ultrametric(u.space, tol)) fail(ErrorCode::ResultNotUltrametric, "glued space is not ultrametric");
  return u;
}

/// Joins two spaces with every cross distance equal to r0; a metric whenever
/// r0 >= max(diam X1, diam X2).
template <typename Scalar>
UnionSpace<Scalar> glue_constant(const MetricSpace<Scalar>& x1, const MetricSpace<Scalar>& x2, const Scalar& r0,
                                 double tol = kDefaultTolerance) {
  if (x1.empty() || x2.empty()) fail(ErrorCode::InvalidInput, "glued spaces must be nonempty");
  if (!(r0 > Scalar(0))) fail(ErrorCode::InvalidInput, "r0 must be positive");
  if (approx_lt<Scalar>(r0, std::max(x1.diameter(), x2.diameter()), tol))
    fail(ErrorCode::R0TooSmall, "r0 is smaller than the larger diameter");
  const std::vector<MetricSpace<Scalar>> parts{x1, x2};
  return detail::assemble(
      parts, [&](std::size_t, std::size_t, std::size_t, std::size_t) { return r0; },
      {"glue_constant", {{"r0", detail::param(r0)}}}, tol);
}

/// Smallest eps for which the space is eps-connected: the bottleneck edge of a
/// minimum spanning tree (0 for fewer than two points).
template <typename Scalar>
Scalar connectivity_threshold(const MetricSpace<Scalar>& x) {
  const std::size_t n = x.size();
  if (n < 2) return Scalar(0);
  std::vector<char> in(n, 0);
  std::vector<Scalar> best(n);
  in[0] = 1;
  for (std::size_t v = 1; v < n; ++v) best[v] = x(0, v);
  Scalar bottleneck(0);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && (pick == n || best[v] < best[pick])) pick = v;
    in[pick] = 1;
    bottleneck = std::max(bottleneck, best[pick]);
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && x(pick, v) < best[v]) best[v] = x(pick, v);
  }
  return bottleneck;
}

/// Any two points are joined by a chain with consecutive gaps at most eps.
template <typename Scalar>
bool is_epsilon_connected(const MetricSpace<Scalar>& x, const Scalar& eps, double tol = kDefaultTolerance) {
  if (!(eps > Scalar(0))) fail(ErrorCode::InvalidInput, "epsilon must be positive");
  return approx_le<Scalar>(connectivity_threshold(x), eps, tol);
}

/// Disjoint union of eps-connected parts: each part is a complete graph with
/// its own distances, the anchors form a complete graph with weight eps1, and
/// the result is the shortest-path metric of that graph.
template <typename Scalar>
UnionSpace<Scalar> union_epsilon_connected(const std::vector<MetricSpace<Scalar>>& parts,
                                           const std::vector<std::size_t>& anchors, const Scalar& eps1,
                                           double tol = kDefaultTolerance) {
  if (parts.empty()) fail(ErrorCode::InvalidInput, "no parts given");
  if (anchors.size() != parts.size()) fail(ErrorCode::InvalidInput, "need one anchor per part");
  Scalar eps(0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) fail(ErrorCode::InvalidInput, "parts must be nonempty");
    if (anchors[p] >= parts[p].size()) fail(ErrorCode::IndexOutOfRange, "anchor out of range");
    eps = std::max(eps, connectivity_threshold(parts[p]));
  }
  if (!approx_lt<Scalar>(eps, eps1, tol))
    fail(ErrorCode::EpsilonTooSmall, "eps1 = " + to_string(eps1) + " does not exceed the connectivity threshold " +
                                         to_string(eps));

  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (const auto& part : parts) {
    offset.push_back(n);
    n += part.size();
  }
  WeightedGraph<Scalar> g(n);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t a = 0; a < parts[p].size(); ++a)
      for (std::size_t b = a + 1; b < parts[p].size(); ++b) g.add_edge(offset[p] + a, offset[p] + b, parts[p](a, b));
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q) g.add_edge(offset[p] + anchors[p], offset[q] + anchors[q], eps1);

  const auto d = shortest_path_pseudometric(g);
  std::string anchor_list;
  for (auto a : anchors) anchor_list += (anchor_list.empty() ? "" : ",") + std::to_string(a);
  auto u = detail::assemble(
      parts,
      [&](std::size_t pa, std::size_t a, std::size_t pb, std::size_t b) {
        return d(Eigen::Index(offset[pa] + a), Eigen::Index(offset[pb] + b));
      },
      {"union_epsilon_connected", {{"eps1", detail::param(eps1)}, {"anchors", anchor_list}}}, tol);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t a = 0; a < parts[p].size(); ++a)
      for (std::size_t b = 0; b < parts[p].size(); ++b)
        if (!approx_eq<Scalar>(d(Eigen::Index(offset[p] + a), Eigen::Index(offset[p] + b)), parts[p](a, b), tol))
          fail(ErrorCode::Internal, "metrized union does not preserve part " + std::to_string(p));
  return u;
}

/// Two-point parts Y_t, one per t in `distances`; points of distinct parts Y_s,
/// Y_t are at distance p_n where max(s, t) lies in (p_{n-1}, p_n).
template <typename Scalar>
UnionSpace<Scalar> union_ultrametric_family(const std::vector<Scalar>& distances, const std::vector<Scalar>& separators,
                                            double tol = kDefaultTolerance) {
  if (distances.empty()) fail(ErrorCode::InvalidInput, "no distances given");
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (!(distances[i] > Scalar(0))) fail(ErrorCode::InvalidInput, "distances must be positive");
    if (i > 0 && !(distances[i - 1] < distances[i])) fail(ErrorCode::InvalidInput, "distances must be strictly ascending");
  }
  if (separators.size() < 2 || separators.front() != Scalar(0))
    fail(ErrorCode::BadSeparators, "separators must start at 0 and have at least two entries");
  for (std::size_t i = 1; i < separators.size(); ++i)
    if (!(separators[i - 1] < separators[i])) fail(ErrorCode::BadSeparators, "separators must be strictly ascending");

  // interval[i] = n such that distances[i] lies in (p_{n-1}, p_n).
  std::vector<std::size_t> interval;
  for (const auto& t : distances) {
    auto it = std::lower_bound(separators.begin(), separators.end(), t);
    if (it == separators.end())
      fail(ErrorCode::BadSeparators, "distance " + to_string(t) + " exceeds the last separator");
    if (*it == t) fail(ErrorCode::BadSeparators, "distance " + to_string(t) + " equals a separator");
    interval.push_back(std::size_t(it - separators.begin()));
  }

  std::vector<MetricSpace<Scalar>> parts;
  for (const auto& t : distances) {
    DistanceMatrix<Scalar> d(2, 2);
    d << Scalar(0), t, t, Scalar(0);
    parts.emplace_back(std::move(d), std::vector<std::string>{"a", "b"}, tol);
  }
  std::string t_list, p_list;
  for (const auto& t : distances) t_list += (t_list.empty() ? "" : ",") + to_string(t);
  for (const auto& p : separators) p_list += (p_list.empty() ? "" : ",") + to_string(p);
  auto u = detail::assemble(
      parts,
      [&](std::size_t pa, std::size_t, std::size_t pb, std::size_t) {
        return separators[std::max(interval[pa], interval[pb])];
      },
      {"union_ultrametric_family", {{"distances", t_list}, {"separators", p_list}}}, tol);
  if (!is_ultrametric(u.space, tol)) fail(ErrorCode::ResultNotUltrametric, "ultrametric family union is not ultrametric");
  return u;
}

/// Disjoint union of pairwise non-isometric pseudo-linear quadruples with
/// d(y, z) = max(diam Y, diam Z) across parts.
template <typename Scalar>
UnionSpace<Scalar> union_pl_quadruples(const std::vector<MetricSpace<Scalar>>& quads, double tol = kDefaultTolerance) {
  if (quads.empty()) fail(ErrorCode::InvalidInput, "no quadruples given");
  for (std::size_t i = 0; i < quads.size(); ++i) {
    if (quads[i].size() != 4 || !is_pseudolinear(quads[i], tol))
      fail(ErrorCode::NotPseudolinear, "part " + std::to_string(i) + " is not a pseudo-linear quadruple");
    for (std::size_t j = 0; j < i; ++j)
      if (is_isometric(quads[j], quads[i], tol))
        fail(ErrorCode::IsometricDuplicate,
             "parts " + std::to_string(j) + " and " + std::to_string(i) + " are isometric");
  }
  std::vector<Scalar> diam;
  for (const auto& q : quads) diam.push_back(q.diameter());
  return detail::assemble(
      quads, [&](std::size_t pa, std::size_t, std::size_t pb, std::size_t) { return std::max(diam[pa], diam[pb]); },
      {"union_pl_quadruples", {{"count", std::to_string(quads.size())}}}, tol);
}

// ---------------------------------------------------------------------------
// The bridged space M = X u R built from a PL union X.

template <typename Scalar>
struct BridgeParams {
  Scalar p{};       ///< bridge foot on the line
  TaggedPoint b{};  ///< bridge end in the PL union
  Scalar r{};       ///< bridge length, > 0
};

template <typename Scalar>
struct RealPoint {
  Scalar t{};
  friend bool operator==(const RealPoint&, const RealPoint&) = default;
};

template <typename Scalar>
using MPoint = std::variant<RealPoint<Scalar>, TaggedPoint>;

template <typename Scalar>
void check_bridge(const UnionSpace<Scalar>& quads_union, const BridgeParams<Scalar>& bridge) {
  if (!(bridge.r > Scalar(0))) fail(ErrorCode::InvalidInput, "bridge length r must be positive");
  (void)quads_union.index_of(bridge.b);
}

/// |x - y| on the line, the union metric inside X, and |x - p| + r + d_X(b, y)
/// between a real x and y in X.
template <typename Scalar>
Scalar m_distance(const MPoint<Scalar>& a, const MPoint<Scalar>& b, const UnionSpace<Scalar>& quads_union,
                  const BridgeParams<Scalar>& bridge) {
  check_bridge(quads_union, bridge);
  const auto* ra = std::get_if<RealPoint<Scalar>>(&a);
  const auto* rb = std::get_if<RealPoint<Scalar>>(&b);
  if (ra && rb) return abs_diff(ra->t, rb->t);
  if (!ra && !rb)
    return quads_union.space(quads_union.index_of(std::get<TaggedPoint>(a)),
                             quads_union.index_of(std::get<TaggedPoint>(b)));
  const Scalar& x = ra ? ra->t : rb->t;
  const TaggedPoint& y = ra ? std::get<TaggedPoint>(b) : std::get<TaggedPoint>(a);
  return abs_diff(x, bridge.p) + bridge.r + quads_union.space(quads_union.index_of(bridge.b), quads_union.index_of(y));
}

template <typename Scalar>
std::string m_point_label(const MPoint<Scalar>& pt) {
  if (const auto* r = std::get_if<RealPoint<Scalar>>(&pt)) return "R:" + to_string(r->t);
  const auto& t = std::get<TaggedPoint>(pt);
  return "Q" + std::to_string(t.part) + "." + std::to_string(t.point);
}

/// Finite sample of M as a validated metric space.
template <typename Scalar>
MetricSpace<Scalar> sample_m_space(const std::vector<MPoint<Scalar>>& points, const UnionSpace<Scalar>& quads_union,
                                   const BridgeParams<Scalar>& bridge, double tol = kDefaultTolerance) {
  check_bridge(quads_union, bridge);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::holds_alternative<TaggedPoint>(points[i])) (void)quads_union.index_of(std::get<TaggedPoint>(points[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) fail(ErrorCode::DuplicatePoint, "sample contains a point twice: " + m_point_label(points[i]));
    labels.push_back(m_point_label(points[i]));
  }
  const auto n = Eigen::Index(points.size());
  DistanceMatrix<Scalar> d = DistanceMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      d(i, j) = d(j, i) = m_distance(points[std::size_t(i)], points[std::size_t(j)], quads_union, bridge);
  auto checked = validate_space<Scalar>(d, labels, tol);
  if (!checked.valid()) fail(ErrorCode::Internal, "sampled bridged space violates the metric axioms");
  return std::move(*checked.space);
}

// ---------------------------------------------------------------------------

struct MinimalUnionReport {
  std::vector<bool> part_not_shifted;                               ///< condition (i)
  std::vector<std::pair<std::size_t, std::size_t>> comparable_pairs;  ///< failures of (ii)
  std::vector<std::size_t> copy_counts;                             ///< (iii): must all be 1
  bool parts_preserved = true;

  bool passes() const {
    return parts_preserved && comparable_pairs.empty() &&
           std::all_of(part_not_shifted.begin(), part_not_shifted.end(), [](bool b) { return b; }) &&
           std::all_of(copy_counts.begin(), copy_counts.end(), [](std::size_t c) { return c == 1; });
  }
};

/// Checks the three conditions under which a disjoint union is minimal
/// universal for its parts: each part not shifted, parts pairwise
/// incomparable, and each part has exactly one isometric copy in the union.
template <typename Scalar>
MinimalUnionReport verify_minimal_union(const UnionSpace<Scalar>& u, const EmbeddingOptions& opts = {}) {
  MinimalUnionReport report;
  std::vector<MetricSpace<Scalar>> parts;
  for (std::size_t p = 0; p < u.parts.size(); ++p) parts.push_back(u.part_space(p));
  for (const auto& part : parts) report.part_not_shifted.push_back(is_not_shifted(part, opts).not_shifted);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (compare(parts[a], parts[b], opts.tol) != Comparability::Incomparable) report.comparable_pairs.emplace_back(a, b);
  for (const auto& part : parts) report.copy_counts.push_back(embedding_images(part, u.space, opts).size());
  // The part index lists must partition the points.
  std::vector<int> hits(u.space.size(), 0);
  for (const auto& idx : u.parts)
    for (auto i : idx) {
      if (i >= hits.size()) {
        report.parts_preserved = false;
        continue;
      }
      ++hits[i];
    }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }) ||
      std::any_of(u.parts.begin(), u.parts.end(), [](const auto& p) { return p.empty(); }))
    report.parts_preserved = false;
  return report;
}

}  // namespace msu
