// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "support/oracles.hpp"

#include "msu/betweenness.hpp"
#include "msu/classes.hpp"
#include "msu/graph.hpp"
#include "msu/line_spaces.hpp"
#include "msu/rays.hpp"
#include "msu/unions.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <string>

using msu::MetricSpace;
using msu::Rational;
using oracle::Engine;

namespace {

constexpr double kPi = std::numbers::pi;

/// A failure message, or nullopt on success.
using Outcome = std::optional<std::string>;

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

using DistanceMatrix = msu::DistanceMatrix<Rational>;

std::string str(const Rational& r) { return msu::to_string(r); }

// 1 ------------------------------------------------------------------------

Outcome validator_detects_injected_violations() {
  Engine rng(101);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = std::size_t(oracle::uniform_int(rng, 5, 8));
    DistanceMatrix d = oracle::random_band_space(rng, n, 8).matrix();
    if (!msu::validate_space<Rational>(d).valid()) return "base matrix rejected at trial " + std::to_string(trial);
    const auto i = Eigen::Index(oracle::uniform_int(rng, 0, int(n) - 1));
    auto j = Eigen::Index(oracle::uniform_int(rng, 0, int(n) - 2));
    if (j >= i) ++j;
    msu::Axiom expected{};
    switch (trial % 3) {
      case 0:
        d(i, j) += Rational(oracle::uniform_int(rng, 1, 8)) / 16;
        expected = msu::Axiom::Asymmetry;
        break;
      case 1:
        d(i, i) = Rational(oracle::uniform_int(rng, 1, 8)) / 16;
        expected = msu::Axiom::NonzeroDiagonal;
        break;
      default: {
        auto k = Eigen::Index(oracle::uniform_int(rng, 0, int(n) - 3));
        for (Eigen::Index skip : {std::min(i, j), std::max(i, j)})
          if (k >= skip) ++k;
        d(i, k) = d(k, i) = d(i, j) + d(j, k) + Rational(1, 16);
        expected = msu::Axiom::TriangleViolation;
      }
    }
    if (oracle::metric_axioms(d)) return "oracle accepted an injected violation";
    auto res = msu::validate_space<Rational>(d);
    if (res.valid()) return "violation missed at trial " + std::to_string(trial);
    bool named = false;
    for (const auto& v : res.violations) named = named || v.axiom == expected;
    if (!named) return "wrong violation kind at trial " + std::to_string(trial);
  }
  return {};
}

// 2 ------------------------------------------------------------------------

MetricSpace<Rational> random_small_space(Engine& rng, std::size_t n) {
  switch (oracle::uniform_int(rng, 0, 3)) {
    case 0: return oracle::random_band_space(rng, n, 1);  // entries 1, 2: many symmetries
    case 1: return oracle::random_band_space(rng, n, 4);
    case 2: return oracle::random_ultrametric(rng, n, 3, 1);
    default: return oracle::random_line_space(rng, n, 4, 1);
  }
}

Outcome finite_spaces_are_not_shifted() {
  Engine rng(202);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_small_space(rng, std::size_t(oracle::uniform_int(rng, 1, 6)));
    const auto report = msu::is_not_shifted(x);
    if (!report.not_shifted) return "shifted finite space at trial " + std::to_string(trial);
    const auto expected = oracle::all_embeddings(x, x);
    if (report.isometries.size() != expected.size())
      return "self-embedding count " + std::to_string(report.isometries.size()) + " != oracle " +
             std::to_string(expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (report.isometries[k].image != expected[k] || !msu::is_bijection(report.isometries[k], x.size()))
        return "self-embedding mismatch at trial " + std::to_string(trial);
  }
  return {};
}

// 3 ------------------------------------------------------------------------

Outcome cayley_menger_sign() {
  Engine rng(303);
  int degenerate = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int q = oracle::uniform_int(rng, 1, 12);
    const Rational a = oracle::random_rational(rng, 0, 10, q) + Rational(1, q);
    const Rational b = oracle::random_rational(rng, 0, 10, q) + Rational(1, q);
    const Rational lo = msu::abs_diff(a, b), hi = a + b;
    Rational c;
    switch (trial % 4) {
      case 0: c = hi; break;
      case 1: c = lo > 0 ? lo : hi; break;
      default: c = lo + (hi - lo) * Rational(oracle::uniform_int(rng, 1, 99), 100);
    }
    const Rational det = msu::cayley_menger(a, b, c);
    if (det != oracle::cayley_menger_expansion(a, b, c)) return "determinant differs from the expansion";
    if (det > 0) return "positive determinant for " + str(a) + ", " + str(b) + ", " + str(c);
    const Rational mx = std::max({a, b, c});
    const bool collinear = 2 * mx == a + b + c;
    degenerate += collinear;
    if ((det == 0) != collinear) return "zero test disagrees for " + str(a) + ", " + str(b) + ", " + str(c);
  }
  if (degenerate == 0) return "no degenerate triples sampled";
  return {};
}

// 4 ------------------------------------------------------------------------

Outcome pl_deciders_agree() {
  Engine rng(404);
  int pl = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    MetricSpace<Rational> q;
    switch (trial % 3) {
      case 0: q = oracle::random_line_space(rng, 4, 8, 2); break;
      case 1:
        q = oracle::shuffled(rng, msu::pl_quadruple(oracle::random_rational(rng, 1, 6, 3), oracle::random_rational(rng, 1, 6, 3)));
        break;
      default: q = oracle::random_band_space(rng, 4, oracle::uniform_int(rng, 1, 4));
    }
    const bool by_definition = msu::is_pseudolinear(q);
    const bool by_labeling = msu::pl_labeling(q).has_value();
    if (by_definition != by_labeling) return "deciders disagree at trial " + std::to_string(trial);
    pl += by_definition;
    // The defining property, checked with the permutation oracle.
    bool oracle_pl = !oracle::embeds_in_line(q);
    for (std::size_t skip = 0; skip < 4 && oracle_pl; ++skip) oracle_pl = oracle::embeds_in_line(q.without_point(skip));
    if (oracle_pl != by_definition) return "oracle disagrees at trial " + std::to_string(trial);
  }
  if (pl < 3000) return "too few pseudo-linear instances: " + std::to_string(pl);
  return {};
}

// 5 ------------------------------------------------------------------------

Outcome metrizability_matches_cycles() {
  Engine rng(505);
  int rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = std::size_t(oracle::uniform_int(rng, 2, 6));
    msu::WeightedGraph<Rational> g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(std::size_t(oracle::uniform_int(rng, 0, int(v) - 1)), v, oracle::uniform_int(rng, 0, 3));
    const int extra_odds = oracle::uniform_int(rng, 0, 3);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (!g.weight(u, v) && oracle::uniform_int(rng, 0, 3) < extra_odds) g.add_edge(u, v, oracle::uniform_int(rng, 0, 3));
    const auto rep = msu::check_metrizability(g);
    if (rep.pseudometrizable != oracle::cycle_condition(g)) return "cycle oracle disagrees at trial " + std::to_string(trial);
    rejected += !rep.pseudometrizable;
    const auto fw = oracle::floyd_warshall(g);
    bool positive = true;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && *fw[u][v] == 0) positive = false;
    if (rep.metrizable != (rep.pseudometrizable && positive)) return "metrizable flag wrong at trial " + std::to_string(trial);
    if (rep.metrizable != rep.metric.has_value()) return "metric presence wrong at trial " + std::to_string(trial);
  }
  if (rejected < 200 || rejected > 1800) return "unbalanced sample: " + std::to_string(rejected) + " rejected";
  return {};
}

// 6 ------------------------------------------------------------------------

Outcome epsilon_union_is_minimal() {
  Engine rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const int count = oracle::uniform_int(rng, 2, 4);
    std::vector<MetricSpace<Rational>> parts;
    std::vector<std::size_t> anchors;
    for (int p = 0; p < count; ++p) {
      // Part p draws from [1 + p/4, 1 + p/4 + 3/16]: disjoint bands, so the
      // parts are pairwise incomparable.
      std::vector<Rational> band;
      for (int k = 0; k < 4; ++k) band.push_back(Rational(16 + 4 * p + k, 16));
      const std::size_t n = std::size_t(oracle::uniform_int(rng, 2, 4));
      parts.emplace_back(oracle::random_matrix_from(rng, n, band));
      anchors.push_back(std::size_t(oracle::uniform_int(rng, 0, int(n) - 1)));
    }
    const Rational eps1 = oracle::random_rational(rng, 3, 5, 8) + Rational(1, 8);
    const auto u = msu::union_epsilon_connected(parts, anchors, eps1);
    if (!oracle::metric_axioms(u.space.matrix())) return "union is not a metric";
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (u.part_space(p).matrix() != parts[p].matrix()) return "part " + std::to_string(p) + " altered";
      if (oracle::copy_count(parts[p], u.space) != 1) return "part " + std::to_string(p) + " has extra copies";
    }
    const auto rep = msu::verify_minimal_union(u);
    if (!rep.passes()) return "verify_minimal_union failed at trial " + std::to_string(trial);
  }
  return {};
}

// 7 ------------------------------------------------------------------------

Outcome ultrametric_builders() {
  Engine rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = oracle::random_ultrametric(rng, std::size_t(oracle::uniform_int(rng, 1, 5)), 6, 2);
    const auto y = oracle::random_ultrametric(rng, std::size_t(oracle::uniform_int(rng, 1, 5)), 6, 2);
    const std::size_t x0 = std::size_t(oracle::uniform_int(rng, 0, int(x.size()) - 1));
    const std::size_t y0 = std::size_t(oracle::uniform_int(rng, 0, int(y.size()) - 1));
    const Rational r0 = oracle::random_rational(rng, 0, 8, 2) + Rational(1, 2);
    const auto u = msu::glue_ultrametric_pair(x, y, x0, y0, r0);
    if (!oracle::strong_triangle(u.space)) return "glued space violates the strong triangle inequality";
    if (u.space(u.parts[0][x0], u.parts[1][y0]) != r0) return "d(x0, y0) != r0";
    if (u.part_space(0).matrix() != x.matrix() || u.part_space(1).matrix() != y.matrix()) return "glue altered a part";
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::set<Rational> ts;
    const int count = oracle::uniform_int(rng, 1, 6);
    while (int(ts.size()) < count) ts.insert(oracle::random_rational(rng, 1, 40, 4) + Rational(1, 8));
    const std::vector<Rational> t(ts.begin(), ts.end());
    // Separators on the quarter grid never meet t, which sits on odd eighths.
    std::set<Rational> ps{Rational(0), Rational(41)};
    const int cuts = oracle::uniform_int(rng, 0, 5);
    for (int k = 0; k < cuts; ++k) ps.insert(oracle::random_rational(rng, 1, 40, 4));
    const std::vector<Rational> p(ps.begin(), ps.end());
    const auto u = msu::union_ultrametric_family(t, p);
    if (!oracle::strong_triangle(u.space)) return "family union violates the strong triangle inequality";
    for (std::size_t k = 0; k < t.size(); ++k) {
      int pairs = 0;
      for (std::size_t a = 0; a < u.space.size(); ++a)
        for (std::size_t b = a + 1; b < u.space.size(); ++b) pairs += u.space(a, b) == t[k];
      if (pairs != 1) return "distance " + str(t[k]) + " realized " + std::to_string(pairs) + " times";
      if (u.space(u.parts[k][0], u.parts[k][1]) != t[k]) return "part " + std::to_string(k) + " has the wrong distance";
    }
  }
  return {};
}

// 8 ------------------------------------------------------------------------

msu::rays::Triangle random_triangle(Engine& rng) {
  for (;;) {
    const double a = oracle::uniform_real(rng, 0.1, 10), b = oracle::uniform_real(rng, 0.1, 10);
    const double c = oracle::uniform_real(rng, std::abs(a - b), a + b);
    if (c >= 0.1 && c <= 10) return {a, b, c};
  }
}

Outcome tripod_embedding() {
  using namespace msu::rays;
  Engine rng(808);
  const RaySpace tripod = RaySpace::tripod();
  for (int trial = 0; trial < 1000; ++trial) {
    const Triangle tri = random_triangle(rng);
    const auto e = embed_triple_tripod(tri);
    if (embedding_error(tri, tripod, e) > 1e-9) return "embedding error " + std::to_string(embedding_error(tri, tripod, e));
    if (tri.degenerate()) continue;
    const auto ft = fermat_torricelli(tri);
    const auto v = tri.canonical_vertices();
    const double lo_x = std::min({v[0].x(), v[1].x(), v[2].x()}) - 1, hi_x = std::max({v[0].x(), v[1].x(), v[2].x()}) + 1;
    const double lo_y = std::min({v[0].y(), v[1].y(), v[2].y()}) - 1, hi_y = std::max({v[0].y(), v[1].y(), v[2].y()}) + 1;
    for (int s = 0; s < 1000; ++s) {
      const Eigen::Vector2d pt(oracle::uniform_real(rng, lo_x, hi_x), oracle::uniform_real(rng, lo_y, hi_y));
      const double cost = (pt - v[0]).norm() + (pt - v[1]).norm() + (pt - v[2]).norm();
      if (cost < ft.total_cost - 1e-9 * std::max(1.0, ft.total_cost)) return "sample point beats the Fermat point";
    }
  }
  return {};
}

// 9 ------------------------------------------------------------------------

Outcome tripod_minimality() {
  using namespace msu::rays;
  Engine rng(909);
  const RaySpace tripod = RaySpace::tripod();
  const SolverOptions opts{1e-6, 64};
  for (int trial = 0; trial < 50; ++trial) {
    const RayPoint e{std::size_t(oracle::uniform_int(rng, 0, 2)), oracle::uniform_real(rng, 0.1, 10)};
    const auto w = witness_triangle_tripod(e);
    if (!solve_constrained_embedding(w.triangle, tripod, {e}, opts).empty())
      return "embedding avoiding e = (" + std::to_string(e.ray) + ", " + std::to_string(e.t) + ")";
    const auto all = solve_constrained_embedding(w.triangle, tripod, {}, opts);
    if (all.empty()) return "no embedding found without the puncture";
    for (const auto& s : all)
      if (!same_image_set(tripod, s, w.points, 1e-6)) return "embedding with an unexpected image";
  }
  return {};
}

// 10 -----------------------------------------------------------------------

Outcome two_ray_thresholds() {
  using namespace msu::rays;
  Engine rng(1010);
  const SolverOptions opts{1e-6, 64};
  for (int trial = 0; trial < 20; ++trial) {
    const RayPoint z{std::size_t(oracle::uniform_int(rng, 0, 1)), oracle::uniform_real(rng, 0.1, 10)};
    const auto w = witness_triangle_two_rays(z, kPi / 4);
    if (!solve_constrained_embedding(w.triangle, RaySpace::two_rays(kPi / 4), {z}, opts).empty())
      return "pi/4 witness embeds avoiding z";
  }
  for (int trial = 0; trial < 20; ++trial) {
    const RayPoint z{std::size_t(oracle::uniform_int(rng, 0, 1)), oracle::uniform_real(rng, 0.1, 10)};
    const auto w = two_ray_isosceles_triangle(z, kPi / 6);
    if (solve_constrained_embedding(w.triangle, RaySpace::two_rays(kPi / 6), {z}, opts).empty())
      return "pi/6 triangle has no embedding avoiding z";
  }
  if (!solve_constrained_embedding({1, 1, 1}, RaySpace::two_rays(1.1), {}, opts).empty())
    return "equilateral embeds at alpha = 1.1";
  return {};
}

// 11 -----------------------------------------------------------------------

using F2 = msu::F2Point<Rational>;

/// Pairs of (-1, 0) u N at distance t: a negative point -s pairs with a
/// natural m when m + s = t; two naturals need an integer gap.
std::vector<std::pair<F2, F2>> realizing_pairs(const Rational& t) {
  std::vector<std::pair<F2, F2>> out;
  const int top = int(msu::floor_of(t).convert_to<double>()) + 2;
  for (int m = 1; m <= top; ++m) {
    const Rational s = t - m;
    if (s > 0 && s < 1) out.emplace_back(F2::neg(s), F2::nat(Rational(m)));
    const Rational m2 = Rational(m) + t;
    if (msu::floor_of(m2) == m2) out.emplace_back(F2::nat(Rational(m)), F2::nat(m2));
  }
  return out;
}

Outcome f2_space() {
  Engine rng(1111);
  for (int trial = 0; trial < 1000; ++trial) {
    const int q = oracle::uniform_int(rng, 2, 12);
    const Rational t = Rational(oracle::uniform_int(rng, 1, 99)) + Rational(oracle::uniform_int(rng, 1, q - 1), q);
    const auto [a, b] = msu::f2_embed_distance(t);
    if (msu::abs_diff(a.coordinate(), b.coordinate()) != t) return "pair not at distance " + str(t);
    const auto pairs = realizing_pairs(t);
    if (pairs.size() != 1 || pairs[0].first != a || pairs[0].second != b) return "distance " + str(t) + " not uniquely realized";
    for (const F2& removed : {a, b, F2::nat(Rational(oracle::uniform_int(rng, 1, 50))), F2::neg(Rational(oracle::uniform_int(rng, 1, q - 1), q))}) {
      const Rational w = msu::f2_removal_witness(removed);
      const auto wp = realizing_pairs(w);
      if (wp.empty()) return "removal witness " + str(w) + " not realized at all";
      for (const auto& [u, v] : wp)
        if (u != removed && v != removed) return "removal witness " + str(w) + " survives removal";
    }
  }
  return {};
}

// 12 -----------------------------------------------------------------------

bool oracle_embeds(const MetricSpace<Rational>& x, const MetricSpace<Rational>& y) {
  return !oracle::all_embeddings(x, y).empty();
}

bool covers(const std::vector<MetricSpace<Rational>>& fam, const std::vector<std::size_t>& reps, std::optional<std::size_t> drop = {}) {
  for (const auto& member : fam) {
    bool found = false;
    for (std::size_t k = 0; k < reps.size() && !found; ++k)
      if (k != drop) found = oracle_embeds(member, fam[reps[k]]);
    if (!found) return false;
  }
  return true;
}

/// Whether two lists of spaces agree up to isometry and order.
bool same_up_to_isometry(std::vector<MetricSpace<Rational>> a, std::vector<MetricSpace<Rational>> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const MetricSpace<Rational>& y) {
      return x.size() == y.size() && oracle_embeds(x, y);
    });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

Outcome minimal_universal_subclass() {
  Engine rng(1212);
  const std::vector<Rational> values{2, 3, 4};
  int several = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<MetricSpace<Rational>> fam;
    const int count = oracle::uniform_int(rng, 1, 5);
    for (int k = 0; k < count; ++k)
      fam.emplace_back(oracle::random_matrix_from(rng, std::size_t(oracle::uniform_int(rng, 1, 4)), values));
    const auto out = msu::minimal_universal_subclass(fam);
    several += out.members.size() > 1;
    if (!covers(fam, out.members)) return "subclass is not universal at trial " + std::to_string(trial);
    for (std::size_t k = 0; k < out.members.size(); ++k)
      if (covers(fam, out.members, k)) return "representative " + std::to_string(k) + " is redundant";
    for (std::size_t a = 0; a < out.members.size(); ++a)
      for (std::size_t b = 0; b < out.members.size(); ++b)
        if (a != b && oracle_embeds(fam[out.members[a]], fam[out.members[b]])) return "representatives are comparable";

    std::vector<std::size_t> perm(fam.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<MetricSpace<Rational>> permuted;
    for (auto p : perm) permuted.push_back(fam[p]);
    const auto out2 = msu::minimal_universal_subclass(permuted);
    std::vector<MetricSpace<Rational>> reps1, reps2;
    for (auto m : out.members) reps1.push_back(fam[m]);
    for (auto m : out2.members) reps2.push_back(permuted[m]);
    if (!same_up_to_isometry(reps1, reps2)) return "permuted input gives a different subclass";
  }
  if (several < 20) return "too few families with several representatives";
  return {};
}

// 13 -----------------------------------------------------------------------

bool oracle_mb(const Rational& xy, const Rational& xz, const Rational& yz) {
  return xy + yz == xz || xy + xz == yz || xz + yz == xy;
}

Outcome bridged_space() {
  Engine rng(1313);
  int crossing_triples = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = oracle::random_rational(rng, 1, 3, 2), b = a + oracle::random_rational(rng, 1, 3, 2);
    const auto x = msu::union_pl_quadruples<Rational>({msu::pl_quadruple(a, a), msu::pl_quadruple(a, b)});
    const msu::BridgeParams<Rational> bridge{oracle::random_rational(rng, -4, 4, 2),
                                             {std::size_t(oracle::uniform_int(rng, 0, 1)), std::size_t(oracle::uniform_int(rng, 0, 3))},
                                             oracle::random_rational(rng, 0, 3, 2) + Rational(1, 2)};
    std::vector<msu::MPoint<Rational>> pts;
    const int total = oracle::uniform_int(rng, 3, 6);
    const int reals = oracle::uniform_int(rng, 2, total - 1);
    std::set<Rational> ts;
    ts.insert(bridge.p - oracle::random_rational(rng, 0, 4, 4) - Rational(1, 4));
    ts.insert(bridge.p + oracle::random_rational(rng, 0, 4, 4) + Rational(1, 4));
    while (int(ts.size()) < reals) ts.insert(oracle::random_rational(rng, -8, 8, 4));
    for (const auto& t : ts) pts.push_back(msu::RealPoint<Rational>{t});
    std::set<msu::TaggedPoint> qs;
    while (int(qs.size()) < total - reals)
      qs.insert({std::size_t(oracle::uniform_int(rng, 0, 1)), std::size_t(oracle::uniform_int(rng, 0, 3))});
    for (const auto& q : qs) pts.push_back(q);

    const auto m = msu::sample_m_space(pts, x, bridge);
    if (!oracle::metric_axioms(m.matrix())) return "sample is not a metric at trial " + std::to_string(trial);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = 0; k < pts.size(); ++k) {
          const auto* ri = std::get_if<msu::RealPoint<Rational>>(&pts[i]);
          const auto* rj = std::get_if<msu::RealPoint<Rational>>(&pts[j]);
          if (!ri || !rj || !std::holds_alternative<msu::TaggedPoint>(pts[k])) continue;
          const Rational lo = std::min(ri->t, rj->t), hi = std::max(ri->t, rj->t);
          if (!(lo < bridge.p && bridge.p < hi)) continue;
          ++crossing_triples;
          if (oracle_mb(m(i, j), m(i, k), m(j, k))) return "MB triple across the bridge foot at trial " + std::to_string(trial);
        }
  }
  if (crossing_triples == 0) return "no triple straddled the bridge foot";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "metric-axiom validator detects injected violations", 5, validator_detects_injected_violations},
      {2, "finite spaces are not shifted", 15, finite_spaces_are_not_shifted},
      {3, "Cayley-Menger sign and zero set", 5, cayley_menger_sign},
      {4, "pseudo-linear deciders agree", 15, pl_deciders_agree},
      {5, "metrizability matches the cycle oracle", 30, metrizability_matches_cycles},
      {6, "eps-connected union is minimal universal", 60, epsilon_union_is_minimal},
      {7, "ultrametric builders", 10, ultrametric_builders},
      {8, "tripod embedding and Fermat point", 15, tripod_embedding},
      {9, "tripod minimality", 60, tripod_minimality},
      {10, "two-ray thresholds", 60, two_ray_thresholds},
      {11, "(-1,0) u N distances and removal witnesses", 10, f2_space},
      {12, "minimal universal subclass", 60, minimal_universal_subclass},
      {13, "bridged space samples", 20, bridged_space},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome && secs > c.limit_seconds) outcome = "exceeded the time limit";
    std::printf("[%s] %2d %s (%.2f s, limit %.0f s)%s%s\n", outcome ? "FAIL" : "PASS", c.id, c.name, secs, c.limit_seconds,
                outcome ? ": " : "", outcome ? outcome->c_str() : "");
    std::fflush(stdout);
    failures += outcome.has_value();
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
