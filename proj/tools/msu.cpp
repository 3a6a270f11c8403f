// msu: command-line front end for the finite metric space library.
//
// Exit codes: 0 success or a positive answer, 1 a negative answer, 2 bad input.

#include "msu/betweenness.hpp"
#include "msu/classes.hpp"
#include "msu/classify.hpp"
#include "msu/embedding.hpp"
#include "msu/graph.hpp"
#include "msu/io.hpp"
#include "msu/line_spaces.hpp"
#include "msu/rays.hpp"
#include "msu/unions.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <regex>
#include <string>
#include <variant>
#include <vector>

namespace {

using msu::ErrorCode;
using msu::fail;
using msu::MetricSpace;
using msu::Rational;
using msu::io::AnySpace;
using msu::io::json;
using msu::io::to_json;

struct Globals {
  double tol = msu::kDefaultTolerance;
  unsigned parallel = 1;
  bool pretty = false;
};

Globals g;

msu::EmbeddingOptions embed_opts(std::size_t limit = 0) {
  msu::EmbeddingOptions o;
  o.limit = limit;
  o.tol = g.tol;
  o.parallel = g.parallel;
  return o;
}

// ---------------------------------------------------------------------------
// Output

void render(const json& j, const std::string& indent, std::ostream& out) {
  auto scalar_text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const json& v) {
    return std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_primitive()) {
        out << indent << it.key() << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() && flat(v)) {
        out << indent << it.key() << ":";
        for (const auto& e : v) out << " " << scalar_text(e);
        out << "\n";
      } else {
        out << indent << it.key() << ":\n";
        render(v, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        out << indent << "- " << scalar_text(v) << "\n";
      } else if (v.is_array() && flat(v)) {
        out << indent << "-";
        for (const auto& e : v) out << " " << scalar_text(e);
        out << "\n";
      } else {
        out << indent << "-\n";
        render(v, indent + "  ", out);
      }
    }
  } else {
    out << indent << scalar_text(j) << "\n";
  }
}

int emit(const json& j, int code = 0) {
  if (g.pretty)
    render(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------------------
// Argument parsing

template <typename Scalar>
Scalar parse_scalar(const std::string& text) {
  try {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      return msu::parse_rational(text);
    } else {
      std::size_t used = 0;
      double v = std::stod(text, &used);
      if (used == text.size()) return v;
      return msu::parse_rational(text).convert_to<double>();
    }
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidInput, "not a number: '" + text + "'");
  }
}

/// Accepts plain numbers and multiples of pi such as "pi/4" or "3pi/4".
double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([0-9.]*)\s*\*?\s*pi\s*(?:/\s*([0-9.]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double num = m[1].length() ? std::stod(m[1].str()) : 1.0;
    const double den = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return num * std::numbers::pi / den;
  }
  return parse_scalar<double>(text);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

template <typename Scalar>
std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_scalar<Scalar>(s));
  return out;
}

/// A point given by label, or by index when no label matches.
template <typename Scalar>
std::size_t resolve_point(const MetricSpace<Scalar>& x, const std::string& key) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.label(i) == key) return i;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(key, &used);
    if (used == key.size() && v < x.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::IndexOutOfRange, "no point '" + key + "'");
}

msu::TaggedPoint parse_tagged(const std::string& text) {
  auto parts = split(text, '.');
  if (parts.size() != 2) fail(ErrorCode::InvalidInput, "expected PART.POINT, got '" + text + "'");
  try {
    return {std::stoul(parts[0]), std::stoul(parts[1])};
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidInput, "expected PART.POINT, got '" + text + "'");
  }
}

msu::rays::RayPoint parse_ray_point(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 2) fail(ErrorCode::InvalidInput, "expected RAY:T, got '" + text + "'");
  try {
    return {std::stoul(parts[0]), parse_scalar<double>(parts[1])};
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::InvalidInput, "expected RAY:T, got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// Spaces in a common arithmetic

using AnyFamily = std::variant<std::vector<MetricSpace<Rational>>, std::vector<MetricSpace<double>>>;

AnyFamily unify_all(const std::vector<AnySpace>& spaces) {
  const bool exact = std::all_of(spaces.begin(), spaces.end(), [](const AnySpace& s) {
    return std::holds_alternative<MetricSpace<Rational>>(s);
  });
  if (exact) {
    std::vector<MetricSpace<Rational>> out;
    for (const auto& s : spaces) out.push_back(std::get<MetricSpace<Rational>>(s));
    return out;
  }
  std::vector<MetricSpace<double>> out;
  for (const auto& s : spaces) {
    if (const auto* r = std::get_if<MetricSpace<Rational>>(&s))
      out.push_back(msu::io::to_float(*r));
    else
      out.push_back(std::get<MetricSpace<double>>(s));
  }
  return out;
}

std::vector<AnySpace> load_all(const std::vector<std::string>& files) {
  std::vector<AnySpace> out;
  for (const auto& f : files) out.push_back(msu::io::load_space(f, g.tol));
  return out;
}

AnyFamily load_family(const std::string& path) { return unify_all(msu::io::load_family(path, g.tol)); }

template <typename Scalar>
const char* mode_name() {
  return msu::ScalarTraits<Scalar>::name;
}

// ---------------------------------------------------------------------------
// JSON helpers

template <typename Scalar>
json map_json(const msu::PointMap& f, const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y) {
  json m = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) m[x.label(i)] = y.label(f[i]);
  return m;
}

json ray_point_json(const msu::rays::RaySpace& rays, const msu::rays::RayPoint& p) {
  const auto xy = msu::rays::planar(rays, p);
  return json{{"ray", p.ray}, {"t", p.t}, {"x", xy.x()}, {"y", xy.y()}};
}

json embedding_json(const msu::rays::RaySpace& rays, const msu::rays::TripleEmbedding& e) {
  json a = json::array();
  for (const auto& p : e) a.push_back(ray_point_json(rays, p));
  return a;
}

json triangle_json(const msu::rays::Triangle& t) { return json::array({t.a, t.b, t.c}); }

json bool_matrix_json(const msu::BoolMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(bool(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Verbs over single spaces

int cmd_validate(const std::string& file) {
  auto raw = msu::io::parse_raw_space(msu::io::read_json_file(file));
  return std::visit(
      [&](const auto& d) {
        using Scalar = typename std::decay_t<decltype(d)>::Scalar;
        auto res = msu::validate_space<Scalar>(d, raw.labels, g.tol);
        json out{{"valid", res.valid()}, {"mode", mode_name<Scalar>()}, {"size", d.rows()}};
        json v = json::array();
        for (const auto& a : res.violations) {
          json e{{"axiom", msu::axiom_name(a.axiom)}, {"i", a.i}, {"j", a.j}};
          if (a.axiom == msu::Axiom::TriangleViolation) e["k"] = a.k;
          v.push_back(e);
        }
        out["violations"] = v;
        return emit(out, res.valid() ? 0 : 1);
      },
      raw.matrix);
}

int cmd_classify(const std::string& file, const std::optional<std::string>& eps) {
  return std::visit(
      [&](const auto& x) {
        using Scalar = typename std::decay_t<decltype(x)>::scalar_type;
        const auto f = msu::classify_space(x, embed_opts());
        json out{{"ultrametric", f.ultrametric},
                 {"discrete", f.discrete},
                 {"strongly_rigid", f.strongly_rigid},
                 {"homogeneous", f.homogeneous},
                 {"diameter", to_json(x.diameter())},
                 {"connectivity_threshold", to_json(msu::connectivity_threshold(x))}};
        if (eps) out["epsilon_connected"] = msu::is_epsilon_connected(x, parse_scalar<Scalar>(*eps), g.tol);
        return emit(out);
      },
      msu::io::load_space(file, g.tol));
}

int cmd_selfmaps(const std::string& file) {
  return std::visit(
      [&](const auto& x) {
        const auto r = msu::is_not_shifted(x, embed_opts());
        json maps = json::array();
        for (const auto& f : r.isometries) maps.push_back(f.image);
        json out{{"not_shifted", r.not_shifted}, {"isometry_count", r.isometries.size()}, {"isometries", maps}};
        if (r.non_surjective) out["non_surjective"] = r.non_surjective->image;
        return emit(out, r.not_shifted ? 0 : 1);
      },
      msu::io::load_space(file, g.tol));
}

int cmd_between(const std::string& file, const std::vector<std::string>& pts) {
  return std::visit(
      [&](const auto& x) {
        const auto i = resolve_point(x, pts[0]), j = resolve_point(x, pts[1]), k = resolve_point(x, pts[2]);
        const bool b = msu::lies_between(x, i, j, k, g.tol);
        return emit(json{{"between", b}, {"i", x.label(i)}, {"j", x.label(j)}, {"k", x.label(k)}}, b ? 0 : 1);
      },
      msu::io::load_space(file, g.tol));
}

template <typename Scalar>
int mb_triple(const std::vector<std::string>& sides) {
  const Scalar a = parse_scalar<Scalar>(sides[0]), b = parse_scalar<Scalar>(sides[1]), c = parse_scalar<Scalar>(sides[2]);
  const bool mb = msu::is_mb_triple(a, b, c, g.tol);
  return emit(json{{"mb", mb}, {"cayley_menger", to_json(msu::cayley_menger(a, b, c, g.tol))}}, mb ? 0 : 1);
}

int cmd_mb(const std::optional<std::string>& file, const std::vector<std::string>& triple) {
  if (!triple.empty()) {
    if (triple.size() != 3) fail(ErrorCode::InvalidInput, "--triple takes three distances");
    const bool exact = std::none_of(triple.begin(), triple.end(), [](const std::string& s) {
      return s.find_first_of("eE") != std::string::npos;
    });
    return exact ? mb_triple<Rational>(triple) : mb_triple<double>(triple);
  }
  if (!file) fail(ErrorCode::InvalidInput, "mb needs a space file or --triple");
  return std::visit(
      [&](const auto& x) {
        const auto r = msu::is_mb_space(x, g.tol);
        json out{{"mb", r.is_mb}};
        if (r.violating_triple) {
          json t = json::array();
          for (auto i : *r.violating_triple) t.push_back(x.label(i));
          out["violating_triple"] = t;
        }
        return emit(out, r.is_mb ? 0 : 1);
      },
      msu::io::load_space(*file, g.tol));
}

int cmd_pl(const std::string& file) {
  return std::visit(
      [&](const auto& x) {
        const bool pl = msu::is_pseudolinear(x, g.tol);
        const auto lab = msu::pl_labeling(x, g.tol);
        json out{{"pseudolinear", pl}};
        if (lab) {
          json p = json::array();
          for (auto i : lab->perm) p.push_back(x.label(i));
          out["labeling"] = p;
        } else {
          out["labeling"] = nullptr;
        }
        return emit(out, pl ? 0 : 1);
      },
      msu::io::load_space(file, g.tol));
}

int cmd_line(const std::string& file) {
  return std::visit(
      [&](const auto& x) {
        const auto r = msu::line_realization(x, g.tol);
        json out{{"embeds", r.has_value()}};
        if (r) {
          json c = json::object();
          for (std::size_t i = 0; i < x.size(); ++i) c[x.label(i)] = to_json(r->coords[i]);
          out["coords"] = c;
        }
        return emit(out, r ? 0 : 1);
      },
      msu::io::load_space(file, g.tol));
}

// ---------------------------------------------------------------------------
// Verbs over pairs of spaces

int cmd_embed(const std::string& fx, const std::string& fy, std::size_t limit) {
  return std::visit(
      [&](const auto& pair) {
        const auto& [x, y] = pair;
        const auto maps = msu::find_embeddings(x, y, embed_opts(limit));
        json list = json::array();
        for (const auto& f : maps) list.push_back(map_json(f, x, y));
        json out{{"count", maps.size()}, {"embeddings", list}};
        if (maps.empty()) out["report"] = "no embedding";
        return emit(out, maps.empty() ? 1 : 0);
      },
      msu::io::unify(msu::io::load_space(fx, g.tol), msu::io::load_space(fy, g.tol)));
}

int cmd_compare(const std::string& fx, const std::string& fy) {
  return std::visit(
      [&](const auto& pair) {
        const auto c = msu::compare(pair.first, pair.second, g.tol);
        return emit(json{{"comparability", msu::comparability_name(c)}});
      },
      msu::io::unify(msu::io::load_space(fx, g.tol), msu::io::load_space(fy, g.tol)));
}

// ---------------------------------------------------------------------------
// Graphs

int cmd_metrize(const std::string& file, bool with_distances) {
  return std::visit(
      [&](const auto& graph) {
        const auto r = msu::check_metrizability(graph, g.tol);
        json out{{"pseudometrizable", r.pseudometrizable}, {"metrizable", r.metrizable}};
        if (r.violating_cycle) {
          json c = json::array();
          for (auto v : *r.violating_cycle) c.push_back(graph.vertices()[v]);
          out["violating_cycle"] = c;
        }
        if (with_distances || r.metrizable) {
          out["labels"] = graph.vertices();
          out["matrix"] = msu::io::matrix_to_json(r.pseudometric);
        }
        return emit(out, r.metrizable ? 0 : 1);
      },
      msu::io::parse_graph(msu::io::read_json_file(file)));
}

// ---------------------------------------------------------------------------
// Unions

int cmd_union_graph(const std::vector<std::string>& files, const std::string& eps1, const std::string& anchors) {
  return std::visit(
      [&](const auto& parts) {
        using Scalar = typename std::decay_t<decltype(parts)>::value_type::scalar_type;
        std::vector<std::size_t> idx;
        if (anchors.empty()) {
          idx.assign(parts.size(), 0);
        } else {
          auto keys = split(anchors, ',');
          if (keys.size() != parts.size()) fail(ErrorCode::InvalidInput, "need one anchor per part");
          for (std::size_t p = 0; p < parts.size(); ++p) idx.push_back(resolve_point(parts[p], keys[p]));
        }
        return emit(msu::io::union_to_json(msu::union_epsilon_connected(parts, idx, parse_scalar<Scalar>(eps1), g.tol)));
      },
      unify_all(load_all(files)));
}

template <typename Scalar>
int union_ultra(const std::string& distances, const std::string& separators) {
  return emit(msu::io::union_to_json(
      msu::union_ultrametric_family(parse_list<Scalar>(distances), parse_list<Scalar>(separators), g.tol)));
}

int cmd_union_pl(const std::vector<std::string>& files) {
  return std::visit([&](const auto& quads) { return emit(msu::io::union_to_json(msu::union_pl_quadruples(quads, g.tol))); },
                    unify_all(load_all(files)));
}

int cmd_union_glue(const std::string& fx, const std::string& fy, const std::string& x0, const std::string& y0,
                   const std::string& r0) {
  return std::visit(
      [&](const auto& pair) {
        const auto& [x, y] = pair;
        using Scalar = typename std::decay_t<decltype(x)>::scalar_type;
        return emit(msu::io::union_to_json(msu::glue_ultrametric_pair(x, y, resolve_point(x, x0), resolve_point(y, y0),
                                                                      parse_scalar<Scalar>(r0), g.tol)));
      },
      msu::io::unify(msu::io::load_space(fx, g.tol), msu::io::load_space(fy, g.tol)));
}

int cmd_union_constant(const std::string& fx, const std::string& fy, const std::string& r0) {
  return std::visit(
      [&](const auto& pair) {
        using Scalar = typename std::decay_t<decltype(pair.first)>::scalar_type;
        return emit(msu::io::union_to_json(msu::glue_constant(pair.first, pair.second, parse_scalar<Scalar>(r0), g.tol)));
      },
      msu::io::unify(msu::io::load_space(fx, g.tol), msu::io::load_space(fy, g.tol)));
}

int cmd_union_verify(const std::string& file) {
  return std::visit(
      [&](const auto& u) {
        const auto r = msu::verify_minimal_union(u, embed_opts());
        json pairs = json::array();
        for (const auto& [a, b] : r.comparable_pairs) pairs.push_back(json::array({a, b}));
        json out{{"passes", r.passes()},
                 {"part_not_shifted", r.part_not_shifted},
                 {"comparable_pairs", pairs},
                 {"copy_counts", r.copy_counts},
                 {"parts_partition", r.parts_preserved}};
        return emit(out, r.passes() ? 0 : 1);
      },
      msu::io::parse_union(msu::io::read_json_file(file), g.tol));
}

// ---------------------------------------------------------------------------
// The bridged space

struct BridgeArgs {
  std::vector<std::string> quads;
  std::string p, b, r;
};

template <typename Scalar>
msu::MPoint<Scalar> parse_m_point(const std::string& text) {
  if (text.rfind("R:", 0) == 0) return msu::RealPoint<Scalar>{parse_scalar<Scalar>(text.substr(2))};
  if (text.rfind("Q", 0) == 0) return parse_tagged(text.substr(1));
  fail(ErrorCode::InvalidInput, "points are R:<real> or Q<part>.<point>, got '" + text + "'");
}

template <typename F>
int with_bridge(const BridgeArgs& args, F&& body) {
  return std::visit(
      [&](const auto& quads) {
        using Scalar = typename std::decay_t<decltype(quads)>::value_type::scalar_type;
        const auto u = msu::union_pl_quadruples(quads, g.tol);
        msu::BridgeParams<Scalar> bridge{parse_scalar<Scalar>(args.p), parse_tagged(args.b), parse_scalar<Scalar>(args.r)};
        return body(u, bridge);
      },
      unify_all(load_all(args.quads)));
}

int cmd_mspace_dist(const BridgeArgs& args, const std::vector<std::string>& pts) {
  return with_bridge(args, [&](const auto& u, const auto& bridge) {
    using Scalar = std::decay_t<decltype(bridge.p)>;
    const auto a = parse_m_point<Scalar>(pts[0]), b = parse_m_point<Scalar>(pts[1]);
    return emit(json{{"a", msu::m_point_label(a)}, {"b", msu::m_point_label(b)},
                     {"distance", to_json(msu::m_distance(a, b, u, bridge))}});
  });
}

int cmd_mspace_sample(const BridgeArgs& args, const std::vector<std::string>& pts) {
  return with_bridge(args, [&](const auto& u, const auto& bridge) {
    using Scalar = std::decay_t<decltype(bridge.p)>;
    std::vector<msu::MPoint<Scalar>> points;
    for (const auto& s : pts) points.push_back(parse_m_point<Scalar>(s));
    return emit(msu::io::space_to_json(msu::sample_m_space(points, u, bridge, g.tol)));
  });
}

// ---------------------------------------------------------------------------
// Ray geometry

msu::rays::Triangle load_triangle(const std::optional<std::string>& file, const std::string& sides) {
  if (!sides.empty()) {
    auto v = parse_list<double>(sides);
    if (v.size() != 3) fail(ErrorCode::InvalidInput, "--sides takes three lengths");
    return {v[0], v[1], v[2]};
  }
  if (!file) fail(ErrorCode::InvalidInput, "give a triangle file or --sides a,b,c");
  const json j = msu::io::read_json_file(*file);
  if (j.contains("sides")) return msu::io::parse_triangle(j);
  const auto s = msu::io::parse_space(j, g.tol);
  if (const auto* r = std::get_if<MetricSpace<Rational>>(&s)) return msu::rays::Triangle::from_space(msu::io::to_float(*r));
  return msu::rays::Triangle::from_space(std::get<MetricSpace<double>>(s));
}

int cmd_tripod_embed(const msu::rays::Triangle& tri) {
  const auto rays = msu::rays::RaySpace::tripod();
  const auto e = msu::rays::embed_triple_tripod(tri, g.tol);
  json out{{"sides", triangle_json(tri)},
           {"embedding", embedding_json(rays, e)},
           {"error", msu::rays::embedding_error(tri, rays, e)}};
  if (!tri.degenerate(g.tol)) {
    const auto ft = msu::rays::fermat_torricelli(tri, g.tol);
    json f{{"kind", ft.kind == msu::rays::FermatPoint::Kind::Interior ? "interior" : "vertex"},
           {"distances", ft.distances},
           {"total_cost", ft.total_cost}};
    if (ft.kind == msu::rays::FermatPoint::Kind::AtVertex) f["vertex"] = ft.vertex;
    out["fermat"] = f;
  }
  return emit(out);
}

int cmd_xalpha_embed(const msu::rays::Triangle& tri, double alpha) {
  const auto rays = msu::rays::RaySpace::two_rays(alpha);
  const auto e = msu::rays::embed_triple_two_rays(tri, alpha, g.tol);
  json out{{"sides", triangle_json(tri)}, {"alpha", alpha}, {"embeds", e.has_value()}};
  if (e) {
    out["embedding"] = embedding_json(rays, *e);
    out["error"] = msu::rays::embedding_error(tri, rays, *e);
  }
  return emit(out, e ? 0 : 1);
}

int emit_witness(const msu::rays::RaySpace& rays, const msu::rays::WitnessTriangle& w, bool with_angle) {
  json pts = json::array();
  for (const auto& p : w.points) pts.push_back(ray_point_json(rays, p));
  json out{{"sides", triangle_json(w.triangle)}, {"points", pts}};
  if (with_angle) out["base_angle"] = w.base_angle;
  return emit(out);
}

int cmd_check(const msu::rays::Triangle& tri, const msu::rays::RaySpace& rays, const std::vector<std::string>& forbid,
              int multistarts, double solver_tol) {
  std::vector<msu::rays::RayPoint> forbidden;
  for (const auto& f : forbid) forbidden.push_back(parse_ray_point(f));
  msu::rays::SolverOptions opts;
  opts.tol = solver_tol;
  opts.multistarts = multistarts;
  const auto sols = msu::rays::solve_constrained_embedding(tri, rays, forbidden, opts);
  json list = json::array();
  for (const auto& e : sols) list.push_back(embedding_json(rays, e));
  return emit(json{{"sides", triangle_json(tri)}, {"count", sols.size()}, {"embeddings", list}}, sols.empty() ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Line spaces

json f2_json(const msu::F2Point<Rational>& p) {
  const bool neg = p.kind == msu::F2Point<Rational>::Kind::Neg;
  return json{{"kind", neg ? "neg" : "nat"}, {"value", to_json(p.value)}, {"coordinate", to_json(p.coordinate())}};
}

int cmd_f2_embed(const std::string& t) {
  const auto [a, b] = msu::f2_embed_distance(parse_scalar<Rational>(t));
  return emit(json{{"points", json::array({f2_json(a), f2_json(b)})},
                   {"distance", to_json(msu::abs_diff(a.coordinate(), b.coordinate()))}});
}

int cmd_f2_witness(const std::string& point) {
  auto parts = split(point, ':');
  if (parts.size() != 2 || (parts[0] != "neg" && parts[0] != "nat"))
    fail(ErrorCode::InvalidInput, "points are neg:<s> or nat:<n>, got '" + point + "'");
  const Rational v = parse_scalar<Rational>(parts[1]);
  const auto q = parts[0] == "neg" ? msu::F2Point<Rational>::neg(v) : msu::F2Point<Rational>::nat(v);
  return emit(json{{"point", f2_json(q)}, {"distance", to_json(msu::f2_removal_witness(q))}});
}

int cmd_interval_embed(const std::string& t, const std::optional<std::string>& puncture) {
  std::optional<Rational> p;
  if (puncture) p = parse_scalar<Rational>(*puncture);
  const auto r = msu::interval_embed(parse_scalar<Rational>(t), p);
  json out{{"embeds", r.has_value()}};
  if (r) out["interval"] = json::array({to_json(r->first), to_json(r->second)});
  return emit(out, r ? 0 : 1);
}

// ---------------------------------------------------------------------------
// Families

int cmd_classes(const std::string& what, const std::string& family) {
  return std::visit(
      [&](const auto& fam) {
        if (what == "order") return emit(json{{"relation", bool_matrix_json(msu::embed_quasiorder(fam, embed_opts()).relation)}});
        if (fam.empty()) fail(ErrorCode::EmptyFamily, "family is empty");
        const auto m = msu::minimal_universal_subclass(fam, embed_opts());
        json out{{"classes", m.poset.classes},
                 {"order", bool_matrix_json(m.poset.order)},
                 {"maximal", m.poset.maximal},
                 {"representatives", m.members}};
        if (what == "minimal") {
          json members = json::array();
          for (auto i : m.members) members.push_back(msu::io::space_to_json(fam[i]));
          out["members"] = members;
        }
        return emit(out);
      },
      load_family(family));
}

int cmd_check_universal(const std::string& family, const std::string& yfile, bool minimal) {
  auto fam_any = msu::io::load_family(family, g.tol);
  fam_any.push_back(msu::io::load_space(yfile, g.tol));
  return std::visit(
      [&](auto fam) {
        auto y = fam.back();
        fam.pop_back();
        if (!minimal) {
          std::optional<std::size_t> failing;
          const bool u = msu::is_universal_space(fam, y, g.tol, &failing);
          json out{{"universal", u}};
          if (failing) out["failing_member"] = *failing;
          return emit(out, u ? 0 : 1);
        }
        const auto r = msu::is_minimal_universal_space(fam, y, g.tol);
        json out{{"minimal_universal", r.minimal_universal}};
        if (r.failing_member) out["failing_member"] = *r.failing_member;
        if (r.failing_point) out["removable_point"] = y.label(*r.failing_point);
        return emit(out, r.minimal_universal ? 0 : 1);
      },
      unify_all(fam_any));
}

int cmd_check_nonexistence(const std::string& family) {
  return std::visit(
      [&](const auto& fam) {
        const auto r = msu::nonexistence_condition_i(fam, g.tol);
        json out{{"holds", r.holds}};
        if (r.witness) out["witness"] = json::array({r.witness->first, r.witness->second});
        return emit(out, r.holds ? 0 : 1);
      },
      load_family(family));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite metric spaces: validation, embeddings, unions and universal spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  if (const char* env = std::getenv("MSU_TOL")) {
    try {
      g.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: MSU_TOL is not a number\n";
      return 2;
    }
  }
  app.add_option("--tol", g.tol, "Comparison tolerance in float mode (default 1e-9, or MSU_TOL)")->check(CLI::PositiveNumber);
  app.add_option("--parallel", g.parallel, "Worker threads for embedding searches")->check(CLI::Range(1u, 256u));
  app.add_flag("--pretty", g.pretty, "Human-readable output instead of JSON");

  int code = 0;
  std::string f1, f2, s1, s2, s3, s4;
  std::optional<std::string> opt1, opt2;
  std::vector<std::string> many, many2;
  std::size_t limit = 0;
  bool flag = false;
  int multistarts = msu::rays::kMultistarts;
  double solver_tol = msu::rays::kSolverTolerance;

  auto* validate = app.add_subcommand("validate", "Check the metric axioms of a space file");
  validate->add_option("space", f1)->required();
  validate->callback([&] { code = cmd_validate(f1); });

  auto* classify = app.add_subcommand("classify", "Ultrametric, discrete, strongly rigid and homogeneous flags");
  classify->add_option("space", f1)->required();
  classify->add_option("--epsilon", opt1, "Also test epsilon-connectedness");
  classify->callback([&] { code = cmd_classify(f1, opt1); });

  auto* embed = app.add_subcommand("embed", "Isometric embeddings of X into Y");
  embed->add_option("x", f1)->required();
  embed->add_option("y", f2)->required();
  embed->add_option("--limit", limit, "Stop after this many (0 = all)");
  embed->callback([&] { code = cmd_embed(f1, f2, limit); });

  auto* compare = app.add_subcommand("compare", "Which of X, Y embeds into the other");
  compare->add_option("x", f1)->required();
  compare->add_option("y", f2)->required();
  compare->callback([&] { code = cmd_compare(f1, f2); });

  auto* selfmaps = app.add_subcommand("selfmaps", "Self-embeddings; confirms the space is not shifted");
  selfmaps->add_option("space", f1)->required();
  selfmaps->callback([&] { code = cmd_selfmaps(f1); });

  auto* between = app.add_subcommand("between", "Whether J lies between I and K");
  between->add_option("space", f1)->required();
  between->add_option("points", many, "I J K as labels or indices")->required()->expected(3);
  between->callback([&] { code = cmd_between(f1, many); });

  auto* mb = app.add_subcommand("mb", "Betweenness class membership, or a single triple with its Cayley-Menger determinant");
  mb->add_option("space", opt1);
  mb->add_option("--triple", many, "d12 d13 d23")->expected(3);
  mb->callback([&] { code = cmd_mb(opt1, many); });

  auto* pl = app.add_subcommand("pl", "Pseudo-linear quadruple test and labeling");
  pl->add_option("space", f1)->required();
  pl->callback([&] { code = cmd_pl(f1); });

  auto* line = app.add_subcommand("line", "Isometric embedding into the real line");
  line->add_option("space", f1)->required();
  line->callback([&] { code = cmd_line(f1); });

  auto* metrize = app.add_subcommand("metrize", "Shortest-path metrization of a weighted graph");
  metrize->add_option("graph", f1)->required();
  metrize->add_flag("--distances", flag, "Print the pseudometric even when it is not a metric");
  metrize->callback([&] { code = cmd_metrize(f1, flag); });

  auto* uni = app.add_subcommand("union", "Disjoint union builders");
  uni->require_subcommand(1);
  auto* ugraph = uni->add_subcommand("graph", "Union of epsilon-connected parts joined at anchors");
  ugraph->add_option("parts", many)->required();
  ugraph->add_option("--eps1", s1, "Anchor edge weight")->required();
  ugraph->add_option("--anchors", s2, "Comma-separated anchor per part (default: first point)");
  ugraph->callback([&] { code = cmd_union_graph(many, s1, s2); });
  auto* uultra = uni->add_subcommand("ultra", "Ultrametric union of two-point spaces");
  uultra->add_option("--distances", s1, "Ascending distances t1,t2,...")->required();
  uultra->add_option("--separators", s2, "Ascending separators 0,p2,...")->required();
  uultra->add_flag("--float", flag, "Use binary64 instead of exact rationals");
  uultra->callback([&] { code = flag ? union_ultra<double>(s1, s2) : union_ultra<Rational>(s1, s2); });
  auto* upl = uni->add_subcommand("pl", "Union of pseudo-linear quadruples");
  upl->add_option("quads", many)->required();
  upl->callback([&] { code = cmd_union_pl(many); });
  auto* uglue = uni->add_subcommand("glue", "Ultrametric gluing of two ultrametric spaces");
  uglue->add_option("x", f1)->required();
  uglue->add_option("y", f2)->required();
  uglue->add_option("--x0", s1, "Gluing point of X")->required();
  uglue->add_option("--y0", s2, "Gluing point of Y")->required();
  uglue->add_option("--r0", s3, "Distance between the gluing points")->required();
  uglue->callback([&] { code = cmd_union_glue(f1, f2, s1, s2, s3); });
  auto* uconst = uni->add_subcommand("constant", "Join two spaces at constant cross distance");
  uconst->add_option("x", f1)->required();
  uconst->add_option("y", f2)->required();
  uconst->add_option("--r0", s3, "Cross distance")->required();
  uconst->callback([&] { code = cmd_union_constant(f1, f2, s3); });
  auto* uverify = uni->add_subcommand("verify", "Check a union file for minimal universality over its parts");
  uverify->add_option("union", f1)->required();
  uverify->callback([&] { code = cmd_union_verify(f1); });

  BridgeArgs bridge;
  auto* mspace = app.add_subcommand("mspace", "The line bridged to a union of pseudo-linear quadruples");
  mspace->require_subcommand(1);
  for (auto* sub : {mspace->add_subcommand("dist", "Distance between two points"),
                    mspace->add_subcommand("sample", "Distance matrix of a finite sample")}) {
    sub->add_option("--quads", bridge.quads, "Quadruple files")->required();
    sub->add_option("--p", bridge.p, "Bridge foot on the line")->required();
    sub->add_option("--b", bridge.b, "Bridge end PART.POINT")->required();
    sub->add_option("--r", bridge.r, "Bridge length")->required();
    sub->add_option("points", many2, "R:<real> or Q<part>.<point>")->required();
  }
  mspace->get_subcommand("dist")->callback([&] {
    if (many2.size() != 2) fail(ErrorCode::InvalidInput, "dist takes two points");
    code = cmd_mspace_dist(bridge, many2);
  });
  mspace->get_subcommand("sample")->callback([&] { code = cmd_mspace_sample(bridge, many2); });

  auto add_triangle_input = [&](CLI::App* sub) {
    sub->add_option("triangle", opt2, "Triangle file {\"sides\": [...]} or a 3-point space");
    sub->add_option("--sides", s4, "a,b,c");
  };
  auto add_check_options = [&](CLI::App* sub) {
    sub->add_option("--forbid", many, "Excluded points RAY:T");
    sub->add_option("--multistarts", multistarts, "Newton starts per ray assignment");
    sub->add_option("--solver-tol", solver_tol, "Verification and dedup tolerance");
  };

  auto* tripod = app.add_subcommand("tripod", "Three rays at 120 degrees");
  tripod->require_subcommand(1);
  auto* tembed = tripod->add_subcommand("embed", "Embed a triangle; also reports the Fermat-Torricelli point");
  add_triangle_input(tembed);
  tembed->callback([&] { code = cmd_tripod_embed(load_triangle(opt2, s4)); });
  auto* twit = tripod->add_subcommand("witness", "Equilateral triangle through a point of the tripod");
  twit->add_option("--ray", limit, "Ray index");
  twit->add_option("--t", s1, "Distance from the origin")->required();
  twit->callback([&] {
    code = emit_witness(msu::rays::RaySpace::tripod(),
                        msu::rays::witness_triangle_tripod({limit, parse_scalar<double>(s1)}), false);
  });
  auto* tcheck = tripod->add_subcommand("check", "All embeddings found by the constrained solver");
  add_triangle_input(tcheck);
  add_check_options(tcheck);
  tcheck->callback([&] {
    code = cmd_check(load_triangle(opt2, s4), msu::rays::RaySpace::tripod(), many, multistarts, solver_tol);
  });

  std::string alpha;
  auto* xalpha = app.add_subcommand("xalpha", "Two rays at angle alpha without the origin");
  xalpha->require_subcommand(1);
  xalpha->add_option("--alpha", alpha, "Angle in radians; pi/4 style accepted")->required();
  auto* xembed = xalpha->add_subcommand("embed", "Embed a triangle");
  add_triangle_input(xembed);
  xembed->callback([&] { code = cmd_xalpha_embed(load_triangle(opt2, s4), parse_angle(alpha)); });
  auto* xwit = xalpha->add_subcommand("witness", "Isosceles witness triangle through a point");
  xwit->add_option("--ray", limit, "Ray index");
  xwit->add_option("--t", s1, "Distance from the origin")->required();
  xwit->callback([&] {
    const double a = parse_angle(alpha);
    code = emit_witness(msu::rays::RaySpace::two_rays(a),
                        msu::rays::witness_triangle_two_rays({limit, parse_scalar<double>(s1)}, a), true);
  });
  auto* xcheck = xalpha->add_subcommand("check", "All embeddings found by the constrained solver");
  add_triangle_input(xcheck);
  add_check_options(xcheck);
  xcheck->callback([&] {
    code = cmd_check(load_triangle(opt2, s4), msu::rays::RaySpace::two_rays(parse_angle(alpha)), many, multistarts,
                     solver_tol);
  });

  auto* f2space = app.add_subcommand("f2", "The space (-1, 0) u {1, 2, 3, ...}");
  f2space->require_subcommand(1);
  auto* f2e = f2space->add_subcommand("embed", "A pair of points at distance t");
  f2e->add_option("t", s1)->required();
  f2e->callback([&] { code = cmd_f2_embed(s1); });
  auto* f2w = f2space->add_subcommand("witness", "A distance lost when the point is removed");
  f2w->add_option("point", s1, "neg:<s> or nat:<n>")->required();
  f2w->callback([&] { code = cmd_f2_witness(s1); });

  auto* interval = app.add_subcommand("interval", "The open unit interval");
  interval->require_subcommand(1);
  auto* iembed = interval->add_subcommand("embed", "A closed segment of length t, avoiding a puncture");
  iembed->add_option("t", s1)->required();
  iembed->add_option("--puncture", opt1, "Removed point p in (0, 1)");
  iembed->callback([&] { code = cmd_interval_embed(s1, opt1); });

  auto* classes = app.add_subcommand("classes", "Embeddability order on a family of spaces");
  classes->require_subcommand(1);
  for (const char* what : {"order", "poset", "minimal"}) {
    auto* sub = classes->add_subcommand(what, std::string(what) == "order"     ? "Embeddability relation"
                                              : std::string(what) == "poset" ? "Classes, order and maximal classes"
                                                                             : "Minimal universal subclass");
    sub->add_option("family", f1, "JSON array of spaces or a directory of space files")->required();
    sub->callback([&, what] { code = cmd_classes(what, f1); });
  }

  auto* check = app.add_subcommand("check", "Universality questions for a family");
  check->require_subcommand(1);
  auto* cuni = check->add_subcommand("universal", "Every member embeds into Y");
  cuni->add_option("family", f1)->required();
  cuni->add_option("y", f2)->required();
  cuni->callback([&] { code = cmd_check_universal(f1, f2, false); });
  auto* cmin = check->add_subcommand("minimal-universal", "Universal and no point of Y can be dropped");
  cmin->add_option("family", f1)->required();
  cmin->add_option("y", f2)->required();
  cmin->callback([&] { code = cmd_check_universal(f1, f2, true); });
  auto* cnon = check->add_subcommand("nonexistence", "Two non-isometric universal members exist");
  cnon->add_option("family", f1)->required();
  cnon->callback([&] { code = cmd_check_nonexistence(f1); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const msu::Error& e) {
    std::cerr << "error: " << msu::error_code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
