#include "msu/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace msu::io {

namespace {

enum class Mode { Exact, Float };

/// Decides the arithmetic for a set of scalar JSON values.
Mode detect_mode(const std::vector<const json*>& values, const std::string& what) {
  bool has_string = false, has_fraction = false;
  for (const json* v : values) {
    if (v->is_string()) {
      has_string = true;
    } else if (v->is_number_float()) {
      has_fraction = true;
    } else if (!v->is_number_integer() && !v->is_number_unsigned()) {
      fail(ErrorCode::InvalidInput, what + ": entries must be numbers or rational strings");
    }
  }
  if (has_string && has_fraction)
    fail(ErrorCode::InvalidInput, what + ": mixes rational strings with floating-point numbers");
  return has_string ? Mode::Exact : Mode::Float;
}

Rational exact_value(const json& v) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(ErrorCode::InvalidInput, e.what());
    }
  }
  if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
  return Rational(v.get<std::int64_t>());
}

double float_value(const json& v) { return v.get<double>(); }

template <typename Scalar>
Scalar value_as(const json& v) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return exact_value(v);
  } else {
    return float_value(v);
  }
}

template <typename Scalar>
DistanceMatrix<Scalar> read_matrix(const json& rows) {
  const auto n = Eigen::Index(rows.size());
  DistanceMatrix<Scalar> d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = value_as<Scalar>(rows[std::size_t(i)][std::size_t(j)]);
  return d;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename Scalar>
WeightedGraph<Scalar> read_graph(const json& j, const std::vector<std::string>& vertices) {
  WeightedGraph<Scalar> g(vertices);
  auto vertex_index = [&](const json& v) -> std::size_t {
    if (v.is_string()) {
      auto it = std::find(vertices.begin(), vertices.end(), v.get<std::string>());
      if (it == vertices.end()) fail(ErrorCode::InvalidInput, "edge names unknown vertex '" + v.get<std::string>() + "'");
      return std::size_t(it - vertices.begin());
    }
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) return v.get<std::size_t>();
    fail(ErrorCode::InvalidInput, "edge endpoints must be vertex labels or indices");
  };
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 3) fail(ErrorCode::InvalidInput, "edges must be [u, v, weight] triples");
    g.add_edge(vertex_index(e[0]), vertex_index(e[1]), value_as<Scalar>(e[2]));
  }
  return g;
}

template <typename Scalar>
UnionSpace<Scalar> read_union(MetricSpace<Scalar> space, const json& j) {
  UnionSpace<Scalar> u;
  u.space = std::move(space);
  for (const auto& part : require(j, "parts")) {
    std::vector<std::size_t> idx;
    for (const auto& i : part) {
      if (!i.is_number_integer() || i.get<std::int64_t>() < 0 || i.get<std::size_t>() >= u.space.size())
        fail(ErrorCode::InvalidInput, "part index out of range");
      idx.push_back(i.get<std::size_t>());
    }
    u.parts.push_back(std::move(idx));
  }
  if (j.contains("provenance")) {
    const auto& prov = j.at("provenance");
    for (auto it = prov.begin(); it != prov.end(); ++it) {
      const json& v = it.value();
      if (it.key() == "builder")
        u.provenance.builder = v.get<std::string>();
      else
        u.provenance.params.emplace_back(it.key(), v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
  return u;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, "'" + path.string() + "': " + e.what());
  }
}

RawSpace parse_raw_space(const json& j) {
  const json& rows = require(j, "matrix");
  if (!rows.is_array()) fail(ErrorCode::InvalidInput, "matrix must be an array of rows");
  std::vector<const json*> values;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) fail(ErrorCode::InvalidInput, "matrix is not square");
    for (const auto& v : row) values.push_back(&v);
  }
  RawSpace raw;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) fail(ErrorCode::InvalidInput, "labels must be strings");
      raw.labels.push_back(l.get<std::string>());
    }
    if (raw.labels.size() != rows.size()) fail(ErrorCode::InvalidInput, "label count does not match matrix size");
  }
  if (detect_mode(values, "matrix") == Mode::Exact)
    raw.matrix = read_matrix<Rational>(rows);
  else
    raw.matrix = read_matrix<double>(rows);
  return raw;
}

AnySpace parse_space(const json& j, double tol) {
  RawSpace raw = parse_raw_space(j);
  return std::visit(
      [&](auto& m) -> AnySpace {
        using Scalar = typename std::decay_t<decltype(m)>::Scalar;
        return MetricSpace<Scalar>(std::move(m), raw.labels, tol);
      },
      raw.matrix);
}

AnySpace load_space(const std::filesystem::path& path, double tol) { return parse_space(read_json_file(path), tol); }

std::vector<AnySpace> load_family(const std::filesystem::path& path, double tol) {
  std::vector<AnySpace> out;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_space(f, tol));
    return out;
  }
  json j = read_json_file(path);
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "family file must be a JSON array of spaces");
  for (const auto& s : j) out.push_back(parse_space(s, tol));
  return out;
}

AnyGraph parse_graph(const json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : require(j, "vertices")) {
    if (!v.is_string()) fail(ErrorCode::InvalidInput, "vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<const json*> weights;
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 3) fail(ErrorCode::InvalidInput, "edges must be [u, v, weight] triples");
    weights.push_back(&e[2]);
  }
  if (detect_mode(weights, "edge weights") == Mode::Exact) return read_graph<Rational>(j, vertices);
  return read_graph<double>(j, vertices);
}

AnyUnion parse_union(const json& j, double tol) {
  AnySpace space = parse_space(j, tol);
  return std::visit([&](auto& s) -> AnyUnion { return read_union(std::move(s), j); }, space);
}

rays::Triangle parse_triangle(const json& j) {
  const json& sides = require(j, "sides");
  if (!sides.is_array() || sides.size() != 3) fail(ErrorCode::InvalidInput, "sides must be a list of three lengths");
  std::array<double, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (sides[i].is_string())
      v[i] = exact_value(sides[i]).convert_to<double>();
    else if (sides[i].is_number())
      v[i] = sides[i].get<double>();
    else
      fail(ErrorCode::InvalidInput, "sides must be numbers");
  }
  return rays::Triangle{v[0], v[1], v[2]};
}

json to_json(const Rational& v) { return to_string(v); }
json to_json(double v) { return v; }

MetricSpace<double> to_float(const MetricSpace<Rational>& s) {
  DistanceMatrix<double> d = s.matrix().unaryExpr([](const Rational& r) { return r.convert_to<double>(); });
  return MetricSpace<double>::from_trusted(std::move(d), s.labels());
}

std::variant<std::pair<MetricSpace<Rational>, MetricSpace<Rational>>, std::pair<MetricSpace<double>, MetricSpace<double>>>
unify(const AnySpace& a, const AnySpace& b) {
  if (std::holds_alternative<MetricSpace<Rational>>(a) && std::holds_alternative<MetricSpace<Rational>>(b))
    return std::pair{std::get<MetricSpace<Rational>>(a), std::get<MetricSpace<Rational>>(b)};
  auto as_float = [](const AnySpace& s) {
    if (const auto* r = std::get_if<MetricSpace<Rational>>(&s)) return to_float(*r);
    return std::get<MetricSpace<double>>(s);
  };
  return std::pair{as_float(a), as_float(b)};
}

}  // namespace msu::io
