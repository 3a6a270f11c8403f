#pragma once

#include "msu/graph.hpp"
#include "msu/metric_space.hpp"
#include "msu/rays.hpp"
#include "msu/unions.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace msu::io {

using json = nlohmann::ordered_json;

/// A metric space in whichever arithmetic its file selected.
using AnySpace = std::variant<MetricSpace<Rational>, MetricSpace<double>>;
using AnyMatrix = std::variant<DistanceMatrix<Rational>, DistanceMatrix<double>>;
using AnyGraph = std::variant<WeightedGraph<Rational>, WeightedGraph<double>>;
using AnyUnion = std::variant<UnionSpace<Rational>, UnionSpace<double>>;

struct RawSpace {
  std::vector<std::string> labels;
  AnyMatrix matrix;
};

json read_json_file(const std::filesystem::path& path);

/// Scalars: a JSON number selects float mode; a "p/q" or decimal string
/// selects exact mode. JSON integers are accepted in either mode.
RawSpace parse_raw_space(const json& j);
AnySpace parse_space(const json& j, double tol = kDefaultTolerance);
AnySpace load_space(const std::filesystem::path& path, double tol = kDefaultTolerance);

/// A JSON array of spaces, or a directory of space files read in filename order.
std::vector<AnySpace> load_family(const std::filesystem::path& path, double tol = kDefaultTolerance);

AnyGraph parse_graph(const json& j);
AnyUnion parse_union(const json& j, double tol = kDefaultTolerance);
rays::Triangle parse_triangle(const json& j);

json to_json(const Rational& v);
json to_json(double v);

template <typename Scalar>
json matrix_to_json(const DistanceMatrix<Scalar>& d) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < d.cols(); ++j) row.push_back(to_json(d(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Scalar>
json space_to_json(const MetricSpace<Scalar>& s) {
  json j;
  j["labels"] = s.labels();
  j["matrix"] = matrix_to_json(s.matrix());
  return j;
}

template <typename Scalar>
json union_to_json(const UnionSpace<Scalar>& u) {
  json j = space_to_json(u.space);
  j["parts"] = u.parts;
  json prov;
  prov["builder"] = u.provenance.builder;
  for (const auto& [k, v] : u.provenance.params) prov[k] = v;
  j["provenance"] = std::move(prov);
  return j;
}

/// Converts an exact space to binary64 (used when inputs mix modes).
MetricSpace<double> to_float(const MetricSpace<Rational>& s);

/// Brings two spaces to a common arithmetic: exact only if both are exact.
std::variant<std::pair<MetricSpace<Rational>, MetricSpace<Rational>>, std::pair<MetricSpace<double>, MetricSpace<double>>>
unify(const AnySpace& a, const AnySpace& b);

}  // namespace msu::io
