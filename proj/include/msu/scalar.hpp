#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

namespace msu {

/// Exact arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator (see parse_rational for the one constructor path
/// that needs explicit canonicalization).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline constexpr double kDefaultTolerance = 1e-9;

template <typename Scalar>
using DistanceMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Comparison policy for a scalar type. Exact types compare exactly and ignore
/// the tolerance; floating types use max(tol, tol * max(|a|, |b|)).
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* name = "exact";

  static bool eq(const Rational& a, const Rational& b, double = kDefaultTolerance) { return a == b; }
  static bool lt(const Rational& a, const Rational& b, double = kDefaultTolerance) { return a < b; }
  static bool le(const Rational& a, const Rational& b, double = kDefaultTolerance) { return a <= b; }
  static double to_double(const Rational& a) { return a.convert_to<double>(); }
  static Rational from_double(double v) { return Rational(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool is_exact = false;
  static constexpr const char* name = "float";

  static double slack(double a, double b, double tol) {
    return std::max(tol, tol * std::max(std::abs(a), std::abs(b)));
  }
  static bool eq(double a, double b, double tol = kDefaultTolerance) {
    return std::abs(a - b) <= slack(a, b, tol);
  }
  static bool lt(double a, double b, double tol = kDefaultTolerance) {
    return a < b - slack(a, b, tol);
  }
  static bool le(double a, double b, double tol = kDefaultTolerance) {
    return a <= b + slack(a, b, tol);
  }
  static double to_double(double a) { return a; }
  static double from_double(double v) { return v; }
};

template <typename Scalar>
bool approx_eq(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance) {
  return ScalarTraits<Scalar>::eq(a, b, tol);
}
template <typename Scalar>
bool approx_lt(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance) {
  return ScalarTraits<Scalar>::lt(a, b, tol);
}
template <typename Scalar>
bool approx_le(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance) {
  return ScalarTraits<Scalar>::le(a, b, tol);
}
template <typename Scalar>
double to_double(const Scalar& a) {
  return ScalarTraits<Scalar>::to_double(a);
}

template <typename Scalar>
Scalar abs_diff(const Scalar& a, const Scalar& b) {
  return a < b ? Scalar(b - a) : Scalar(a - b);
}

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "1.25" into an exact
/// rational in lowest terms. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(double value);

Integer floor(const Rational& value);

}  // namespace msu
