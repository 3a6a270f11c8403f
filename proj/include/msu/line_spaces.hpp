#pragma once

#include "msu/error.hpp"
#include "msu/scalar.hpp"

#include <cmath>
#include <type_traits>
#include <optional>
#include <utility>

namespace msu {

// Subspaces of the real line: the space (-1, 0) u {1, 2, 3, ...} and the open
// unit interval.

template <typename Scalar>
Scalar floor_of(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return Rational(floor(v));
  } else {
    return std::floor(v);
  }
}

/// A point of (-1, 0) u N. Neg(s) is the real -s with s in (0, 1); Nat(n) is
/// the natural number n >= 1.
template <typename Scalar>
struct F2Point {
  enum class Kind { Neg, Nat };
  Kind kind = Kind::Nat;
  Scalar value{};

  static F2Point neg(const Scalar& s) {
    if (!(s > Scalar(0) && s < Scalar(1))) fail(ErrorCode::InvalidInput, "Neg point needs s in (0, 1)");
    return {Kind::Neg, s};
  }
  static F2Point nat(const Scalar& n) {
    if (!(n >= Scalar(1)) || floor_of(n) != n) fail(ErrorCode::InvalidInput, "Nat point needs an integer n >= 1");
    return {Kind::Nat, n};
  }

  Scalar coordinate() const { return kind == Kind::Neg ? Scalar(-value) : value; }

  friend bool operator==(const F2Point&, const F2Point&) = default;
};

/// A pair of points of (-1, 0) u N at distance exactly t. For t = n + f with
/// n >= 1 and 0 < f < 1 this is the only such pair, (-f, n). Integer t uses
/// (1, 1 + t); t < 1 uses the pair centered at -1/2.
template <typename Scalar>
std::pair<F2Point<Scalar>, F2Point<Scalar>> f2_embed_distance(const Scalar& t) {
  using P = F2Point<Scalar>;
  if (!(t > Scalar(0))) fail(ErrorCode::NonpositiveDistance, "distance must be positive");
  const Scalar n = floor_of(t);
  const Scalar frac = t - n;
  if (frac == Scalar(0)) return {P::nat(Scalar(1)), P::nat(Scalar(1) + t)};
  if (n == Scalar(0)) return {P::neg((Scalar(1) + t) / Scalar(2)), P::neg((Scalar(1) - t) / Scalar(2))};
  return {P::neg(frac), P::nat(n)};
}

/// A distance realized in (-1, 0) u N but not once q is removed.
template <typename Scalar>
Scalar f2_removal_witness(const F2Point<Scalar>& q) {
  if (q.kind == F2Point<Scalar>::Kind::Nat) return q.value + Scalar(1) / Scalar(2);
  return Scalar(1) + q.value;
}

/// A closed interval [a, a + t] inside (0, 1), avoiding the puncture p when
/// given. Without a puncture the interval is centered. With one, the side of p
/// with more room is used (the right side on a tie), centered in that side;
/// none when t >= max(p, 1 - p).
template <typename Scalar>
std::optional<std::pair<Scalar, Scalar>> interval_embed(const Scalar& t, const std::optional<Scalar>& puncture = {}) {
  const Scalar zero(0), one(1), two(2);
  if (!(t > zero && t < one)) fail(ErrorCode::LengthOutOfRange, "length must lie in (0, 1)");
  if (!puncture) {
    const Scalar delta = (one - t) / two;
    return std::pair<Scalar, Scalar>{delta, delta + t};
  }
  const Scalar& p = *puncture;
  if (!(p > zero && p < one)) fail(ErrorCode::InvalidInput, "puncture must lie in (0, 1)");
  const Scalar left_room = p;
  const Scalar right_room = one - p;
  const bool right_fits = t < right_room;
  const bool left_fits = t < left_room;
  if (right_fits && (right_room >= left_room || !left_fits)) {
    const Scalar a = p + (right_room - t) / two;
    return std::pair<Scalar, Scalar>{a, a + t};
  }
  if (left_fits) {
    const Scalar a = (left_room - t) / two;
    return std::pair<Scalar, Scalar>{a, a + t};
  }
  return std::nullopt;
}

}  // namespace msu
