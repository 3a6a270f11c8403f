#include "msu/line_spaces.hpp"

#include <doctest.h>

#include <vector>

using msu::Rational;
using P = msu::F2Point<Rational>;

namespace {

Rational r(const char* s) { return msu::parse_rational(s); }

/// Points of (-1, 0) u N with Neg coordinates on the grid 1/den and naturals up
/// to top, optionally without one point.
std::vector<P> window(int den, int top, const std::optional<P>& removed = {}) {
  std::vector<P> pts;
  for (int k = 1; k < den; ++k) pts.push_back(P::neg(Rational(k) / Rational(den)));
  for (int n = 1; n <= top; ++n) pts.push_back(P::nat(Rational(n)));
  if (removed) std::erase(pts, *removed);
  return pts;
}

int realizing_pairs(const std::vector<P>& pts, const Rational& t) {
  int count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (msu::abs_diff(pts[i].coordinate(), pts[j].coordinate()) == t) ++count;
  return count;
}

}  // namespace

TEST_SUITE("f2_embed_distance") {
  TEST_CASE("5/2 splits as -1/2 and 2") {
    auto [a, b] = msu::f2_embed_distance(r("5/2"));
    CHECK(a == P::neg(r("1/2")));
    CHECK(b == P::nat(2));
    CHECK(b.coordinate() - a.coordinate() == r("5/2"));
    CHECK(realizing_pairs(window(2, 4), r("5/2")) == 1);
  }
  TEST_CASE("integers use 1 and 1 + t") {
    auto [a, b] = msu::f2_embed_distance(Rational(3));
    CHECK(a == P::nat(1));
    CHECK(b == P::nat(4));
  }
  TEST_CASE("below 1 the pair is centered at -1/2") {
    auto [a, b] = msu::f2_embed_distance(r("1/4"));
    CHECK(a == P::neg(r("5/8")));
    CHECK(b == P::neg(r("3/8")));
    CHECK(b.coordinate() - a.coordinate() == r("1/4"));
    CHECK((a.coordinate() + b.coordinate()) / 2 == r("-1/2"));
  }
  TEST_CASE("nonpositive distance") {
    try {
      msu::f2_embed_distance(Rational(0));
      FAIL("expected NonpositiveDistance");
    } catch (const msu::Error& e) {
      CHECK(e.code() == msu::ErrorCode::NonpositiveDistance);
    }
  }
  TEST_CASE("point ranges") {
    CHECK_THROWS_AS(P::neg(Rational(1)), msu::Error);
    CHECK_THROWS_AS(P::nat(Rational(0)), msu::Error);
    CHECK_THROWS_AS(P::nat(r("3/2")), msu::Error);
  }
  TEST_CASE("float mode") {
    auto [a, b] = msu::f2_embed_distance(2.5);
    CHECK(a.value == doctest::Approx(0.5));
    CHECK(b.value == 2);
  }
}

TEST_SUITE("f2_removal_witness") {
  TEST_CASE("Nat(2) gives 5/2 with the single pair (-1/2, 2)") {
    const auto q = P::nat(2);
    const Rational t = msu::f2_removal_witness(q);
    CHECK(t == r("5/2"));
    CHECK(realizing_pairs(window(2, 4), t) == 1);
    CHECK(realizing_pairs(window(2, 4, q), t) == 0);
  }
  TEST_CASE("Neg(1/2) gives 3/2 with the single pair (-1/2, 1)") {
    const auto q = P::neg(r("1/2"));
    const Rational t = msu::f2_removal_witness(q);
    CHECK(t == r("3/2"));
    CHECK(realizing_pairs(window(2, 4), t) == 1);
    CHECK(realizing_pairs(window(2, 4, q), t) == 0);
  }
  TEST_CASE("Nat(1) gives 3/2") {
    const auto q = P::nat(1);
    CHECK(msu::f2_removal_witness(q) == r("3/2"));
    CHECK(realizing_pairs(window(2, 4, q), r("3/2")) == 0);
  }
}

TEST_SUITE("interval_embed") {
  TEST_CASE("centered without a puncture") {
    auto iv = msu::interval_embed(r("1/2"));
    REQUIRE(iv);
    CHECK(iv->first == r("1/4"));
    CHECK(iv->second == r("3/4"));
  }
  TEST_CASE("too long for either side of 1/2") { CHECK_FALSE(msu::interval_embed(r("9/10"), std::optional(r("1/2")))); }
  TEST_CASE("fits right of the puncture") {
    auto iv = msu::interval_embed(r("3/10"), std::optional(r("1/2")));
    REQUIRE(iv);
    CHECK(iv->first == r("3/5"));
    CHECK(iv->second == r("9/10"));
  }
  TEST_CASE("uses the left side when only it fits") {
    auto iv = msu::interval_embed(r("1/2"), std::optional(r("4/5")));
    REQUIRE(iv);
    CHECK(iv->first == r("3/20"));
    CHECK(iv->second == r("13/20"));
  }
  TEST_CASE("touching the puncture is rejected") {
    CHECK_FALSE(msu::interval_embed(r("1/2"), std::optional(r("1/2"))));
  }
  TEST_CASE("length out of range") {
    try {
      msu::interval_embed(Rational(1));
      FAIL("expected LengthOutOfRange");
    } catch (const msu::Error& e) {
      CHECK(e.code() == msu::ErrorCode::LengthOutOfRange);
    }
  }
}
