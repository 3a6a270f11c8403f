#include "support/oracles.hpp"

#include "msu/classify.hpp"
#include "msu/embedding.hpp"
#include "msu/error.hpp"

#include <doctest.h>

using msu::MetricSpace;
using msu::Rational;

namespace {

Rational r(const char* s) { return msu::parse_rational(s); }

// The three-point space Z with d(z1,z2)=1, d(z2,z3)=2, d(z1,z3)=3/2.
MetricSpace<Rational> space_z() { return msu::space_from_upper<Rational>(3, {1, r("3/2"), 2}); }

MetricSpace<Rational> pair(const Rational& d) { return msu::space_from_upper<Rational>(2, {d}); }

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("rationals parse to lowest terms") {
    CHECK(msu::to_string(r("3/6")) == "1/2");
    CHECK(msu::to_string(r("-4/8")) == "-1/2");
    CHECK(msu::to_string(r("1.25")) == "5/4");
    CHECK(msu::to_string(r("0.9")) == "9/10");
    CHECK(msu::to_string(r("007")) == "7");
    CHECK(msu::to_string(r("10/05")) == "2");
    CHECK(msu::to_string(r(" 12 ")) == "12");
    CHECK_THROWS_AS(r("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(r("abc"), std::invalid_argument);
    CHECK_THROWS_AS(r("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(r(""), std::invalid_argument);
  }

  TEST_CASE("floor rounds toward minus infinity") {
    CHECK(msu::floor(r("5/2")) == 2);
    CHECK(msu::floor(r("-5/2")) == -3);
    CHECK(msu::floor(r("3")) == 3);
    CHECK(msu::floor(r("-3")) == -3);
  }

  TEST_CASE("float comparisons use absolute or relative slack") {
    CHECK(msu::approx_eq(1.0, 1.0 + 1e-10));
    CHECK_FALSE(msu::approx_eq(1.0, 1.0 + 1e-8));
    CHECK(msu::approx_eq(1e6, 1e6 + 1e-4));
    CHECK(msu::approx_lt(1.0, 1.1));
    CHECK_FALSE(msu::approx_lt(1.0, 1.0 + 1e-12));
    CHECK(msu::approx_le(1.0 + 1e-12, 1.0));
  }
}

TEST_SUITE("validate_space") {
  TEST_CASE("equilateral triple is valid") {
    auto d = msu::equilateral<Rational>(3, 1).matrix();
    auto res = msu::validate_space<Rational>(d);
    CHECK(res.valid());
    CHECK(res.violations.empty());
  }

  TEST_CASE("distances 1, 1, 3 violate the triangle inequality") {
    auto d = msu::from_upper<Rational>(3, std::vector<Rational>{1, 3, 1});
    auto res = msu::validate_space<Rational>(d);
    REQUIRE_FALSE(res.valid());
    REQUIRE(res.violations.size() == 1);
    CHECK(res.violations[0].axiom == msu::Axiom::TriangleViolation);
    CHECK(res.violations[0].i == 0);
    CHECK(res.violations[0].j == 1);
    CHECK(res.violations[0].k == 2);
  }

  TEST_CASE("the space Z is valid") { CHECK(space_z().size() == 3); }

  TEST_CASE("each axiom is reported by name") {
    msu::DistanceMatrix<Rational> d = space_z().matrix();
    d(0, 1) = 2;
    auto res = msu::validate_space<Rational>(d);
    REQUIRE_FALSE(res.valid());
    CHECK(res.violations[0].axiom == msu::Axiom::Asymmetry);

    d = space_z().matrix();
    d(1, 1) = 1;
    CHECK(msu::validate_space<Rational>(d).violations[0].axiom == msu::Axiom::NonzeroDiagonal);

    d = space_z().matrix();
    d(0, 1) = d(1, 0) = 0;
    CHECK(msu::validate_space<Rational>(d).violations[0].axiom == msu::Axiom::NonpositiveOffDiagonal);
  }

  TEST_CASE("the constructor rejects invalid input") {
    auto d = msu::from_upper<Rational>(3, std::vector<Rational>{1, 3, 1});
    CHECK_THROWS_AS(MetricSpace<Rational>{d}, msu::Error);
    CHECK_THROWS_AS(MetricSpace<Rational>(space_z().matrix(), {"a", "a", "b"}), msu::Error);
    CHECK_THROWS_AS(MetricSpace<Rational>(space_z().matrix(), {"a", "b"}), msu::Error);
  }

  TEST_CASE("float tolerance absorbs rounding") {
    msu::DistanceMatrix<double> d(3, 3);
    d << 0, 0.1 + 0.2, 0.3, 0.3, 0, 0.6, 0.3, 0.6, 0;
    d(1, 0) = 0.3;
    CHECK(msu::validate_space<double>(d).valid());
  }

  TEST_CASE("the empty space is valid") {
    msu::DistanceMatrix<Rational> d(0, 0);
    CHECK(msu::validate_space<Rational>(d).valid());
  }
}

TEST_SUITE("classify_space") {
  TEST_CASE("equilateral triple") {
    auto f = msu::classify_space(msu::equilateral<Rational>(3, 1));
    CHECK(f.ultrametric);
    CHECK(f.discrete);
    CHECK_FALSE(f.strongly_rigid);
    CHECK(f.homogeneous);
  }

  TEST_CASE("triple 1, 2, 3 is strongly rigid") {
    auto f = msu::classify_space(msu::line_space<Rational>({0, 1, 3}));
    CHECK(f.strongly_rigid);
    CHECK_FALSE(f.ultrametric);
    CHECK_FALSE(f.homogeneous);
  }

  TEST_CASE("triple 1, 2, 2 is ultrametric") {
    auto x = msu::space_from_upper<Rational>(3, {1, 2, 2});
    auto f = msu::classify_space(x);
    CHECK(f.ultrametric == oracle::strong_triangle(x));
    CHECK(f.ultrametric);
    CHECK_FALSE(f.strongly_rigid);
    CHECK_FALSE(f.discrete);
  }

  TEST_CASE("square with equal diagonals is homogeneous but not ultrametric") {
    auto sq = msu::space_from_upper<Rational>(4, {1, 2, 1, 1, 2, 1});
    auto f = msu::classify_space(sq);
    CHECK(f.homogeneous);
    CHECK_FALSE(f.ultrametric);
  }
}

TEST_SUITE("find_embeddings") {
  TEST_CASE("a subspace embeds by the identity") {
    auto y = space_z();
    std::vector<std::size_t> idx{0, 1};
    auto x = y.subspace(idx);
    auto maps = msu::find_embeddings(x, y);
    CHECK(std::find(maps.begin(), maps.end(), msu::PointMap{{0, 1}}) != maps.end());
  }

  TEST_CASE("equilateral into itself: six maps, matching brute force") {
    auto e = msu::equilateral<Rational>(3, 1);
    auto maps = msu::find_embeddings(e, e);
    CHECK(maps.size() == 6);
    auto brute = oracle::all_embeddings(e, e);
    REQUIRE(brute.size() == maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) CHECK(maps[i].image == brute[i]);
  }

  TEST_CASE("pair at distance 1 into Z: two maps") {
    auto maps = msu::find_embeddings(pair(1), space_z());
    REQUIRE(maps.size() == 2);
    CHECK(maps[0].image == std::vector<std::size_t>{0, 1});
    CHECK(maps[1].image == std::vector<std::size_t>{1, 0});
    CHECK(oracle::all_embeddings(pair(1), space_z()).size() == 2);
  }

  TEST_CASE("limit truncates in order") {
    auto e = msu::equilateral<Rational>(3, 1);
    msu::EmbeddingOptions o;
    o.limit = 2;
    auto maps = msu::find_embeddings(e, e, o);
    REQUIRE(maps.size() == 2);
    CHECK(maps[1].image == std::vector<std::size_t>{0, 2, 1});
  }

  TEST_CASE("parallel search returns the sequential order") {
    oracle::Engine rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      auto y = oracle::random_band_space(rng, 6, 2);
      std::vector<std::size_t> idx{0, 2, 3};
      auto x = y.subspace(idx);
      msu::EmbeddingOptions par;
      par.parallel = 3;
      CHECK(msu::find_embeddings(x, y) == msu::find_embeddings(x, y, par));
    }
  }

  TEST_CASE("empty domain embeds once, nonempty never into empty") {
    MetricSpace<Rational> empty(msu::DistanceMatrix<Rational>(0, 0));
    CHECK(msu::find_embeddings(empty, space_z()).size() == 1);
    CHECK(msu::find_embeddings(space_z(), empty).empty());
  }

  TEST_CASE("float spaces embed within tolerance") {
    msu::DistanceMatrix<double> a(2, 2), b(3, 3);
    a << 0, 0.3, 0.3, 0;
    b << 0, 0.1 + 0.2, 1, 0.1 + 0.2, 0, 1, 1, 1, 0;
    CHECK(msu::find_embeddings(MetricSpace<double>(a), MetricSpace<double>(b)).size() == 2);
  }
}

TEST_SUITE("compare") {
  TEST_CASE("pairs at distances 1 and 2 are incomparable") {
    CHECK(msu::compare(pair(1), pair(2)) == msu::Comparability::Incomparable);
  }
  TEST_CASE("a space compared with itself") {
    CHECK(msu::compare(space_z(), space_z()) == msu::Comparability::BothEmbed);
  }
  TEST_CASE("pair at distance 1 into triple 1, 2, 3") {
    auto t = msu::line_space<Rational>({0, 1, 3});
    CHECK(msu::compare(pair(1), t) == msu::Comparability::LeftEmbeds);
    CHECK(msu::compare(t, pair(1)) == msu::Comparability::RightEmbeds);
  }
}

TEST_SUITE("is_not_shifted") {
  TEST_CASE("equilateral triple has six isometries") {
    auto rep = msu::is_not_shifted(msu::equilateral<Rational>(3, 1));
    CHECK(rep.not_shifted);
    CHECK(rep.isometries.size() == 6);
  }
  TEST_CASE("single point has one isometry") {
    auto rep = msu::is_not_shifted(msu::equilateral<Rational>(1, 1));
    CHECK(rep.not_shifted);
    CHECK(rep.isometries.size() == 1);
  }
  TEST_CASE("triple 1, 2, 3 has only the identity") {
    auto rep = msu::is_not_shifted(msu::line_space<Rational>({0, 1, 3}));
    REQUIRE(rep.isometries.size() == 1);
    CHECK(rep.isometries[0].image == std::vector<std::size_t>{0, 1, 2});
  }
}

TEST_SUITE("maps") {
  TEST_CASE("embedding and bijection checks") {
    auto z = space_z();
    CHECK(msu::is_embedding(msu::PointMap{{1, 0}}, pair(1), z));
    CHECK_FALSE(msu::is_embedding(msu::PointMap{{0, 2}}, pair(1), z));
    CHECK_FALSE(msu::is_embedding(msu::PointMap{{0, 0}}, pair(1), z));
    CHECK(msu::is_bijection(msu::PointMap{{2, 0, 1}}, 3));
    CHECK_FALSE(msu::is_bijection(msu::PointMap{{2, 0, 0}}, 3));
    CHECK(msu::compose(msu::PointMap{{2, 0, 1}}, msu::PointMap{{1, 2}}).image == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("embedding images collapse reorderings") {
    auto images = msu::embedding_images(pair(1), space_z());
    REQUIRE(images.size() == 1);
    CHECK(images[0] == std::vector<std::size_t>{0, 1});
  }
}
