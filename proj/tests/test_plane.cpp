#include "doctest.h"

#include <random>
#include <set>

#include "arcs/errors.hpp"
#include "arcs/plane.hpp"
#include "oracles/oracles.hpp"

using namespace arcs;

namespace {

const std::vector<std::pair<int, int>> kOrders = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};

}  // namespace

TEST_CASE("Fano plane") {
  Plane plane(Field::build(2, 1));
  CHECK(plane.size() == 7);
  const LineIndex l = plane.line_through(plane.index_of({0, 0, 1}), plane.index_of({0, 1, 0}));
  CHECK(plane.line(l) == Triple{1, 0, 0});
  std::set<Triple> on;
  for (PointIndex p : plane.points_on(l)) on.insert(plane.point(p));
  CHECK(on == std::set<Triple>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}});
}

TEST_CASE("indexing matches a brute-force enumeration in lexicographic order") {
  for (auto [p, h] : kOrders) {
    auto field = Field::build(p, h);
    Plane plane(field);
    oracle::RefPlane ref(field);
    const int q = field.q();
    REQUIRE(plane.size() == std::size_t(q * q + q + 1));
    REQUIRE(ref.size() == int(plane.size()));
    for (int i = 0; i < ref.size(); ++i) {
      CHECK(plane.point(PointIndex(i)) == ref.point(i));
      CHECK(plane.index_of(ref.point(i)) == i);
    }
    const auto frame = plane.standard_frame();
    CHECK(plane.point(frame[0]) == Triple{0, 0, 1});
    CHECK(plane.point(frame[1]) == Triple{0, 1, 0});
    CHECK(plane.point(frame[2]) == Triple{1, 0, 0});
    CHECK(plane.point(frame[3]) == Triple{1, 1, 1});
  }
}

TEST_CASE("incidence axioms for q <= 9") {
  for (auto [p, h] : kOrders) {
    auto field = Field::build(p, h);
    Plane plane(field);
    oracle::RefPlane ref(field);
    const int q = field.q();
    const auto n = PointIndex(plane.size());
    CAPTURE(q);
    for (PointIndex l = 0; l < n; ++l) {
      REQUIRE(plane.points_on(l).size() == std::size_t(q + 1));
      REQUIRE(plane.lines_through(l).size() == std::size_t(q + 1));
      int count = 0;
      for (PointIndex x = 0; x < n; ++x) count += ref.on_line(x, plane.line(l));
      REQUIRE(count == q + 1);
      for (PointIndex x : plane.points_on(l)) REQUIRE(ref.on_line(x, plane.line(l)));
      for (LineIndex m : plane.lines_through(l)) REQUIRE(plane.incident(l, m));
    }
    for (PointIndex a = 0; a < n; ++a)
      for (PointIndex b = a + 1; b < n; ++b) {
        const LineIndex l = plane.line_through(a, b);
        REQUIRE(l == plane.line_through(b, a));
        REQUIRE(plane.incident(a, l));
        REQUIRE(plane.incident(b, l));
        int common = 0;
        for (PointIndex m = 0; m < n; ++m) common += ref.on_line(a, plane.line(m)) && ref.on_line(b, plane.line(m));
        REQUIRE(common == 1);
        // Dually, lines a and b meet in exactly one point.
        int meet = 0;
        for (PointIndex x = 0; x < n; ++x) meet += plane.incident(x, a) && plane.incident(x, b);
        REQUIRE(meet == 1);
      }
  }
}

TEST_CASE("q=3: 78 point pairs cover each line 6 times") {
  Plane plane(Field::build(3, 1));
  std::vector<int> hits(plane.size(), 0);
  int pairs = 0;
  for (PointIndex a = 0; a < plane.size(); ++a)
    for (PointIndex b = a + 1; b < plane.size(); ++b, ++pairs) ++hits[plane.line_through(a, b)];
  CHECK(pairs == 78);
  for (int h : hits) CHECK(h == 6);
}

TEST_CASE("collinearity agrees with the determinant oracle") {
  auto field = Field::build(2, 2);
  Plane plane(field);
  oracle::RefPlane ref(field);
  const auto n = PointIndex(plane.size());
  for (PointIndex a = 0; a < n; ++a)
    for (PointIndex b = a + 1; b < n; ++b)
      for (PointIndex c = b + 1; c < n; ++c) REQUIRE(plane.collinear(a, b, c) == ref.collinear(a, b, c));
  CHECK_THROWS_AS(plane.collinear(1, 1, 2), Error);
  CHECK_THROWS_AS(plane.line_through(3, 3), Error);
}

TEST_CASE("normalization is idempotent and scalar invariant, q <= 32") {
  std::mt19937_64 rng(7);
  for (auto [p, h] : std::vector<std::pair<int, int>>{{2, 1}, {5, 1}, {2, 3}, {3, 2}, {13, 1}, {2, 4}, {31, 1}, {2, 5}}) {
    Plane plane(Field::build(p, h));
    const auto& f = plane.field();
    std::uniform_int_distribution<int> elem(0, f.q() - 1), nonzero(1, f.q() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      Triple t{Elem(elem(rng)), Elem(elem(rng)), Elem(elem(rng))};
      if (t == Triple{0, 0, 0}) continue;
      const Triple n = plane.normalize(t);
      CHECK(plane.normalize(n) == n);
      const Elem s = Elem(nonzero(rng));
      CHECK(plane.normalize({f.mul(t[0], s), f.mul(t[1], s), f.mul(t[2], s)}) == n);
      CHECK(plane.index_of(t) == plane.index_of_unchecked(t[0], t[1], t[2]));
    }
  }
}

TEST_CASE("normalize rejects the zero vector and foreign codes") {
  Plane plane(Field::build(5, 1));
  CHECK_THROWS_AS(plane.normalize({0, 0, 0}), Error);
  CHECK_THROWS_AS(plane.normalize({1, 5, 0}), Error);
  CHECK(!plane.try_index({0, 0, 7}).has_value());
  CHECK(plane.try_index({0, 0, 3}) == PointIndex(0));
}

TEST_CASE("planes above the index capacity are refused") {
  CHECK_THROWS_AS(Plane(Field::build(257, 1)), Error);
}

TEST_CASE("on-demand line lookup above the dense-table limit") {
  Plane plane(Field::build(67, 1));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, int(plane.size()) - 1);
  for (int i = 0; i < 2000; ++i) {
    auto a = PointIndex(pick(rng)), b = PointIndex(pick(rng));
    if (a == b) continue;
    const LineIndex l = plane.line_through(a, b);
    CHECK(plane.incident(a, l));
    CHECK(plane.incident(b, l));
  }
}

TEST_CASE("Frobenius tables permute points and fix the prime subplane") {
  Plane plane(Field::build(2, 3));
  for (int i = 0; i < 3; ++i) {
    std::set<PointIndex> image;
    for (PointIndex x = 0; x < plane.size(); ++x) image.insert(plane.frobenius(x, i));
    CHECK(image.size() == plane.size());
  }
  for (PointIndex x : plane.standard_frame()) CHECK(plane.frobenius(x, 1) == x);
}
