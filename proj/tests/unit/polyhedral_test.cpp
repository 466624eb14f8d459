#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "toricmld/polyhedral.hpp"

using namespace toricmld;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

RatVector random_point(std::mt19937_64& rng, std::size_t n, long spread, long den) {
  RatVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(q(long(rng() % (2 * spread + 1)) - spread, 1 + long(rng() % den)));
  return v;
}

// Random polytope with 0 in its interior (or on its boundary when boundary is set).
std::vector<RatVector> random_body(std::mt19937_64& rng, std::size_t n, bool boundary) {
  std::vector<RatVector> pts;
  if (boundary) {
    pts.push_back(RatVector(n, q(0)));
    for (std::size_t i = 0; i < n + 2; ++i) {
      RatVector p = random_point(rng, n, 4, 2);
      for (auto& x : p) x = abs_of(x) + 1;
      pts.push_back(p);
    }
    return pts;
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, q(0)), f(n, q(0));
    e[i] = q(1 + long(rng() % 3), 1 + long(rng() % 2));
    f[i] = -q(1 + long(rng() % 3), 1 + long(rng() % 2));
    pts.push_back(e);
    pts.push_back(f);
  }
  for (int k = 0; k < 3; ++k) pts.push_back(random_point(rng, n, 3, 2));
  return pts;
}

std::set<RatVector> as_set(const std::vector<RatVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("support values") {
  const SupportSet a({rat_vector({1, 0}), rat_vector({0, 1})});
  CHECK(support_value(a, int_vector({2, 3})) == 2);
  const SupportSet single({rat_vector({q(1, 2), q(-3)})});
  CHECK(support_value(single, int_vector({4, 1})) == -1);
  CHECK(SupportSet({rat_vector({1}), rat_vector({1}), rat_vector({0})}).points().size() == 2);
}

TEST_CASE("support value is additive and homogeneous") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<RatVector> p1, p2;
    for (std::size_t k = 0, m = 1 + rng() % 4; k < m; ++k) p1.push_back(random_point(rng, n, 5, 3));
    for (std::size_t k = 0, m = 1 + rng() % 4; k < m; ++k) p2.push_back(random_point(rng, n, 5, 3));
    const SupportSet a(p1), b(p2);
    const Rational t = q(long(rng() % 7), 1 + long(rng() % 3));
    const RatVector e = random_point(rng, n, 5, 2);
    CHECK(support_value(a + b, e) == support_value(a, e) + support_value(b, e));
    CHECK(support_value(a.scaled(t), e) == t * support_value(a, e));
    CHECK(support_value(a, e) == oracle::min_dot(p1, e));
  }
}

TEST_CASE("polar dual examples") {
  const Polyhedron square = Polyhedron::from_generators(
      2, {rat_vector({1, 1}), rat_vector({1, -1}), rat_vector({-1, 1}), rat_vector({-1, -1})});
  const Polyhedron cross = Polyhedron::from_generators(
      2, {rat_vector({1, 0}), rat_vector({-1, 0}), rat_vector({0, 1}), rat_vector({0, -1})});
  CHECK(square.polar_dual().same_set(cross));

  const Polyhedron box = Polyhedron::from_generators(2, {rat_vector({-1, -1})}, {int_vector({1, 0}), int_vector({0, 1})});
  const Polyhedron simplex = Polyhedron::from_generators(2, {rat_vector({0, 0}), rat_vector({1, 0}), rat_vector({0, 1})});
  CHECK(box.polar_dual().same_set(simplex));

  const Polyhedron half_line = Polyhedron::from_generators(1, {rat_vector({q(-1, 3)})}, {int_vector({1})});
  CHECK(half_line.polar_dual().same_set(Polyhedron::from_generators(1, {rat_vector({0}), rat_vector({3})})));

  CHECK_THROWS_AS(Polyhedron::point(rat_vector({1, 1})).polar_dual(), Error);
}

TEST_CASE("polar double dual is the identity on bodies containing 0") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Polyhedron p = Polyhedron::from_generators(n, random_body(rng, n, trial % 3 == 0));
    CHECK(p.polar_dual().polar_dual().same_set(p));
  }
  // Cones too.
  const Polyhedron c = Polyhedron::cone(3, {int_vector({1, 0, 0}), int_vector({1, 1, 0}), int_vector({1, 0, 1}), int_vector({1, 1, 1})});
  CHECK(c.polar_dual().polar_dual().same_set(c));
  CHECK(c.dual_cone().dual_cone().same_set(c));
}

TEST_CASE("round trips between descriptions") {
  const Polyhedron unit = Polyhedron::from_generators(
      2, {rat_vector({0, 0}), rat_vector({1, 0}), rat_vector({0, 1}), rat_vector({1, 1})});
  const Polyhedron again = Polyhedron::from_inequalities(2, unit.inequalities());
  CHECK(again.same_set(unit));
  CHECK(as_set(again.vertices()) == as_set(unit.vertices()));

  const Polyhedron quadrant = Polyhedron::cone(2, {int_vector({1, 0}), int_vector({0, 1})});
  const Polyhedron q2 = Polyhedron::from_inequalities(2, quadrant.inequalities());
  CHECK(q2.same_set(quadrant));
  CHECK(q2.is_cone());
  CHECK(q2.rays().size() == 2);
}

TEST_CASE("H to V agrees with brute-force vertex enumeration") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<Inequality> hs;
    std::vector<oracle::Halfspace> ohs;
    // Bounding box keeps the polytope compact.
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, Integer(0));
      e[i] = 1;
      hs.push_back({e, q(-3)});
      hs.push_back({negated(e), q(-3)});
    }
    for (int k = 0; k < 3; ++k) {
      IntVector a(n);
      for (auto& x : a) x = long(rng() % 7) - 3;
      if (is_zero(a)) continue;
      hs.push_back({a, q(-1 - long(rng() % 4), 1 + long(rng() % 2))});
    }
    for (const auto& h : hs) ohs.push_back({to_rational(h.normal), h.offset});
    const Polyhedron p = Polyhedron::from_inequalities(n, hs);
    CHECK(as_set(p.vertices()) == as_set(oracle::vertices(n, ohs)));
    CHECK(p.is_bounded());
  }
}

TEST_CASE("V to H agrees with brute-force facet enumeration") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto pts = random_body(rng, n, false);
    const Polyhedron p = Polyhedron::from_generators(n, pts);
    std::set<std::pair<RatVector, Rational>> lib, ora;
    for (const auto& h : p.inequalities()) lib.insert({to_rational(h.normal), h.offset});
    for (const auto& h : oracle::facets(n, pts)) ora.insert({h.normal, h.offset});
    CHECK(lib == ora);
    for (int k = 0; k < 10; ++k) {
      const RatVector x = random_point(rng, n, 3, 2);
      CHECK(p.contains(x) == oracle::in_hull(n, pts, x));
    }
  }
}

TEST_CASE("recession cone of a sum with a cone") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<RatVector> pts;
    for (int k = 0; k < 3; ++k) pts.push_back(random_point(rng, n, 3, 2));
    std::vector<IntVector> rays;
    for (std::size_t k = 0; k < n; ++k) {
      IntVector r(n);
      for (auto& x : r) x = long(rng() % 3);
      if (!is_zero(r)) rays.push_back(primitive(r));
    }
    if (rays.empty()) continue;
    const Polyhedron p = Polyhedron::from_generators(n, pts).minkowski_sum(Polyhedron::cone(n, rays));
    const Polyhedron rec = Polyhedron::from_inequalities(n, p.inequalities()).recession_cone();
    CHECK(rec.same_set(Polyhedron::cone(n, rays)));
  }
}

TEST_CASE("gauge") {
  const Polyhedron simplex = Polyhedron::from_generators(2, {rat_vector({0, 0}), rat_vector({1, 0}), rat_vector({0, 1})});
  CHECK(gauge(simplex, int_vector({1, 1})) == Rational(2));
  CHECK(gauge(simplex, int_vector({1, 0})) == Rational(1));
  CHECK_FALSE(gauge(simplex, int_vector({-1, 0})).has_value());
  CHECK(gauge(simplex, int_vector({0, 0})) == Rational(0));
  CHECK_THROWS_AS(gauge(Polyhedron::cone(2, {int_vector({1, 0})}), int_vector({1, 0})), Error);
}

TEST_CASE("gauge properties") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polyhedron p = Polyhedron::from_generators(n, random_body(rng, n, trial % 2 == 0));
    for (int k = 0; k < 8; ++k) {
      const RatVector x = random_point(rng, n, 4, 3);
      const auto g = gauge(p, x);
      if (g) CHECK((*g <= 1) == p.contains(x));
      else CHECK_FALSE(p.contains(x));
      const Rational t = q(long(rng() % 5), 1 + long(rng() % 3));
      const auto gt = gauge(p, scaled(x, t));
      if (g && t > 0) {
        REQUIRE(gt);
        CHECK(*gt == t * *g);
      }
    }
  }
}

TEST_CASE("interval images") {
  const Polyhedron u = Polyhedron::from_generators(
      2, {rat_vector({0, 0}), rat_vector({1, -1}), rat_vector({0, 1}), rat_vector({-1, 1})});
  const Interval a = interval_image(int_vector({1, 1}), u);
  CHECK(*a.lo == 0);
  CHECK(*a.hi == 1);
  CHECK(a.zero == ZeroPosition::kBoundary);
  const Interval b = interval_image(int_vector({1, 0}), u);
  CHECK(*b.lo == -1);
  CHECK(*b.hi == 1);
  CHECK(b.zero == ZeroPosition::kInterior);
  const Interval c = interval_image(int_vector({0, 0}), u);
  CHECK(*c.lo == 0);
  CHECK(*c.hi == 0);
  const Interval d = interval_image(int_vector({1, 0}), Polyhedron::cone(2, {int_vector({1, 0}), int_vector({0, 1})}));
  CHECK(*d.lo == 0);
  CHECK_FALSE(d.hi.has_value());
}

TEST_CASE("lattice points") {
  const Polyhedron simplex = Polyhedron::from_generators(2, {rat_vector({0, 0}), rat_vector({1, 0}), rat_vector({0, 1})});
  const auto pts = lattice_points(simplex);
  CHECK(pts == std::vector<IntVector>{int_vector({0, 0}), int_vector({0, 1}), int_vector({1, 0})});
  CHECK(lattice_points(simplex.scaled(2)).size() == 6);
  const Polyhedron thin = Polyhedron::from_generators(2, {rat_vector({q(1, 3), q(1, 3)}), rat_vector({q(2, 3), q(1, 3)}), rat_vector({q(1, 3), q(2, 3)})});
  CHECK(lattice_points(thin).empty());
  CHECK(lattice_points(Polyhedron::empty(2)).empty());
  CHECK_THROWS_AS(lattice_points(Polyhedron::cone(2, {int_vector({1, 0})})), Error);
}

TEST_CASE("lattice points agree with an independent scan") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto pts = random_body(rng, n, trial % 2 == 0);
    auto lib = lattice_points(Polyhedron::from_generators(n, pts));
    auto ora = oracle::lattice_points(n, pts);
    std::sort(ora.begin(), ora.end());
    CHECK(std::is_sorted(lib.begin(), lib.end()));
    CHECK(lib == ora);
  }
}

TEST_CASE("strict interior") {
  const Polyhedron simplex = Polyhedron::from_generators(2, {rat_vector({0, 0}), rat_vector({1, 0}), rat_vector({0, 1})});
  CHECK(simplex.strict_interior_contains(rat_vector({q(1, 3), q(1, 3)})));
  CHECK_FALSE(simplex.strict_interior_contains(int_vector({1, 0})));
  CHECK_FALSE(simplex.strict_interior_contains(int_vector({0, 0})));
  const Polyhedron segment = Polyhedron::from_generators(2, {rat_vector({0, 0}), rat_vector({1, 0})});
  CHECK_THROWS_AS(segment.strict_interior_contains(rat_vector({q(1, 2), q(0)})), Error);
  CHECK(segment.relative_interior_contains(rat_vector({q(1, 2), q(0)})));
}

TEST_CASE("images, preimages and intersections") {
  const Polyhedron quadrant = Polyhedron::cone(2, {int_vector({1, 0}), int_vector({0, 1})});
  const IntMatrix sum = IntMatrix::from_rows(2, {int_vector({1, 1})});
  CHECK(quadrant.image(sum).same_set(Polyhedron::cone(1, {int_vector({1})})));
  const Polyhedron ray = Polyhedron::cone(1, {int_vector({1})});
  CHECK(ray.preimage(sum).same_set(Polyhedron::cone(2, {int_vector({1, -1}), int_vector({-1, 1}), int_vector({1, 0})})));
  const Polyhedron diag = Polyhedron::from_inequalities(2, {}, {{int_vector({1, -1}), q(0)}});
  CHECK(quadrant.intersect(diag).same_set(Polyhedron::cone(2, {int_vector({1, 1})})));
  CHECK(quadrant.intersect(Polyhedron::from_inequalities(2, {{int_vector({-1, 0}), q(1)}})).is_empty());
}
