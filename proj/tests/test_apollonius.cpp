#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "snellfagnano/apollonius.hpp"
#include "snellfagnano/error.hpp"
#include "support.hpp"

using namespace sf;
using namespace sf::testing;

TEST(ApollonianCircle, RatioTwo) {
  const auto ac = apollonian_circle({0, 0}, {3, 0}, 2);
  ASSERT_FALSE(ac.is_bisector());
  EXPECT_NEAR(ac.internal_division.x, 2, 1e-15);
  ASSERT_TRUE(ac.external_division.has_value());
  EXPECT_NEAR(ac.external_division->x, 6, 1e-15);
  EXPECT_NEAR(ac.circle().center.x, 4, 1e-15);
  EXPECT_NEAR(ac.circle().center.y, 0, 1e-15);
  EXPECT_NEAR(ac.circle().radius, 2, 1e-15);
}

TEST(ApollonianCircle, RatioHalfMirrors) {
  const auto ac = apollonian_circle({0, 0}, {3, 0}, 0.5);
  EXPECT_NEAR(ac.circle().center.x, -1, 1e-15);
  EXPECT_NEAR(ac.circle().radius, 2, 1e-15);
}

TEST(ApollonianCircle, UnitRatioIsBisector) {
  const auto ac = apollonian_circle({1, 1}, {3, 1}, 1);
  ASSERT_TRUE(ac.is_bisector());
  EXPECT_NEAR(ac.line().point.x, 2, 1e-15);
  EXPECT_NEAR(std::abs(ac.line().direction.y), 1, 1e-15);
}

TEST(ApollonianCircle, BadInput) {
  EXPECT_THROW(apollonian_circle({0, 0}, {0, 0}, 2), Error);
  EXPECT_THROW(apollonian_circle({0, 0}, {1, 0}, 0), Error);
  EXPECT_THROW(apollonian_circle({0, 0}, {1, 0}, -1), Error);
}

TEST(ApollonianCircle, LocusProperty) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const Point2 p1{uniform(rng, -2, 2), uniform(rng, -2, 2)};
    const Point2 p2{uniform(rng, -2, 2), uniform(rng, -2, 2)};
    const double r = uniform(rng, 0.2, 5);
    const auto ac = apollonian_circle(p1, p2, r);
    if (ac.is_bisector()) continue;
    const Circle& c = ac.circle();
    // M and N are diametrically opposite.
    EXPECT_LT(rel_diff(distance(ac.internal_division, *ac.external_division), 2 * c.radius), 1e-10);
    for (int k = 0; k < 8; ++k) {
      const double th = uniform(rng, 0, 2 * std::numbers::pi);
      const Point2 p = c.center + c.radius * Point2{std::cos(th), std::sin(th)};
      EXPECT_NEAR(distance(p, p1) / distance(p, p2), r, 1e-10 * std::max(1.0, r));
    }
  }
}

TEST(Intersect, CircleCircleAndTangency) {
  const auto u = apollonian_circle({0, 0}, {3, 0}, 2);     // center (4,0), r 2
  const auto v = apollonian_circle({8, 0}, {11, 0}, 0.5);  // center (7,0), r 2
  const auto pts = intersect(u, v);
  ASSERT_EQ(pts.size(), 2u);
  for (const auto& p : pts) {
    EXPECT_LT(u.residual(p), 1e-14);
    EXPECT_LT(v.residual(p), 1e-14);
  }
  const auto far = apollonian_circle({20, 0}, {23, 0}, 0.5);
  EXPECT_TRUE(intersect(u, far).empty());
  // Centers (4,0) and (8,0), radii 2: tangent at (6,0).
  const auto w = apollonian_circle({9, 0}, {12, 0}, 0.5);
  const auto t = intersect(u, w);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_NEAR(t[0].x, 6, 1e-12);
}

TEST(Intersect, WithBisectors) {
  const auto l1 = apollonian_circle({0, 0}, {2, 0}, 1);
  const auto l2 = apollonian_circle({0, 0}, {0, 2}, 1);
  const auto pts = intersect(l1, l2);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(pts[0].x, 1, 1e-15);
  EXPECT_NEAR(pts[0].y, 1, 1e-15);
  const auto c = apollonian_circle({0, 0}, {3, 0}, 2);
  const auto lc = intersect(apollonian_circle({3, -1}, {5, -1}, 1), c);  // x = 4 through center
  ASSERT_EQ(lc.size(), 2u);
  for (const auto& p : lc) EXPECT_NEAR(std::abs(p.y), 2, 1e-14);
}

TEST(Tilde, Examples) {
  Rng rng(32);
  const Triangle t = random_angle_triangle(rng, 45, 80);
  const TildeTriangle same = tilde_triangle(t, {1, 1, 1});
  ASSERT_TRUE(same.exists);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(same.angles[i], t.angle(i), 1e-12);

  const Triangle eq = triangle_from_sides(1, 1, 1);
  EXPECT_FALSE(tilde_triangle(eq, {1, 1, 2}).exists);
  EXPECT_FALSE(tilde_triangle(eq, {10, 1, 1}).exists);

  const TildeTriangle regular = tilde_triangle(t, {1 / t.a(), 1 / t.b(), 1 / t.c()});
  ASSERT_TRUE(regular.exists);
  for (double a : regular.angles) EXPECT_NEAR(a, std::numbers::pi / 3, 1e-12);
}

TEST(Tilde, AngleSumAndLawOfCosines) {
  Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = random_triangle(rng);
    const TildeTriangle tt = tilde_triangle(t, random_weights(rng, 0.3, 3));
    if (!tt.exists) continue;
    EXPECT_NEAR(tt.angles[0] + tt.angles[1] + tt.angles[2], std::numbers::pi, 1e-12);
    const auto& s = tt.sides;
    const double lhs = s[0] * s[0];
    const double rhs = s[1] * s[1] + s[2] * s[2] - 2 * s[1] * s[2] * std::cos(tt.angles[0]);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::max({s[0], s[1], s[2]}) * std::max({s[0], s[1], s[2]}));
  }
}

TEST(CommonPoints, UnitWeightsGiveCircumcenter) {
  Rng rng(34);
  const Triangle t = random_angle_triangle(rng, 45, 80);
  const auto pts = apollonian_common_points(t, {1, 1, 1});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_LT(distance(pts[0], circumcircle(t).center), 1e-12 * t.diameter());
}

TEST(CommonPoints, DegenerateTildeGivesOnePointOnCircumcircle) {
  // lam_C c = lam_A a + lam_B b exactly.
  const Triangle t = triangle_from_sides(3, 4, 5);
  const Weights w{1.0, 1.0, 7.0 / 5.0};
  const auto pts = apollonian_common_points(t, w);
  ASSERT_EQ(pts.size(), 1u);
  const Circle cc = circumcircle(t);
  EXPECT_LT(std::abs(distance(pts[0], cc.center) - cc.radius), 1e-6 * cc.radius);
}

TEST(CommonPoints, AkopyanEquivalenceAndInversion) {
  Rng rng(35);
  int with_two = 0;
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = random_triangle(rng);
    const Weights w = random_weights(rng, 0.3, 3);
    const TildeTriangle tt = tilde_triangle(t, w);
    if (std::abs(tt.slack) <= 1e-6) continue;
    const auto pts = apollonian_common_points(t, w);
    EXPECT_EQ(!pts.empty(), tt.exists);
    if (pts.size() == 2) {
      ++with_two;
      const Circle cc = circumcircle(t);
      const Point2 p = pts[0] - cc.center, q = pts[1] - cc.center;
      EXPECT_LT(rel_diff(norm(p) * norm(q), cc.radius * cc.radius), 1e-8);
      EXPECT_LT(std::abs(cross(p, q)), 1e-8 * norm(p) * norm(q));
      EXPECT_GT(dot(p, q), 0.0);
    }
  }
  EXPECT_GT(with_two, 100);
}

TEST(CommonPoints, PtolemyInequality) {
  Rng rng(36);
  for (int i = 0; i < 300; ++i) {
    const Triangle t = random_triangle(rng);
    const auto pts = apollonian_common_points(t, random_weights(rng));
    for (const Point2& p : pts) {
      const double da = distance(p, t.A()), db = distance(p, t.B()), dc = distance(p, t.C());
      const double slack = 1e-9 * t.diameter() * t.diameter();
      EXPECT_LE(t.a() * da, t.b() * db + t.c() * dc + slack);
      EXPECT_LE(t.b() * db, t.c() * dc + t.a() * da + slack);
      EXPECT_LE(t.c() * dc, t.a() * da + t.b() * db + slack);
    }
  }
}

TEST(CommonPoints, OrthogonalToCircumcircle) {
  Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    const Triangle t = random_triangle(rng);
    const Circle cc = circumcircle(t);
    const double r = uniform(rng, 0.3, 3);
    const int k = static_cast<int>(uniform(rng, 0, 3));
    const auto ac = apollonian_circle(t.vertex(k), t.vertex(k + 1), r);
    if (ac.is_bisector()) continue;
    const Circle& c = ac.circle();
    const double d2 = dot(cc.center - c.center, cc.center - c.center);
    EXPECT_LT(rel_diff(d2, cc.radius * cc.radius + c.radius * c.radius), 1e-8);
  }
}

TEST(Circumcircle, Examples) {
  EXPECT_NEAR(circumcircle(triangle_from_sides(1, 1, 1)).radius, 1 / std::sqrt(3.0), 1e-15);
  const Triangle t = triangle_from_sides(3, 4, 5);
  const Circle c = circumcircle(t);
  EXPECT_NEAR(c.radius, 2.5, 1e-14);
  EXPECT_LT(distance(c.center, (t.A() + t.B()) / 2), 1e-14);
  Rng rng(38);
  for (int i = 0; i < 200; ++i) {
    const Triangle r = random_triangle(rng);
    const Circle rc = circumcircle(r);
    for (int k = 0; k < 3; ++k) {
      EXPECT_LT(std::abs(distance(rc.center, r.vertex(k)) - rc.radius), 1e-12 * rc.radius);
    }
  }
}

TEST(CommonPoints, NearUnitRatioStaysAccurate) {
  Rng rng(39);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    const double base = uniform(rng, 0.5, 2);
    const Weights w{base, base * (1 + uniform(rng, -1e-5, 1e-5)), uniform(rng, 0.5, 2)};
    if (!tilde_triangle(t, w).exists) continue;
    std::vector<Point2> pts;
    ASSERT_NO_THROW(pts = apollonian_common_points(t, w));
    for (const Point2& p : pts) {
      for (int k = 0; k < 3; ++k) {
        const auto ac = apollonian_circle(t.vertex(k), t.vertex(k + 1), w[k] / w[k + 1]);
        EXPECT_LT(ac.residual(p), 1e-11);
      }
    }
  }
}
