#include "snellfagnano/apollonius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snellfagnano/error.hpp"

namespace sf {
namespace {

std::vector<Point2> circle_circle(const Circle& c1, const Circle& c2, double tangency) {
  const Point2 d = c2.center - c1.center;
  const double dist = norm(d);
  if (dist == 0.0) return {};
  // Radical line sits at distance `along` from c1 along d.
  // Differences of squares are factored to limit cancellation between
  // radii of very different size.
  const double along = 0.5 * (dist + (c1.radius - c2.radius) * (c1.radius + c2.radius) / dist);
  const double h2 = (c1.radius - along) * (c1.radius + along);
  const double scale = std::min(c1.radius, c2.radius);
  const Point2 mid = c1.center + (along / dist) * d;
  if (std::abs(h2) <= tangency * scale * scale) return {mid};
  if (h2 < 0.0) return {};
  const Point2 off = (std::sqrt(h2) / dist) * perp(d);
  return {mid + off, mid - off};
}

std::vector<Point2> line_circle(const Line& l, const Circle& c, double tangency) {
  const double along = dot(c.center - l.point, l.direction);
  const Point2 foot = l.point + along * l.direction;
  const double off2 = dot(c.center - foot, c.center - foot);
  const double h2 = c.radius * c.radius - off2;
  if (std::abs(h2) <= tangency * c.radius * c.radius) return {foot};
  if (h2 < 0.0) return {};
  const double h = std::sqrt(h2);
  return {foot + h * l.direction, foot - h * l.direction};
}

std::vector<Point2> line_line(const Line& l1, const Line& l2) {
  if (std::abs(cross(l1.direction, l2.direction)) <= 1e-15) return {};
  return {intersect_lines(l1.point, l1.direction, l2.point, l2.direction)};
}

}  // namespace

double ApollonianCircle::residual(Point2 p) const {
  const double d1 = distance(p, base1);
  const double d2 = ratio * distance(p, base2);
  const double den = d1 + d2;
  return den > 0.0 ? std::abs(d1 - d2) / den : 0.0;
}

ApollonianCircle apollonian_circle(Point2 p1, Point2 p2, double r, const Tolerances& tol) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "Apollonian ratio must be positive");
  }
  const double base = distance(p1, p2);
  if (!(base > tol.degenerate * std::max({1.0, norm(p1), norm(p2)}))) {
    throw Error(ErrorCode::DegenerateLine, "Apollonian base points coincide");
  }
  ApollonianCircle ac;
  ac.base1 = p1;
  ac.base2 = p2;
  ac.ratio = r;
  ac.internal_division = (p1 + r * p2) / (1.0 + r);
  if (std::abs(r - 1.0) < tol.degenerate) {
    ac.locus = Line{ac.internal_division, normalized(perp(p2 - p1))};
    return ac;
  }
  const Point2 n = (p1 - r * p2) / (1.0 - r);
  ac.external_division = n;
  ac.locus = Circle{(ac.internal_division + n) / 2.0, distance(ac.internal_division, n) / 2.0};
  return ac;
}

std::vector<Point2> intersect(const ApollonianCircle& u, const ApollonianCircle& v,
                              const Tolerances& tol) {
  if (!u.is_bisector() && !v.is_bisector()) {
    return circle_circle(u.circle(), v.circle(), tol.tangency);
  }
  if (u.is_bisector() && v.is_bisector()) return line_line(u.line(), v.line());
  if (u.is_bisector()) return line_circle(u.line(), v.circle(), tol.tangency);
  return line_circle(v.line(), u.circle(), tol.tangency);
}

TildeTriangle tilde_triangle(const Triangle& t, const Weights& w, const Tolerances& tol) {
  TildeTriangle tt;
  for (int i = 0; i < 3; ++i) tt.sides[i] = w[i] * t.side(i);
  const double longest = std::max({tt.sides[0], tt.sides[1], tt.sides[2]});
  const double total = tt.sides[0] + tt.sides[1] + tt.sides[2];
  tt.slack = ((total - longest) - longest) / longest;
  tt.exists = tt.slack > tol.degenerate;
  if (!tt.exists) return tt;
  const double p = tt.sides[0], q = tt.sides[1], r = tt.sides[2];
  const double four_area = std::sqrt(std::max(
      0.0, (p + q + r) * (-p + q + r) * (p - q + r) * (p + q - r)));
  for (int i = 0; i < 3; ++i) {
    const double opp = tt.sides[i];
    const double s1 = tt.sides[(i + 1) % 3], s2 = tt.sides[(i + 2) % 3];
    tt.angles[i] = std::atan2(four_area, s1 * s1 + s2 * s2 - opp * opp);
  }
  return tt;
}

std::vector<Point2> apollonian_common_points(const Triangle& t, const Weights& w,
                                             const Tolerances& tol) {
  std::array<ApollonianCircle, 3> cs = {
      apollonian_circle(t.A(), t.B(), w.lam_A / w.lam_B, tol),
      apollonian_circle(t.B(), t.C(), w.lam_B / w.lam_C, tol),
      apollonian_circle(t.C(), t.A(), w.lam_C / w.lam_A, tol)};
  // A ratio near 1 gives a huge, nearly flat circle whose intersections
  // cancel badly, so intersect the two tightest and check the third.
  auto radius = [](const ApollonianCircle& c) {
    return c.is_bisector() ? std::numeric_limits<double>::infinity() : c.circle().radius;
  };
  std::stable_sort(cs.begin(), cs.end(), [&](const auto& x, const auto& y) { return radius(x) < radius(y); });
  std::vector<Point2> pts = intersect(cs[0], cs[1], tol);
  for (const Point2& p : pts) {
    if (!(cs[2].residual(p) <= tol.validation)) {
      throw Error(ErrorCode::AssertionFailed,
                  "common point of two Apollonian circles misses the third");
    }
  }
  return pts;
}

Circle circumcircle(const Triangle& t) {
  // Intersection of the perpendicular bisectors of AB and BC.
  const Point2 m1 = (t.A() + t.B()) / 2.0, m2 = (t.B() + t.C()) / 2.0;
  const Point2 o = intersect_lines(m1, perp(t.B() - t.A()), m2, perp(t.C() - t.B()));
  return {o, distance(o, t.A())};
}

}  // namespace sf
