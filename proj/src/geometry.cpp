#include "snellfagnano/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "snellfagnano/error.hpp"

namespace sf {

double signed_area(Point2 p, Point2 q, Point2 r) {
  return 0.5 * cross(q - p, r - p);
}

Triangle Triangle::from_vertices(Point2 a, Point2 b, Point2 c, const Tolerances& tol) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite vertex coordinate");
  }
  Triangle t;
  t.v_ = {a, b, c};
  const double diam = t.diameter();
  const double area = signed_area(a, b, c);
  if (!(std::abs(area) > tol.degenerate * diam * diam)) {
    throw Error(ErrorCode::DegenerateTriangle, "vertices are collinear");
  }
  if (area < 0.0) {
    std::swap(t.v_[1], t.v_[2]);
    t.reoriented_ = true;
  }
  t.area_ = std::abs(area);
  for (int i = 0; i < 3; ++i) {
    t.side_[i] = distance(t.side_start(i), t.side_end(i));
    const Point2 u = t.vertex(i + 1) - t.vertex(i);
    const Point2 w = t.vertex(i + 2) - t.vertex(i);
    t.angle_[i] = std::atan2(std::abs(cross(u, w)), dot(u, w));
  }
  return t;
}

double Triangle::diameter() const {
  return std::max({distance(v_[0], v_[1]), distance(v_[1], v_[2]),
                   distance(v_[2], v_[0])});
}

InscribedTriangle InscribedTriangle::from_params(const Triangle& tri, double ta,
                                                 double tb, double tc) {
  InscribedTriangle it;
  it.t = {ta, tb, tc};
  for (int i = 0; i < 3; ++i) it.p[i] = tri.point_on_side(i, it.t[i]);
  return it;
}

bool InscribedTriangle::on_segments(double slack) const {
  return std::all_of(t.begin(), t.end(),
                     [slack](double s) { return s >= -slack && s <= 1.0 + slack; });
}

Triangle triangle_from_sides(double a, double b, double c, const Tolerances& tol) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0) || !std::isfinite(a + b + c)) {
    throw Error(ErrorCode::InvalidArgument, "side lengths must be positive and finite");
  }
  const double longest = std::max({a, b, c});
  const double slack = (a + b + c - longest) - longest;
  if (!(slack > tol.degenerate * longest)) {
    throw Error(ErrorCode::TriangleInequalityViolated,
                "longest side is not shorter than the sum of the other two");
  }
  const double x = (c * c + a * a - b * b) / (2.0 * a);
  const double y = std::sqrt(std::max(0.0, c * c - x * x));
  return Triangle::from_vertices({x, y}, {0.0, 0.0}, {a, 0.0}, tol);
}

double projection_param(Point2 p, Point2 q1, Point2 q2) {
  const Point2 d = q2 - q1;
  return dot(p - q1, d) / dot(d, d);
}

Point2 foot_of_perpendicular(Point2 p, Point2 q1, Point2 q2, const Tolerances& tol) {
  const double len = distance(q1, q2);
  const double scale = std::max({1.0, norm(q1), norm(q2)});
  if (!(len > tol.degenerate * scale)) {
    throw Error(ErrorCode::DegenerateLine, "line through coincident points");
  }
  return q1 + projection_param(p, q1, q2) * (q2 - q1);
}

InscribedTriangle pedal_triangle(Point2 p, const Triangle& t) {
  InscribedTriangle it;
  for (int i = 0; i < 3; ++i) {
    it.t[i] = projection_param(p, t.side_start(i), t.side_end(i));
    it.p[i] = t.point_on_side(i, it.t[i]);
  }
  return it;
}

std::array<Altitude, 3> altitudes(const Triangle& t) {
  std::array<Altitude, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i].foot = foot_of_perpendicular(t.vertex(i), t.side_start(i), t.side_end(i));
    out[i].length = 2.0 * t.area() / t.side(i);
  }
  return out;
}

Point2 intersect_lines(Point2 p1, Point2 d1, Point2 p2, Point2 d2) {
  const double den = cross(d1, d2);
  if (std::abs(den) <= 1e-15 * norm(d1) * norm(d2)) {
    throw Error(ErrorCode::DegenerateLine, "parallel lines do not intersect");
  }
  return p1 + (cross(p2 - p1, d2) / den) * d1;
}

double distance_to_line(Point2 p, Point2 q1, Point2 q2) {
  const Point2 d = q2 - q1;
  return std::abs(cross(d, p - q1)) / norm(d);
}

Point2 orthocenter(const Triangle& t) {
  // Altitude lines from A and B are perpendicular to BC and CA.
  return intersect_lines(t.A(), perp(t.C() - t.B()), t.B(), perp(t.A() - t.C()));
}

}  // namespace sf
