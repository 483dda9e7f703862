#ifndef SNELLFAGNANO_GEOMETRY_HPP
#define SNELLFAGNANO_GEOMETRY_HPP

#include <array>
#include <cmath>

#include "snellfagnano/tolerances.hpp"

namespace sf {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point2 operator-(Point2 p) { return {-p.x, -p.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }
  friend constexpr bool operator==(Point2 p, Point2 q) = default;
};

constexpr double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 p, Point2 q) { return norm(p - q); }
inline Point2 normalized(Point2 p) { return p / norm(p); }
// Counterclockwise quarter turn.
constexpr Point2 perp(Point2 p) { return {-p.y, p.x}; }
inline Point2 rotated(Point2 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Half the cross product; positive iff (p, q, r) is counterclockwise.
double signed_area(Point2 p, Point2 q, Point2 r);

// Vertices are indexed 0=A, 1=B, 2=C. Side i is opposite vertex i and is
// traversed from vertex i+1 to vertex i+2, so a=BC, b=CA, c=AB all run
// counterclockwise around a canonical triangle.
class Triangle {
 public:
  // Reorients to counterclockwise by swapping B and C when needed.
  // Throws DegenerateTriangle when |[ABC]| <= tol.degenerate * diameter^2.
  static Triangle from_vertices(Point2 a, Point2 b, Point2 c,
                                const Tolerances& tol = {});

  Point2 A() const { return v_[0]; }
  Point2 B() const { return v_[1]; }
  Point2 C() const { return v_[2]; }
  Point2 vertex(int i) const { return v_[wrap(i)]; }
  const std::array<Point2, 3>& vertices() const { return v_; }

  double a() const { return side_[0]; }
  double b() const { return side_[1]; }
  double c() const { return side_[2]; }
  double side(int i) const { return side_[wrap(i)]; }
  const std::array<double, 3>& sides() const { return side_; }

  double alpha() const { return angle_[0]; }
  double beta() const { return angle_[1]; }
  double gamma() const { return angle_[2]; }
  double angle(int i) const { return angle_[wrap(i)]; }
  const std::array<double, 3>& angles() const { return angle_; }

  double area() const { return area_; }
  double diameter() const;
  // True when the vertices had to be swapped to get counterclockwise order.
  bool reoriented() const { return reoriented_; }

  Point2 side_start(int i) const { return vertex(i + 1); }
  Point2 side_end(int i) const { return vertex(i + 2); }
  Point2 point_on_side(int i, double t) const {
    return side_start(i) + t * (side_end(i) - side_start(i));
  }
  Point2 inward_normal(int i) const {
    return normalized(perp(side_end(i) - side_start(i)));
  }

  static constexpr int wrap(int i) { return ((i % 3) + 3) % 3; }

 private:
  Triangle() = default;

  std::array<Point2, 3> v_{};
  std::array<double, 3> side_{};
  std::array<double, 3> angle_{};
  double area_ = 0.0;
  bool reoriented_ = false;
};

// Three points, one on each side line: p[0] on BC, p[1] on CA, p[2] on AB.
// t[i] is the affine parameter along side i (Triangle::point_on_side).
struct InscribedTriangle {
  std::array<Point2, 3> p{};
  std::array<double, 3> t{};

  static InscribedTriangle from_params(const Triangle& tri, double ta, double tb, double tc);
  bool on_segments(double slack = 0.0) const;
};

// Canonical placement: B=(0,0), C=(a,0), A in the upper half-plane.
Triangle triangle_from_sides(double a, double b, double c, const Tolerances& tol = {});

Point2 foot_of_perpendicular(Point2 p, Point2 q1, Point2 q2, const Tolerances& tol = {});

// Parameter of the orthogonal projection of p on the line q1 + t (q2 - q1).
double projection_param(Point2 p, Point2 q1, Point2 q2);

// Feet of p on the three full side lines.
InscribedTriangle pedal_triangle(Point2 p, const Triangle& t);

struct Altitude {
  Point2 foot;
  double length = 0.0;
};

// Altitude i drops from vertex i onto side i; length = 2 [ABC] / side_i.
std::array<Altitude, 3> altitudes(const Triangle& t);

// Intersection of the lines p1 + s d1 and p2 + s d2. Parallel lines throw
// DegenerateLine.
Point2 intersect_lines(Point2 p1, Point2 d1, Point2 p2, Point2 d2);

double distance_to_line(Point2 p, Point2 q1, Point2 q2);

Point2 orthocenter(const Triangle& t);

}  // namespace sf

#endif  // SNELLFAGNANO_GEOMETRY_HPP
