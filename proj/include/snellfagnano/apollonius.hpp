#ifndef SNELLFAGNANO_APOLLONIUS_HPP
#define SNELLFAGNANO_APOLLONIUS_HPP

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "snellfagnano/geometry.hpp"
#include "snellfagnano/weights.hpp"

namespace sf {

struct Circle {
  Point2 center;
  double radius = 0.0;
};

struct Line {
  Point2 point;
  Point2 direction;  // unit
};

// Locus of P with d(P, base1) / d(P, base2) = ratio. A circle with diameter
// MN (internal and external division points), or the perpendicular bisector
// of the base when the ratio is 1.
struct ApollonianCircle {
  Point2 base1;
  Point2 base2;
  double ratio = 1.0;
  std::variant<Circle, Line> locus;
  Point2 internal_division;
  std::optional<Point2> external_division;

  bool is_bisector() const { return std::holds_alternative<Line>(locus); }
  const Circle& circle() const { return std::get<Circle>(locus); }
  const Line& line() const { return std::get<Line>(locus); }
  // |d1 - ratio d2| / (d1 + ratio d2), zero on the locus.
  double residual(Point2 p) const;
};

ApollonianCircle apollonian_circle(Point2 p1, Point2 p2, double r, const Tolerances& tol = {});

// Tangent loci (discriminant within tol.tangency) give a single point.
std::vector<Point2> intersect(const ApollonianCircle& u, const ApollonianCircle& v,
                              const Tolerances& tol = {});

// Triangle with sides (lam_A a, lam_B b, lam_C c); angles in the same order.
struct TildeTriangle {
  std::array<double, 3> sides{};
  std::array<double, 3> angles{};
  bool exists = false;
  // (sum of the two shorter sides - longest) / longest.
  double slack = 0.0;
};

TildeTriangle tilde_triangle(const Triangle& t, const Weights& w, const Tolerances& tol = {});

// Common points of the circles for (A,B; lam_A/lam_B) and (B,C; lam_B/lam_C).
// Each point is checked against the (C,A; lam_C/lam_A) circle and an
// AssertionFailed error is raised if it is not on it.
std::vector<Point2> apollonian_common_points(const Triangle& t, const Weights& w,
                                             const Tolerances& tol = {});

Circle circumcircle(const Triangle& t);

}  // namespace sf

#endif  // SNELLFAGNANO_APOLLONIUS_HPP
