#ifndef SNELLFAGNANO_COORDINATES_HPP
#define SNELLFAGNANO_COORDINATES_HPP

#include <array>
#include <optional>
#include <vector>

#include "snellfagnano/geometry.hpp"

namespace sf {

// Homogeneous triples are kept exactly as given; normalization only happens
// when a point is materialized.

struct BarycentricCoords {
  double rho_a = 0.0;
  double rho_b = 0.0;
  double rho_c = 0.0;

  double sum() const { return rho_a + rho_b + rho_c; }
  std::array<double, 3> as_array() const { return {rho_a, rho_b, rho_c}; }
  // IdealPoint when the sum vanishes.
  BarycentricCoords normalized() const;
};

// Proportional to signed distances to BC, CA, AB.
struct TrilinearCoords {
  double l_a = 0.0;
  double l_b = 0.0;
  double l_c = 0.0;

  std::array<double, 3> as_array() const { return {l_a, l_b, l_c}; }
};

// Proportional to distances to A, B, C.
struct TripolarCoords {
  double r_A = 0.0;
  double r_B = 0.0;
  double r_C = 0.0;

  // InvalidArgument on negative, non-finite or all-zero input.
  static TripolarCoords make(double ra, double rb, double rc);
  std::array<double, 3> as_array() const { return {r_A, r_B, r_C}; }
};

BarycentricCoords to_barycentric(Point2 p, const Triangle& t);
Point2 from_barycentric(const BarycentricCoords& bc, const Triangle& t);

BarycentricCoords trilinear_to_barycentric(const TrilinearCoords& tl, const Triangle& t);
TrilinearCoords barycentric_to_trilinear(const BarycentricCoords& bc, const Triangle& t);
TrilinearCoords to_trilinear(Point2 p, const Triangle& t);

// Exact distances to the vertices, not ratio-reduced.
TripolarCoords tripolar_of_point(Point2 p, const Triangle& t);

// Componentwise inversion of trilinears. OnSideLine when the input lies on
// one of the side lines, where the map is undefined.
BarycentricCoords isogonal_conjugate(const BarycentricCoords& bc, const Triangle& t,
                                     const Tolerances& tol = {});
Point2 isogonal_conjugate(Point2 p, const Triangle& t, const Tolerances& tol = {});

// Conway bookkeeping for the reference triangle and the scaled triple
// (Xa, Yb, Zc).
struct ConwayData {
  double S_a = 0.0, S_b = 0.0, S_c = 0.0;
  double area = 0.0;
  double S_ta = 0.0, S_tb = 0.0, S_tc = 0.0;
  // Signed Heron expression 16[tilde]^2; negative when (Xa, Yb, Zc) violates
  // the triangle inequality.
  double tilde_heron = 0.0;
  bool tilde_exists = false;
  double tilde_area = 0.0;
  // (X^2 S_ta + Y^2 S_tb + Z^2 S_tc) - (a^2 Y^2 Z^2 + X^2 b^2 Z^2 + X^2 Y^2 c^2),
  // reported for reference; the root formula below does not divide by it.
  double F = 0.0;
  // Leading coefficient of G u^2 - 2 W u + (abc)^2 = 0, u = s^2.
  double G = 0.0;
  double W = 0.0;
  // s^2 = (abc)^2 / (W -+ 8 [ABC][tilde]); unset when the tilde triangle
  // does not exist or the root is at infinity.
  std::optional<double> s2_plus;
  std::optional<double> s2_minus;
};

// InvalidArgument on a bad triple; FZero when neither root is finite.
ConwayData conway_data(const Triangle& t, double X, double Y, double Z,
                       const Tolerances& tol = {});

// The line through both realizations of (X:Y:Z): normalized barycentrics
// rho(u) = (base + u * direction) / (8 [ABC]^2), u = s^2.
struct TripolarLine {
  std::array<double, 3> base{};
  std::array<double, 3> direction{};
  double normalizer = 0.0;

  BarycentricCoords at(double s2) const;
};

TripolarLine tripolar_line(const Triangle& t, const TripolarCoords& tp);

// A2 u^2 + A1 u + A0 obtained by substituting the tripolar line into the
// Apollonian locus for the vertex pair opposite `pair` (pair 0 uses B, C
// and k = Y/Z). The pair is chosen automatically so that k stays finite.
struct Biquadratic {
  double A2 = 0.0, A1 = 0.0, A0 = 0.0;
  int pair = 0;

  double operator()(double u) const { return (A2 * u + A1) * u + A0; }
  // |value| over the sum of term magnitudes.
  double relative_residual(double u) const;
};

Biquadratic apollonian_biquadratic(const Triangle& t, const TripolarCoords& tp);

struct TripolarCandidate {
  Point2 point;
  double s = 0.0;  // distances are (r_A, r_B, r_C) * s
  double s2 = 0.0;
  BarycentricCoords bary;
};

// Both closed-form roots are instantiated and kept only if the distances to
// the vertices reproduce (X, Y, Z) * s. NoSuchPoint when none survives.
std::vector<TripolarCandidate> tripolar_to_points(const TripolarCoords& tp, const Triangle& t,
                                                  const Tolerances& tol = {});

}  // namespace sf

#endif  // SNELLFAGNANO_COORDINATES_HPP
