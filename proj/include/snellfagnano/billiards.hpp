#ifndef SNELLFAGNANO_BILLIARDS_HPP
#define SNELLFAGNANO_BILLIARDS_HPP

#include <optional>
#include <vector>

#include "snellfagnano/error.hpp"
#include "snellfagnano/geometry.hpp"
#include "snellfagnano/weights.hpp"

namespace sf {

// A ray leaving side `side` at parameter `param`, heading into the triangle.
struct BilliardState {
  int side = 0;
  double param = 0.5;
  Point2 direction;
};

// Outgoing direction after hitting a wall with the given inward normal. The
// tangential component (signed along the counterclockwise side tangent) is
// divided by kappa, so sin(incidence) / sin(departure) = kappa and kappa = 1
// is a mirror. InvalidArgument unless the ray arrives at the wall and
// kappa > 0; TotalInternalReflection when the departure sine exceeds 1.
Point2 snell_reflect(Point2 incoming, Point2 inward_normal, double kappa);

// Next wall hit, reflected with the coefficient of the side being hit.
// HitVertex if the hit is within tol.vertex_hit of a corner (in side parameter).
BilliardState billiard_step(const BilliardState& s, const Triangle& t, const RefractionCoeffs& k,
                            const Tolerances& tol = {});

bool is_periodic(const BilliardState& start, const Triangle& t, const RefractionCoeffs& k, int n,
                 double tol);

// A run that stops at the first failure instead of throwing.
struct Trajectory {
  std::vector<BilliardState> states;  // states[0] is the start
  std::optional<ErrorCode> failure;
  int failed_step = -1;  // 1-based index of the step that failed
  std::string message;
};

Trajectory simulate(const BilliardState& start, const Triangle& t, const RefractionCoeffs& k,
                    int steps, const Tolerances& tol = {});

// Orbit-closing launch: start on side 0 at orbit.p[0] toward orbit.p[2].
// With the matching coefficients this visits sides a, c, b in turn.
BilliardState orbit_launch(const InscribedTriangle& orbit, const Triangle& t);

struct RiverInstance {
  Point2 a_pt;
  Point2 b_pt;
  Point2 line_p;
  Point2 line_q;
  double lam1 = 1.0;
  double lam2 = 1.0;

  // InvalidArgument for nonpositive weights or a degenerate line,
  // or if the villages are not strictly on the same side of the line.
  static RiverInstance make(Point2 a, Point2 b, Point2 p, Point2 q, double lam1, double lam2);
};

struct RiverSolution {
  Point2 x;
  double param = 0.0;  // signed arc length from line_p toward line_q
  double cost = 0.0;
  // |sin(angle at the B leg) / sin(angle at the A leg) - lam1/lam2|, angles
  // measured from the normal to the river. Zero when both legs are normal.
  double snell_residual = 0.0;
  // Along-line component of lam1 u_A + lam2 u_B, u_* unit vectors from the
  // village to x. Vanishes at the optimum.
  double tangential_balance = 0.0;
  int iterations = 0;
};

RiverSolution solve_river(const RiverInstance& r);

double river_cost(const RiverInstance& r, Point2 x);

}  // namespace sf

#endif  // SNELLFAGNANO_BILLIARDS_HPP
