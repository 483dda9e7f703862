#include "snellfagnano/billiards.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snellfagnano/optimize.hpp"

namespace sf {

Point2 snell_reflect(Point2 incoming, Point2 inward_normal, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::InvalidArgument, "refraction coefficient must be positive");
  }
  if (!(dot(incoming, inward_normal) < 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "ray does not arrive at the wall");
  }
  // inward_normal is the counterclockwise quarter turn of the side tangent.
  const Point2 tangent = -perp(inward_normal);
  const double s_out = dot(incoming, tangent) / kappa;
  if (std::abs(s_out) > 1.0) {
    throw Error(ErrorCode::TotalInternalReflection, "departure sine exceeds one");
  }
  return s_out * tangent + std::sqrt(1.0 - s_out * s_out) * inward_normal;
}

BilliardState billiard_step(const BilliardState& s, const Triangle& t, const RefractionCoeffs& k,
                            const Tolerances& tol) {
  const Point2 origin = t.point_on_side(s.side, s.param);
  int hit = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  double best_u = 0.0;
  for (int j = 0; j < 3; ++j) {
    if (j == Triangle::wrap(s.side)) continue;
    const Point2 from = t.side_start(j);
    const Point2 edge = t.side_end(j) - from;
    const double den = cross(s.direction, edge);
    if (den == 0.0) continue;
    const Point2 rel = from - origin;
    const double dist = cross(rel, edge) / den;
    const double u = cross(rel, s.direction) / den;
    // Hits slightly past a corner are kept so they raise HitVertex below.
    if (dist <= 0.0 || u < -tol.vertex_hit || u > 1.0 + tol.vertex_hit) continue;
    if (dist < best_dist) {
      best_dist = dist;
      best_u = u;
      hit = j;
    }
  }
  if (hit < 0) {
    throw Error(ErrorCode::HitVertex, "ray leaves through a corner");
  }
  if (best_u < tol.vertex_hit || best_u > 1.0 - tol.vertex_hit) {
    throw Error(ErrorCode::HitVertex, "ray hits a vertex");
  }
  BilliardState next;
  next.side = hit;
  next.param = best_u;
  next.direction = snell_reflect(s.direction, t.inward_normal(hit), k[hit]);
  return next;
}

bool is_periodic(const BilliardState& start, const Triangle& t, const RefractionCoeffs& k, int n,
                 double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "step count must be positive");
  BilliardState s = start;
  for (int i = 0; i < n; ++i) s = billiard_step(s, t, k);
  return Triangle::wrap(s.side) == Triangle::wrap(start.side) &&
         std::abs(s.param - start.param) < tol && norm(s.direction - start.direction) < tol;
}

Trajectory simulate(const BilliardState& start, const Triangle& t, const RefractionCoeffs& k,
                    int steps, const Tolerances& tol) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "step count must be positive");
  Trajectory tr;
  tr.states.push_back(start);
  for (int i = 1; i <= steps; ++i) {
    try {
      tr.states.push_back(billiard_step(tr.states.back(), t, k, tol));
    } catch (const Error& e) {
      tr.failure = e.code();
      tr.failed_step = i;
      tr.message = e.what();
      break;
    }
  }
  return tr;
}

BilliardState orbit_launch(const InscribedTriangle& orbit, const Triangle& t) {
  (void)t;
  return {0, orbit.t[0], normalized(orbit.p[2] - orbit.p[0])};
}

RiverInstance RiverInstance::make(Point2 a, Point2 b, Point2 p, Point2 q, double lam1,
                                  double lam2) {
  for (double v : {lam1, lam2}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "river weights must be positive and finite");
    }
  }
  const Point2 d = q - p;
  if (!(norm(d) > 0.0)) throw Error(ErrorCode::DegenerateLine, "river line points coincide");
  const double sa = cross(d, a - p), sb = cross(d, b - p);
  if (!(sa * sb > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "villages must lie strictly on one side of the river");
  }
  return {a, b, p, q, lam1, lam2};
}

double river_cost(const RiverInstance& r, Point2 x) {
  return r.lam1 * distance(r.a_pt, x) + r.lam2 * distance(r.b_pt, x);
}

RiverSolution solve_river(const RiverInstance& r) {
  const Point2 u = normalized(r.line_q - r.line_p);
  auto at = [&](double s) { return r.line_p + s * u; };
  auto cost = [&](double s) { return river_cost(r, at(s)); };
  // Derivative of the cost along the line.
  auto slope = [&](double s) {
    const Point2 x = at(s);
    double g = 0.0;
    if (x != r.a_pt) g += r.lam1 * dot(u, normalized(x - r.a_pt));
    if (x != r.b_pt) g += r.lam2 * dot(u, normalized(x - r.b_pt));
    return g;
  };

  const double fa = dot(r.a_pt - r.line_p, u), fb = dot(r.b_pt - r.line_p, u);
  const double ha = std::abs(cross(u, r.a_pt - r.line_p));
  const double hb = std::abs(cross(u, r.b_pt - r.line_p));
  const double pad = 0.1 * std::max({std::abs(fb - fa), ha, hb});
  double lo = std::min(fa, fb) - pad, hi = std::max(fa, fb) + pad;

  const double span = hi - lo;
  const GoldenResult g = golden_section_minimize(cost, lo, hi, 1e-13 * span, 400);
  double s = g.x;
  int iters = g.iterations;

  // Golden section pins the argmin only to about sqrt(eps) relative because
  // the cost is flat there. Bisect on the slope sign to finish.
  double left = std::max(lo, s - 1e-6 * span), right = std::min(hi, s + 1e-6 * span);
  if (!(slope(left) < 0.0 && slope(right) > 0.0)) {
    left = lo;
    right = hi;
  }
  if (slope(left) < 0.0 && slope(right) > 0.0) {
    for (int i = 0; i < 200 && right - left > 0.0; ++i, ++iters) {
      const double mid = 0.5 * (left + right);
      if (mid <= left || mid >= right) break;
      (slope(mid) < 0.0 ? left : right) = mid;
    }
    s = std::abs(slope(left)) < std::abs(slope(right)) ? left : right;
  }

  RiverSolution sol;
  sol.param = s;
  sol.x = at(s);
  sol.cost = cost(s);
  sol.iterations = iters;
  sol.tangential_balance = slope(s);
  const double sin_a = sol.x == r.a_pt ? 0.0 : std::abs(dot(u, normalized(sol.x - r.a_pt)));
  const double sin_b = sol.x == r.b_pt ? 0.0 : std::abs(dot(u, normalized(sol.x - r.b_pt)));
  if (sin_a > 0.0) {
    sol.snell_residual = std::abs(sin_b / sin_a - r.lam1 / r.lam2);
  } else {
    sol.snell_residual = sin_b;
  }
  return sol;
}

}  // namespace sf
