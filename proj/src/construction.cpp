#include "snellfagnano/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "snellfagnano/error.hpp"

namespace sf {
namespace {

// sin of the angle at `v` between rays v->p and v->q.
double angle_sine(Point2 v, Point2 p, Point2 q) {
  const Point2 u = p - v, w = q - v;
  return std::abs(cross(u, w)) / (norm(u) * norm(w));
}

// Above this, a barycentric coordinate of F disagreeing with the angle test
// is a convention error rather than rounding.
constexpr double kInteriorDisagreement = 1e-8;

}  // namespace

std::string_view to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Interior: return "interior";
    case OrbitStatus::Degenerate: return "degenerate";
    case OrbitStatus::NoTildeTriangle: return "no_tilde_triangle";
  }
  return "unknown";
}

ErectedPoints erect_similar(const Triangle& t, const TildeTriangle& tt) {
  if (!tt.exists) {
    throw Error(ErrorCode::TildeDegenerate, "tilde triangle does not exist");
  }
  ErectedPoints e;
  for (int i = 0; i < 3; ++i) {
    const Point2 from = t.side_start(i);
    const Point2 dir = (t.side_end(i) - from) / t.side(i);
    // Clockwise turn puts the apex on the far side of the side from vertex i.
    const double turn = -tt.angles[(i + 1) % 3];
    const double reach = t.side(i) * std::sin(tt.angles[(i + 2) % 3]) / std::sin(tt.angles[i]);
    e.apex[i] = from + reach * rotated(dir, turn);
  }
  return e;
}

std::array<bool, 3> interior_conditions(const Triangle& t, const TildeTriangle& tt,
                                        const Tolerances& tol) {
  if (!tt.exists) {
    throw Error(ErrorCode::TildeDegenerate, "tilde triangle does not exist");
  }
  std::array<bool, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = t.angle(i) + tt.angles[i] < std::numbers::pi - tol.angle;
  return out;
}

CevianRatios cevian_ratio(const Triangle& t, const Weights& w, const TildeTriangle& tt) {
  const ErectedPoints e = erect_similar(t, tt);
  CevianRatios r;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const Point2 from = t.side_start(i), to = t.side_end(i);
    r.feet[i] = intersect_lines(t.vertex(i), e.apex[i] - t.vertex(i), from, to - from);
    const double tau = projection_param(r.feet[i], from, to);
    r.geometric[i] = (1.0 - tau) / tau;
    const double sj = t.side(j), sk = t.side(k);
    r.closed_form[i] = (w[j] * sj * sj * std::sin(t.angle(k) + tt.angles[k])) /
                       (w[k] * sk * sk * std::sin(t.angle(j) + tt.angles[j]));
  }
  return r;
}

std::array<double, 3> verify_snell_point(Point2 f, const Triangle& t, const RefractionCoeffs& k,
                                         const Tolerances& tol) {
  for (int i = 0; i < 3; ++i) {
    if (!(distance_to_line(f, t.side_start(i), t.side_end(i)) > tol.residual * t.diameter())) {
      throw Error(ErrorCode::OnSideLine, "point lies on a side line");
    }
  }
  const Point2 A = t.A(), B = t.B(), C = t.C();
  return {std::abs(angle_sine(C, f, A) / angle_sine(B, f, A) - k.kap_a),
          std::abs(angle_sine(A, f, B) / angle_sine(C, f, B) - k.kap_b),
          std::abs(angle_sine(B, f, C) / angle_sine(A, f, C) - k.kap_c)};
}

EtaResult eta_concurrency_test(const InscribedTriangle& it, const Triangle& t,
                               const Tolerances& tol) {
  EtaResult r;
  std::array<Point2, 3> normal{};
  for (int i = 0; i < 3; ++i) {
    normal[i] = t.inward_normal(i);
    const Point2 here = it.p[i];
    // Chord toward the next inscribed vertex over the chord toward the previous.
    const Point2 next = normalized(it.p[(i + 1) % 3] - here);
    const Point2 prev = normalized(it.p[(i + 2) % 3] - here);
    r.etas[i] = std::abs(cross(normal[i], next)) / std::abs(cross(normal[i], prev));
  }
  r.product = r.etas[0] * r.etas[1] * r.etas[2];
  r.product_test = std::abs(r.product - 1.0) < tol.concurrency;
  try {
    const Point2 q = intersect_lines(it.p[0], normal[0], it.p[1], normal[1]);
    const double dist = std::abs(cross(normal[2], q - it.p[2]));
    const double scale = std::max(t.diameter(), distance(q, it.p[2]));
    r.lines_test = dist <= tol.concurrency * scale;
  } catch (const Error&) {
    r.lines_test = false;
  }
  r.concurrent = r.product_test && r.lines_test;
  return r;
}

SnellOrbitResult degenerate_minimizer(const Triangle& t, const Weights& w,
                                      const ConstructionOptions& opts) {
  DegenerateFallback fb;
  for (int v = 0; v < 3; ++v) {
    DegenerateCandidate& c = fb.candidates[v];
    c.vertex = v;
    const double tau = projection_param(t.vertex(v), t.side_start(v), t.side_end(v));
    c.foot_on_side = tau >= 0.0 && tau <= 1.0;
    const double clamped = std::clamp(tau, 0.0, 1.0);
    c.foot = t.point_on_side(v, clamped);
    c.length = c.foot_on_side ? 2.0 * t.area() / t.side(v) : distance(t.vertex(v), c.foot);
    c.weighted_cost = (w[v + 1] + w[v + 2]) * c.length;
    // Both other inscribed points sit on vertex v: the end of side v+1 and
    // the start of side v+2.
    std::array<double, 3> params{};
    params[v] = clamped;
    params[(v + 1) % 3] = 1.0;
    params[(v + 2) % 3] = 0.0;
    c.orbit = InscribedTriangle::from_params(t, params[0], params[1], params[2]);
  }
  for (int v = 1; v < 3; ++v) {
    if (fb.candidates[v].weighted_cost < fb.candidates[fb.best_weighted].weighted_cost) {
      fb.best_weighted = v;
    }
    if (fb.candidates[v].length < fb.candidates[fb.shortest_unweighted].length) {
      fb.shortest_unweighted = v;
    }
  }
  if (opts.brute_force_fallback) fb.brute_force = minimize_inscribed(t, w, opts.minimize);

  SnellOrbitResult res;
  res.status = OrbitStatus::Degenerate;
  res.orbit = fb.candidates[fb.best_weighted].orbit;
  res.orbit_on_segments = res.orbit->on_segments();
  res.weighted_perimeter = fb.candidates[fb.best_weighted].weighted_cost;
  res.fallback = std::move(fb);
  return res;
}

SnellOrbitResult snell_fagnano_point(const Triangle& t, const Weights& w, const Tolerances& tol,
                                     const ConstructionOptions& opts) {
  const TildeTriangle tt = tilde_triangle(t, w, tol);
  if (!tt.exists) {
    SnellOrbitResult res = degenerate_minimizer(t, w, opts);
    res.status = OrbitStatus::NoTildeTriangle;
    res.tilde = tt;
    return res;
  }

  const ErectedPoints e = erect_similar(t, tt);
  const std::array<bool, 3> conds = interior_conditions(t, tt, tol);

  std::optional<Point2> f;
  double residual = 0.0;
  try {
    f = intersect_lines(t.A(), e.A1() - t.A(), t.B(), e.B1() - t.B());
  } catch (const Error&) {
    // AA1 parallel to BB1: the concurrency point is at infinity.
  }
  if (f) {
    const Point2 c1 = e.C1();
    const double scale = std::max(t.diameter(), distance(*f, t.C()));
    residual = distance_to_line(*f, t.C(), c1) / scale;
    if (!(residual <= tol.concurrency)) {
      throw Error(ErrorCode::ConcurrencyViolation, "cevian CC1 misses AA1 x BB1");
    }
  }

  const bool conds_hold = conds[0] && conds[1] && conds[2];
  std::optional<BarycentricCoords> bary;
  if (f) bary = to_barycentric(*f, t);

  if (bary) {
    const double lowest = std::min({bary->rho_a, bary->rho_b, bary->rho_c});
    bool clearly_violated = false;
    for (int i = 0; i < 3; ++i) {
      clearly_violated |= t.angle(i) + tt.angles[i] > std::numbers::pi + tol.angle;
    }
    if ((conds_hold && lowest < -kInteriorDisagreement) ||
        (clearly_violated && lowest > kInteriorDisagreement)) {
      throw Error(ErrorCode::AssertionFailed,
                  "angle conditions and barycentric positivity disagree");
    }
  }

  SnellOrbitResult res;
  if (conds_hold && bary && std::min({bary->rho_a, bary->rho_b, bary->rho_c}) > 0.0) {
    res.status = OrbitStatus::Interior;
    res.orbit = pedal_triangle(*f, t);
    res.orbit_on_segments = res.orbit->on_segments();
    res.weighted_perimeter = weighted_perimeter(*res.orbit, w);
  } else {
    res = degenerate_minimizer(t, w, opts);
  }
  res.tilde = tt;
  res.point = f;
  res.point_bary = bary;
  res.erected = e;
  res.conditions = conds;
  res.concurrency_residual = residual;
  return res;
}

}  // namespace sf
