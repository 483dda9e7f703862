#include "snellfagnano/coordinates.hpp"

#include <algorithm>
#include <cmath>

#include "snellfagnano/error.hpp"

namespace sf {
namespace {

// Roots whose denominator is this small relative to |W| + 8[ABC][tilde] sit
// beyond ~1e5 diameters and are treated as points at infinity.
constexpr double kInfiniteRoot = 1e-10;

std::array<double, 3> conway_s(const Triangle& t) {
  const double a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
  return {(b2 + c2 - a2) / 2.0, (c2 + a2 - b2) / 2.0, (a2 + b2 - c2) / 2.0};
}

// (p+q+r)(-p+q+r)(p-q+r)(p+q-r) = 16 * area^2, signed.
double heron16(double p, double q, double r) {
  return (p + q + r) * (-p + q + r) * (p - q + r) * (p + q - r);
}

}  // namespace

BarycentricCoords BarycentricCoords::normalized() const {
  const double s = sum();
  const double mag = std::abs(rho_a) + std::abs(rho_b) + std::abs(rho_c);
  if (!(std::abs(s) > 1e-12 * mag) || !std::isfinite(s)) {
    throw Error(ErrorCode::IdealPoint, "barycentric coordinates sum to zero");
  }
  return {rho_a / s, rho_b / s, rho_c / s};
}

TripolarCoords TripolarCoords::make(double ra, double rb, double rc) {
  for (double v : {ra, rb, rc}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "tripolar coordinates must be finite and >= 0");
    }
  }
  if (ra == 0.0 && rb == 0.0 && rc == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "tripolar coordinates are all zero");
  }
  return {ra, rb, rc};
}

BarycentricCoords to_barycentric(Point2 p, const Triangle& t) {
  const double area = t.area();
  return {signed_area(p, t.B(), t.C()) / area, signed_area(p, t.C(), t.A()) / area,
          signed_area(p, t.A(), t.B()) / area};
}

Point2 from_barycentric(const BarycentricCoords& bc, const Triangle& t) {
  const BarycentricCoords n = bc.normalized();
  return n.rho_a * t.A() + n.rho_b * t.B() + n.rho_c * t.C();
}

BarycentricCoords trilinear_to_barycentric(const TrilinearCoords& tl, const Triangle& t) {
  return {t.a() * tl.l_a, t.b() * tl.l_b, t.c() * tl.l_c};
}

TrilinearCoords barycentric_to_trilinear(const BarycentricCoords& bc, const Triangle& t) {
  return {bc.rho_a / t.a(), bc.rho_b / t.b(), bc.rho_c / t.c()};
}

TrilinearCoords to_trilinear(Point2 p, const Triangle& t) {
  // Actual signed distances: 2 [P, side] / side.
  const BarycentricCoords bc = to_barycentric(p, t);
  const double twice = 2.0 * t.area();
  return {twice * bc.rho_a / t.a(), twice * bc.rho_b / t.b(), twice * bc.rho_c / t.c()};
}

TripolarCoords tripolar_of_point(Point2 p, const Triangle& t) {
  return {distance(p, t.A()), distance(p, t.B()), distance(p, t.C())};
}

BarycentricCoords isogonal_conjugate(const BarycentricCoords& bc, const Triangle& t,
                                     const Tolerances& tol) {
  const BarycentricCoords n = bc.normalized();
  const double twice = 2.0 * t.area();
  // Normalized barycentrics give trilinears equal to the signed distances.
  const TrilinearCoords tl = barycentric_to_trilinear(n, t);
  const std::array<double, 3> dist = {twice * tl.l_a, twice * tl.l_b, twice * tl.l_c};
  for (double d : dist) {
    if (!(std::abs(d) > tol.residual * t.diameter())) {
      throw Error(ErrorCode::OnSideLine, "isogonal conjugation is undefined on the side lines");
    }
  }
  const TrilinearCoords inv{1.0 / tl.l_a, 1.0 / tl.l_b, 1.0 / tl.l_c};
  return trilinear_to_barycentric(inv, t);
}

Point2 isogonal_conjugate(Point2 p, const Triangle& t, const Tolerances& tol) {
  return from_barycentric(isogonal_conjugate(to_barycentric(p, t), t, tol), t);
}

ConwayData conway_data(const Triangle& t, double X, double Y, double Z, const Tolerances& tol) {
  TripolarCoords::make(X, Y, Z);
  const double a = t.a(), b = t.b(), c = t.c();
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double X2 = X * X, Y2 = Y * Y, Z2 = Z * Z;

  ConwayData d;
  const auto s = conway_s(t);
  d.S_a = s[0];
  d.S_b = s[1];
  d.S_c = s[2];
  d.area = t.area();

  const double ta = X * a, tb = Y * b, tc = Z * c;
  d.S_ta = (tb * tb + tc * tc - ta * ta) / 2.0;
  d.S_tb = (tc * tc + ta * ta - tb * tb) / 2.0;
  d.S_tc = (ta * ta + tb * tb - tc * tc) / 2.0;

  const double tmax = std::max({ta, tb, tc});
  const double scale4 = tmax * tmax * tmax * tmax;
  double h = heron16(ta, tb, tc);
  if (std::abs(h) <= tol.degenerate * scale4) h = 0.0;
  d.tilde_heron = h;
  d.tilde_exists = h > 0.0;
  d.tilde_area = h > 0.0 ? std::sqrt(h) / 4.0 : 0.0;

  d.F = (X2 * d.S_ta + Y2 * d.S_tb + Z2 * d.S_tc) - (a2 * Y2 * Z2 + X2 * b2 * Z2 + X2 * Y2 * c2);
  d.W = a2 * d.S_a * X2 + b2 * d.S_b * Y2 + c2 * d.S_c * Z2;
  d.G = a2 * X2 * X2 + b2 * Y2 * Y2 + c2 * Z2 * Z2 -
        2.0 * (d.S_a * Y2 * Z2 + d.S_b * Z2 * X2 + d.S_c * X2 * Y2);

  if (h < 0.0) return d;

  const double abc2 = a2 * b2 * c2;
  const double D = 8.0 * d.area * d.tilde_area;
  const double mag = std::abs(d.W) + D;
  const double den_plus = d.W - D;
  const double den_minus = d.W + D;
  const bool plus_finite = std::abs(den_plus) > kInfiniteRoot * mag;
  const bool minus_finite = std::abs(den_minus) > kInfiniteRoot * mag;
  if (!plus_finite && !minus_finite) {
    throw Error(ErrorCode::FZero, "both tripolar scale roots are singular");
  }
  if (plus_finite && den_plus > 0.0) d.s2_plus = abc2 / den_plus;
  if (minus_finite && den_minus > 0.0) d.s2_minus = abc2 / den_minus;
  return d;
}

BarycentricCoords TripolarLine::at(double s2) const {
  return {(base[0] + s2 * direction[0]) / normalizer, (base[1] + s2 * direction[1]) / normalizer,
          (base[2] + s2 * direction[2]) / normalizer};
}

TripolarLine tripolar_line(const Triangle& t, const TripolarCoords& tp) {
  const auto S = conway_s(t);
  const double X2 = tp.r_A * tp.r_A, Y2 = tp.r_B * tp.r_B, Z2 = tp.r_C * tp.r_C;
  const double a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
  TripolarLine line;
  line.base = {a2 * S[0], b2 * S[1], c2 * S[2]};
  line.direction = {S[2] * Y2 + S[1] * Z2 - a2 * X2, S[0] * Z2 + S[2] * X2 - b2 * Y2,
                    S[1] * X2 + S[0] * Y2 - c2 * Z2};
  line.normalizer = 8.0 * t.area() * t.area();
  return line;
}

double Biquadratic::relative_residual(double u) const {
  const double mag = std::abs(A2 * u * u) + std::abs(A1 * u) + std::abs(A0);
  return mag > 0.0 ? std::abs((*this)(u)) / mag : 0.0;
}

Biquadratic apollonian_biquadratic(const Triangle& t, const TripolarCoords& tp) {
  const auto r = tp.as_array();
  int p = 0;
  while (p < 3 && !(r[(p + 2) % 3] > 0.0)) ++p;
  if (p == 3) throw Error(ErrorCode::InvalidArgument, "tripolar coordinates are all zero");

  const TripolarLine line = tripolar_line(t, tp);
  const auto S = conway_s(t);
  const int i0 = p, i1 = (p + 1) % 3, i2 = (p + 2) % 3;
  const double a2 = t.side(i0) * t.side(i0);
  const double b2 = t.side(i1) * t.side(i1);
  const double c2 = t.side(i2) * t.side(i2);
  const double SB = S[i1], SC = S[i2];
  const double k = r[i1] / r[i2];
  const double k2 = k * k;
  const double al0 = line.base[i0], al1 = line.direction[i0];
  const double be0 = line.base[i1], be1 = line.direction[i1];
  const double ga0 = line.base[i2], ga1 = line.direction[i2];
  const double m = c2 - k2 * b2;

  Biquadratic q;
  q.pair = p;
  q.A2 = m * al1 * al1 + a2 * (ga1 * ga1 - k2 * be1 * be1) + 2.0 * SB * al1 * ga1 -
         2.0 * k2 * SC * al1 * be1;
  q.A1 = 2.0 * m * al0 * al1 + 2.0 * a2 * (ga0 * ga1 - k2 * be0 * be1) +
         2.0 * SB * (al0 * ga1 + al1 * ga0) - 2.0 * k2 * SC * (al0 * be1 + al1 * be0);
  q.A0 = m * al0 * al0 + a2 * (ga0 * ga0 - k2 * be0 * be0) + 2.0 * SB * al0 * ga0 -
         2.0 * k2 * SC * al0 * be0;
  return q;
}

namespace {

bool distances_match(Point2 p, const Triangle& t, const std::array<double, 3>& r, double s,
                     double rel) {
  double dmax = 0.0;
  std::array<double, 3> d{};
  for (int i = 0; i < 3; ++i) {
    d[i] = distance(p, t.vertex(i));
    dmax = std::max(dmax, d[i]);
  }
  const double bound = rel * std::max(dmax, t.diameter());
  for (int i = 0; i < 3; ++i) {
    if (!(std::abs(d[i] - r[i] * s) <= bound)) return false;
  }
  return true;
}

std::vector<TripolarCandidate> vertex_candidate(const TripolarCoords& tp, const Triangle& t,
                                                const Tolerances& tol) {
  const auto r = tp.as_array();
  const int zeros = static_cast<int>(std::count(r.begin(), r.end(), 0.0));
  if (zeros >= 2) {
    throw Error(ErrorCode::NoSuchPoint, "two vanishing vertex distances are unrealizable");
  }
  const int i = static_cast<int>(std::find(r.begin(), r.end(), 0.0) - r.begin());
  const Point2 v = t.vertex(i);
  const double s = distance(v, t.vertex(i + 1)) / r[(i + 1) % 3];
  if (!distances_match(v, t, r, s, tol.validation)) {
    throw Error(ErrorCode::NoSuchPoint, "vertex distances are not proportional to the triple");
  }
  TripolarCandidate cand;
  cand.point = v;
  cand.s = s;
  cand.s2 = s * s;
  cand.bary = to_barycentric(v, t);
  return {cand};
}

}  // namespace

std::vector<TripolarCandidate> tripolar_to_points(const TripolarCoords& tp, const Triangle& t,
                                                  const Tolerances& tol) {
  const auto r = TripolarCoords::make(tp.r_A, tp.r_B, tp.r_C).as_array();
  if (std::find(r.begin(), r.end(), 0.0) != r.end()) return vertex_candidate(tp, t, tol);

  const ConwayData cd = conway_data(t, tp.r_A, tp.r_B, tp.r_C, tol);
  const TripolarLine line = tripolar_line(t, tp);

  std::vector<TripolarCandidate> out;
  for (const auto& root : {cd.s2_minus, cd.s2_plus}) {
    if (!root) continue;
    const double u = *root;
    TripolarCandidate cand;
    cand.s2 = u;
    cand.s = std::sqrt(u);
    try {
      cand.bary = line.at(u).normalized();
    } catch (const Error&) {
      continue;
    }
    cand.point = from_barycentric(cand.bary, t);
    if (!is_finite(cand.point)) continue;
    if (!distances_match(cand.point, t, r, cand.s, tol.validation)) continue;
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const TripolarCandidate& c) {
      return distance(c.point, cand.point) <= tol.validation * t.diameter();
    });
    if (!duplicate) out.push_back(cand);
  }
  if (out.empty()) {
    throw Error(ErrorCode::NoSuchPoint, "no point has the requested vertex-distance ratios");
  }
  return out;
}

}  // namespace sf
