#ifndef SNELLFAGNANO_TESTS_SUPPORT_HPP
#define SNELLFAGNANO_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "snellfagnano/construction.hpp"
#include "snellfagnano/error.hpp"
#include "snellfagnano/geometry.hpp"
#include "snellfagnano/weights.hpp"

namespace sf::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double deg(double d) { return d * std::numbers::pi / 180.0; }

inline double min_angle(const Triangle& t) {
  return std::min({t.alpha(), t.beta(), t.gamma()});
}

// Vertices in [-1,1]^2, rejected until every angle exceeds `min_angle_rad`.
inline Triangle random_triangle(Rng& rng, double min_angle_rad = 0.15) {
  for (;;) {
    const Point2 a{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const Point2 b{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const Point2 c{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    try {
      const Triangle t = Triangle::from_vertices(a, b, c);
      if (min_angle(t) > min_angle_rad) return t;
    } catch (const Error&) {
    }
  }
}

// Acute triangle with all angles in (lo, hi) degrees, randomly rotated,
// scaled and translated.
inline Triangle random_angle_triangle(Rng& rng, double lo_deg, double hi_deg) {
  for (;;) {
    const double al = deg(uniform(rng, lo_deg, hi_deg));
    const double be = deg(uniform(rng, lo_deg, hi_deg));
    const double ga = std::numbers::pi - al - be;
    if (ga <= deg(lo_deg) || ga >= deg(hi_deg)) continue;
    const double scale = uniform(rng, 0.2, 5.0);
    const Triangle base =
        triangle_from_sides(scale * std::sin(al), scale * std::sin(be), scale * std::sin(ga));
    const double turn = uniform(rng, 0, 2 * std::numbers::pi);
    const Point2 shift{uniform(rng, -3, 3), uniform(rng, -3, 3)};
    return Triangle::from_vertices(rotated(base.A(), turn) + shift, rotated(base.B(), turn) + shift,
                                   rotated(base.C(), turn) + shift);
  }
}

inline Weights random_weights(Rng& rng, double lo = 0.5, double hi = 2.0) {
  return Weights::make(uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi));
}

struct Sample {
  Triangle t;
  Weights w;
  SnellOrbitResult r;
};

inline ConstructionOptions no_fallback() {
  ConstructionOptions o;
  o.brute_force_fallback = false;
  return o;
}

// An input whose point is strictly interior with margin and whose pedal
// feet sit strictly inside the side segments.
inline Sample admissible_sample(Rng& rng) {
  for (;;) {
    const Triangle t = random_triangle(rng);
    const Weights w = random_weights(rng);
    SnellOrbitResult r = snell_fagnano_point(t, w, {}, no_fallback());
    if (r.status != OrbitStatus::Interior || !r.orbit_on_segments) continue;
    const auto& b = *r.point_bary;
    if (std::min({b.rho_a, b.rho_b, b.rho_c}) < 1e-3) continue;
    bool margin = true;
    for (double p : r.orbit->t) margin = margin && p > 1e-3 && p < 1.0 - 1e-3;
    if (!margin) continue;
    return {t, w, std::move(r)};
  }
}

inline double rel_diff(double x, double y) {
  return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
}

}  // namespace sf::testing

#endif  // SNELLFAGNANO_TESTS_SUPPORT_HPP
