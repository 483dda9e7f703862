#ifndef SNELLFAGNANO_CONSTRUCTION_HPP
#define SNELLFAGNANO_CONSTRUCTION_HPP

#include <array>
#include <optional>
#include <string_view>

#include "snellfagnano/apollonius.hpp"
#include "snellfagnano/coordinates.hpp"
#include "snellfagnano/geometry.hpp"
#include "snellfagnano/optimize.hpp"
#include "snellfagnano/weights.hpp"

namespace sf {

// Apexes of the triangles BA1C, AB1C, ABC1 erected outward on the sides and
// similar to the tilde triangle: A1 sees angle beta~ at B and gamma~ at C,
// and cyclically. Indexed like the sides (0 -> A1 on BC).
struct ErectedPoints {
  std::array<Point2, 3> apex{};

  Point2 A1() const { return apex[0]; }
  Point2 B1() const { return apex[1]; }
  Point2 C1() const { return apex[2]; }
};

// TildeDegenerate if the tilde triangle does not exist.
ErectedPoints erect_similar(const Triangle& t, const TildeTriangle& tt);

// angle_i + tilde_angle_i < pi - tol.angle for each vertex.
std::array<bool, 3> interior_conditions(const Triangle& t, const TildeTriangle& tt,
                                        const Tolerances& tol = {});

// Signed ratios d(V_{i+2}, X_i) / d(V_{i+1}, X_i) where X_i is the foot of
// the cevian through apex i on side i (A0 on BC gives d(C,A0)/d(B,A0)).
struct CevianRatios {
  std::array<double, 3> geometric{};
  std::array<double, 3> closed_form{};
  std::array<Point2, 3> feet{};
};

CevianRatios cevian_ratio(const Triangle& t, const Weights& w, const TildeTriangle& tt);

// |sin FCA / sin FBA - kap_a|, |sin FAB / sin FCB - kap_b|,
// |sin FBC / sin FAC - kap_c|. OnSideLine if f is on a side line.
std::array<double, 3> verify_snell_point(Point2 f, const Triangle& t, const RefractionCoeffs& k,
                                         const Tolerances& tol = {});

struct EtaResult {
  std::array<double, 3> etas{};
  double product = 0.0;
  bool product_test = false;  // |product - 1| < tol.concurrency
  bool lines_test = false;    // the three side normals meet
  bool concurrent = false;
};

// eta_a = sin(normal at A', A'B') / sin(normal at A', A'C') and cyclically.
EtaResult eta_concurrency_test(const InscribedTriangle& it, const Triangle& t,
                               const Tolerances& tol = {});

enum class OrbitStatus { Interior, Degenerate, NoTildeTriangle };
std::string_view to_string(OrbitStatus s);

// Orbit running up and down the segment from vertex `vertex` to the nearest
// point of the opposite side (the altitude foot when it lies on the side).
struct DegenerateCandidate {
  int vertex = 0;
  Point2 foot;
  bool foot_on_side = true;
  double length = 0.0;
  double weighted_cost = 0.0;
  InscribedTriangle orbit;
};

struct DegenerateFallback {
  std::array<DegenerateCandidate, 3> candidates{};
  int best_weighted = 0;
  int shortest_unweighted = 0;
  std::optional<MinimizeReport> brute_force;
};

struct SnellOrbitResult {
  OrbitStatus status = OrbitStatus::NoTildeTriangle;
  TildeTriangle tilde;
  std::optional<Point2> point;
  std::optional<BarycentricCoords> point_bary;
  std::optional<ErectedPoints> erected;
  std::array<bool, 3> conditions{};
  double concurrency_residual = 0.0;
  // Interior: pedal triangle of the point. Otherwise the cheapest
  // degenerate candidate.
  std::optional<InscribedTriangle> orbit;
  // False when the pedal feet leave the side segments (possible for an
  // interior point of an obtuse triangle).
  bool orbit_on_segments = false;
  double weighted_perimeter = 0.0;
  std::optional<DegenerateFallback> fallback;
};

struct ConstructionOptions {
  // Run minimize_inscribed for non-interior inputs.
  bool brute_force_fallback = true;
  MinimizeOptions minimize;
};

SnellOrbitResult snell_fagnano_point(const Triangle& t, const Weights& w,
                                     const Tolerances& tol = {},
                                     const ConstructionOptions& opts = {});

// Status Degenerate with the cheapest doubled-segment orbit; the brute-force
// report is attached when opts.brute_force_fallback is set.
SnellOrbitResult degenerate_minimizer(const Triangle& t, const Weights& w,
                                      const ConstructionOptions& opts = {});

}  // namespace sf

#endif  // SNELLFAGNANO_CONSTRUCTION_HPP
