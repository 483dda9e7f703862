#ifndef SNELLFAGNANO_TOLERANCES_HPP
#define SNELLFAGNANO_TOLERANCES_HPP

namespace sf {

// All thresholds are relative: lengths scale with the triangle diameter,
// areas with its square.
struct Tolerances {
  double degenerate = 1e-12;    // signed area / diameter^2, side slack
  double residual = 1e-10;      // on-line membership, pedal orthogonality
  double angle = 1e-10;         // strictness of the interior conditions
  double concurrency = 1e-9;    // cevian concurrency, Snell residuals
  double validation = 1e-8;     // tripolar candidates, Apollonian membership
  double tangency = 1e-10;      // circle intersection discriminant
  double vertex_hit = 1e-10;    // billiard hits within this of a corner
};

}  // namespace sf

#endif  // SNELLFAGNANO_TOLERANCES_HPP
