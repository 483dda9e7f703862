#ifndef SNELLFAGNANO_OPTIMIZE_HPP
#define SNELLFAGNANO_OPTIMIZE_HPP

#include <functional>

#include "snellfagnano/geometry.hpp"
#include "snellfagnano/weights.hpp"

namespace sf {

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Minimizes a unimodal f on [lo, hi] until the bracket is narrower than
// `width` or `max_iter` shrink steps have been taken.
GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                     double width = 1e-12, int max_iter = 200);

// lam_A |B'C'| + lam_B |C'A'| + lam_C |A'B'|.
double weighted_perimeter(const InscribedTriangle& it, const Weights& w);

struct MinimizeReport {
  InscribedTriangle best;
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;
  // |[A'B'C']| / [ABC]; small values mean the minimizer collapsed to a
  // doubled segment.
  double flatness = 0.0;
};

struct MinimizeOptions {
  int grid = 64;
  int refine_iters = 200;
  double step_tol = 1e-12;
};

// Brute force over (tA, tB, tC) in [0,1]^3: a coarse grid followed by cyclic
// coordinate descent, each coordinate solved by golden section, with a
// golden-section pattern move after every sweep. Uses nothing
// from the construction code so it can serve as an oracle for it.
MinimizeReport minimize_inscribed(const Triangle& t, const Weights& w,
                                  const MinimizeOptions& opts = {});

// Runs flagged with flatness below this are classified as degenerate.
inline constexpr double kFlatnessThreshold = 1e-3;

}  // namespace sf

#endif  // SNELLFAGNANO_OPTIMIZE_HPP
