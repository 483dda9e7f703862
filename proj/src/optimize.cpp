#include "snellfagnano/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snellfagnano/error.hpp"

namespace sf {

GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                     double width, int max_iter) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (std::abs(b - a) > width && it < max_iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  // Include the endpoints so a minimizer sitting on the boundary is found.
  GoldenResult best{c, fc, it};
  if (fd < best.fx) best = {d, fd, it};
  for (double x : {(a + b) / 2.0, lo, hi}) {
    const double fx = f(x);
    if (fx < best.fx) best = {x, fx, it};
  }
  return best;
}

double weighted_perimeter(const InscribedTriangle& it, const Weights& w) {
  return w.lam_A * distance(it.p[1], it.p[2]) + w.lam_B * distance(it.p[2], it.p[0]) +
         w.lam_C * distance(it.p[0], it.p[1]);
}

MinimizeReport minimize_inscribed(const Triangle& t, const Weights& w,
                                  const MinimizeOptions& opts) {
  if (opts.grid < 16) throw Error(ErrorCode::InvalidArgument, "grid must be at least 16");

  auto cost = [&](const std::array<double, 3>& s) {
    return weighted_perimeter(InscribedTriangle::from_params(t, s[0], s[1], s[2]), w);
  };

  std::array<double, 3> best{};
  double best_cost = std::numeric_limits<double>::infinity();
  // Cell centers, not corners: a grid point with two feet on a shared vertex
  // sits on a kink of the cost where coordinate descent stalls.
  const double step = 1.0 / opts.grid;
  for (int i = 0; i < opts.grid; ++i) {
    for (int j = 0; j < opts.grid; ++j) {
      for (int k = 0; k < opts.grid; ++k) {
        const std::array<double, 3> s = {(i + 0.5) * step, (j + 0.5) * step, (k + 0.5) * step};
        const double c = cost(s);
        if (c < best_cost) {
          best_cost = c;
          best = s;
        }
      }
    }
  }

  MinimizeReport rep;
  int sweep = 0;
  for (; sweep < opts.refine_iters; ++sweep) {
    double moved = 0.0;
    const std::array<double, 3> start = best;
    for (int axis = 0; axis < 3; ++axis) {
      auto along = [&](double x) {
        auto s = best;
        s[axis] = x;
        return cost(s);
      };
      const GoldenResult g = golden_section_minimize(along, 0.0, 1.0);
      if (g.fx < best_cost) {
        moved = std::max(moved, std::abs(g.x - best[axis]));
        best[axis] = g.x;
        best_cost = g.fx;
      }
    }
    // Pattern move along this sweep's net displacement. Coordinate descent
    // alone zig-zags for thousands of sweeps in narrow valleys.
    const std::array<double, 3> d = {best[0] - start[0], best[1] - start[1], best[2] - start[2]};
    double reach = std::numeric_limits<double>::infinity();
    for (int axis = 0; axis < 3; ++axis) {
      if (d[axis] > 0.0) reach = std::min(reach, (1.0 - best[axis]) / d[axis]);
      if (d[axis] < 0.0) reach = std::min(reach, -best[axis] / d[axis]);
    }
    if (moved > 0.0 && std::isfinite(reach) && reach > 0.0) {
      auto along = [&](double a) {
        return cost({best[0] + a * d[0], best[1] + a * d[1], best[2] + a * d[2]});
      };
      const GoldenResult g = golden_section_minimize(along, 0.0, reach);
      if (g.fx < best_cost) {
        for (int axis = 0; axis < 3; ++axis) best[axis] += g.x * d[axis];
        best_cost = g.fx;
      }
    }
    if (moved < opts.step_tol) {
      rep.converged = true;
      ++sweep;
      break;
    }
  }

  rep.best = InscribedTriangle::from_params(t, best[0], best[1], best[2]);
  rep.cost = weighted_perimeter(rep.best, w);
  rep.iterations = sweep;
  rep.flatness = std::abs(signed_area(rep.best.p[0], rep.best.p[1], rep.best.p[2])) / t.area();
  return rep;
}

}  // namespace sf
