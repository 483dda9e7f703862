#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "snellfagnano/apollonius.hpp"
#include "snellfagnano/billiards.hpp"
#include "snellfagnano/cli/app.hpp"
#include "snellfagnano/cli/svg.hpp"
#include "snellfagnano/construction.hpp"
#include "snellfagnano/coordinates.hpp"
#include "snellfagnano/error.hpp"
#include "snellfagnano/optimize.hpp"

namespace sf::cli {
namespace {

constexpr const char* kVertexNames[3] = {"A", "B", "C"};
constexpr const char* kSideNames[3] = {"a", "b", "c"};

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }

// ---- input ----

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) bad(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(what + " must be finite");
  return v;
}

int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<int>();
}

Point2 point(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) bad(what + " must be [x, y]");
  return {number(j[0], what), number(j[1], what)};
}

std::array<double, 3> triple(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) bad(what + " must have three entries");
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

const Json& field(const Json& spec, const char* key) {
  if (!spec.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return spec.at(key);
}

Triangle parse_triangle(const Json& spec, const Tolerances& tol) {
  const Json& t = field(spec, "triangle");
  if (!t.is_object()) bad("triangle must be an object");
  const bool by_vertices = t.contains("vertices"), by_sides = t.contains("sides");
  if (by_vertices == by_sides) bad("triangle needs exactly one of \"vertices\" or \"sides\"");
  if (by_vertices) {
    const Json& v = t.at("vertices");
    if (!v.is_array() || v.size() != 3) bad("triangle.vertices must hold three points");
    return Triangle::from_vertices(point(v[0], "vertex"), point(v[1], "vertex"),
                                   point(v[2], "vertex"), tol);
  }
  const auto s = triple(t.at("sides"), "triangle.sides");
  return triangle_from_sides(s[0], s[1], s[2], tol);
}

Weights parse_weights(const Json& spec) {
  if (!spec.contains("weights")) return {1, 1, 1};
  const auto w = triple(spec.at("weights"), "weights");
  return Weights::make(w[0], w[1], w[2]);
}

int parse_side(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (int i = 0; i < 3; ++i) {
      if (s == kSideNames[i]) return i;
    }
  } else if (j.is_number_integer()) {
    const int i = j.get<int>();
    if (i >= 0 && i < 3) return i;
  }
  bad("side must be \"a\", \"b\" or \"c\"");
}

MinimizeOptions parse_minimize(const Json& spec) {
  MinimizeOptions o;
  if (spec.contains("grid")) o.grid = integer(spec.at("grid"), "grid");
  if (spec.contains("refine_iters")) {
    o.refine_iters = integer(spec.at("refine_iters"), "refine_iters");
    if (o.refine_iters < 0) bad("refine_iters must be nonnegative");
  }
  if (o.grid < 16) bad("grid must be at least 16");
  if (o.grid > 512) bad("grid above 512 is not supported");
  return o;
}

// ---- output ----

Json pt(Point2 p) { return Json::array({p.x, p.y}); }

Json arr3(const std::array<double, 3>& v) { return Json::array({v[0], v[1], v[2]}); }

Json homogeneous(const std::array<double, 3>& raw) {
  Json j;
  j["raw"] = arr3(raw);
  const double s = raw[0] + raw[1] + raw[2];
  const double mag = std::abs(raw[0]) + std::abs(raw[1]) + std::abs(raw[2]);
  if (std::abs(s) > 1e-12 * mag) {
    j["normalized"] = arr3({raw[0] / s, raw[1] / s, raw[2] / s});
  } else {
    j["normalized"] = nullptr;
  }
  return j;
}

// Cartesian plus all three homogeneous systems, raw values being signed
// areas, signed distances to the sides, and distances to the vertices.
Json coords_block(Point2 p, const Triangle& t) {
  Json j;
  j["cartesian"] = pt(p);
  const auto bc = to_barycentric(p, t).as_array();
  j["barycentric"] = homogeneous({bc[0] * t.area(), bc[1] * t.area(), bc[2] * t.area()});
  j["trilinear"] = homogeneous(to_trilinear(p, t).as_array());
  j["tripolar"] = homogeneous(tripolar_of_point(p, t).as_array());
  return j;
}

Json triangle_block(const Triangle& t) {
  Json j;
  j["vertices"] = Json::array({pt(t.A()), pt(t.B()), pt(t.C())});
  j["reoriented"] = t.reoriented();
  j["sides"] = arr3(t.sides());
  j["angles"] = arr3(t.angles());
  j["area"] = t.area();
  j["diameter"] = t.diameter();
  return j;
}

Json tolerance_block(const Tolerances& tol) {
  Json j;
  j["degenerate"] = tol.degenerate;
  j["residual"] = tol.residual;
  j["angle"] = tol.angle;
  j["concurrency"] = tol.concurrency;
  j["validation"] = tol.validation;
  j["tangency"] = tol.tangency;
  j["vertex_hit"] = tol.vertex_hit;
  return j;
}

Json weights_block(const Weights& w) {
  Json j;
  j["weights"] = arr3(w.as_array());
  const RefractionCoeffs k = coeffs_from_weights(w);
  j["refraction_coefficients"] = arr3({k.kap_a, k.kap_b, k.kap_c});
  return j;
}

Json inscribed_block(const InscribedTriangle& it) {
  Json j;
  j["vertices"] = Json::array({pt(it.p[0]), pt(it.p[1]), pt(it.p[2])});
  j["params"] = arr3(it.t);
  j["on_segments"] = it.on_segments();
  return j;
}

Json minimize_block(const MinimizeReport& m) {
  Json j;
  j["cost"] = m.cost;
  j["flatness"] = m.flatness;
  j["degenerate"] = m.flatness < kFlatnessThreshold;
  j["converged"] = m.converged;
  j["iterations"] = m.iterations;
  j["best"] = inscribed_block(m.best);
  return j;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// The inequality the tilde sides fail, spelled out with numbers.
std::string failing_inequality(const TildeTriangle& tt) {
  const auto& s = tt.sides;
  const int i = static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  auto term = [&](int m) {
    return std::string("lam_") + kVertexNames[m] + "*" + kSideNames[m];
  };
  return "no triangle with sides (lam_A*a, lam_B*b, lam_C*c): " + term(i) + " = " + fmt(s[i]) +
         " >= " + term(j) + " + " + term(k) + " = " + fmt(s[j] + s[k]);
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegenerateTriangle:
    case ErrorCode::TriangleInequalityViolated:
    case ErrorCode::DegenerateLine:
    case ErrorCode::OnSideLine:
      return kInvalidInput;
    case ErrorCode::IdealPoint:
    case ErrorCode::FZero:
    case ErrorCode::NoSuchPoint:
    case ErrorCode::TildeDegenerate:
      return kNonexistence;
    case ErrorCode::TotalInternalReflection:
    case ErrorCode::HitVertex:
      return kDynamicsFailure;
    case ErrorCode::ConcurrencyViolation:
    case ErrorCode::AssertionFailed:
      return kInternal;
  }
  return kInternal;
}

// ---- commands ----

struct Context {
  const Json& spec;
  Tolerances tol;
  bool want_svg;
  CommandResult& res;
  Json& doc() { return res.doc; }
};

RenderOptions parse_render(const Json& spec) {
  RenderOptions o;
  if (spec.contains("layers")) {
    const Json& l = spec.at("layers");
    if (!l.is_object()) bad("layers must be an object");
    if (l.contains("apollonius")) {
      if (!l.at("apollonius").is_boolean()) bad("layers.apollonius must be true or false");
      o.apollonius = l.at("apollonius").get<bool>();
    }
  }
  return o;
}

void cmd_point(Context& c) {
  const Triangle t = parse_triangle(c.spec, c.tol);
  const Weights w = parse_weights(c.spec);
  ConstructionOptions co;
  if (c.spec.contains("brute_force")) {
    if (!c.spec.at("brute_force").is_boolean()) bad("brute_force must be true or false");
    co.brute_force_fallback = c.spec.at("brute_force").get<bool>();
  }
  co.minimize = parse_minimize(c.spec);
  const SnellOrbitResult r = snell_fagnano_point(t, w, c.tol, co);

  Json& d = c.doc();
  d["status"] = std::string(to_string(r.status));
  d["triangle"] = triangle_block(t);
  d.update(weights_block(w));

  Json tilde;
  tilde["exists"] = r.tilde.exists;
  tilde["sides"] = arr3(r.tilde.sides);
  tilde["slack"] = r.tilde.slack;
  if (r.tilde.exists) tilde["angles"] = arr3(r.tilde.angles);
  d["tilde"] = tilde;

  if (r.status == OrbitStatus::NoTildeTriangle) {
    d["message"] = failing_inequality(r.tilde);
    c.res.exit_code = kNonexistence;
  } else {
    d["conditions"] = Json::array({r.conditions[0], r.conditions[1], r.conditions[2]});
    Json sums = Json::array();
    for (int i = 0; i < 3; ++i) sums.push_back(t.angle(i) + r.tilde.angles[i]);
    d["angle_sums"] = sums;
    const ErectedPoints& e = *r.erected;
    d["erected"] = Json::array({pt(e.A1()), pt(e.B1()), pt(e.C1())});
    d["concurrency_residual"] = r.concurrency_residual;
  }

  if (r.point) {
    Json p = coords_block(*r.point, t);
    if (r.status == OrbitStatus::Interior) {
      p["snell_residuals"] = arr3(verify_snell_point(*r.point, t, coeffs_from_weights(w), c.tol));
      const Point2 q = isogonal_conjugate(*r.point, t, c.tol);
      const TripolarCoords tp = tripolar_of_point(q, t);
      Json iso;
      iso["cartesian"] = pt(q);
      iso["tripolar"] = arr3(tp.as_array());
      // Distances over weights; all equal when the conjugate has tripolar
      // coordinates (lam_A : lam_B : lam_C).
      const double ra = tp.r_A / w.lam_A, rb = tp.r_B / w.lam_B, rc = tp.r_C / w.lam_C;
      const double s = ra + rb + rc;
      iso["tripolar_over_weights"] = arr3({ra / s, rb / s, rc / s});
      p["isogonal_conjugate"] = iso;
    }
    d["point"] = p;
  } else {
    d["point"] = nullptr;
  }

  if (r.orbit) d["orbit"] = inscribed_block(*r.orbit);
  d["weighted_perimeter"] = r.weighted_perimeter;

  if (r.fallback) {
    const DegenerateFallback& fb = *r.fallback;
    Json f;
    Json cands = Json::array();
    for (const auto& cand : fb.candidates) {
      Json cj;
      cj["vertex"] = kVertexNames[cand.vertex];
      cj["foot"] = pt(cand.foot);
      cj["foot_on_side"] = cand.foot_on_side;
      cj["length"] = cand.length;
      cj["weighted_cost"] = cand.weighted_cost;
      cands.push_back(cj);
    }
    f["candidates"] = cands;
    f["best_weighted"] = kVertexNames[fb.best_weighted];
    f["shortest_unweighted"] = kVertexNames[fb.shortest_unweighted];
    f["brute_force"] = fb.brute_force ? minimize_block(*fb.brute_force) : Json(nullptr);
    if (fb.brute_force) {
      // With unequal weights a corner-anchored triangle can undercut every
      // doubled altitude; say so rather than let the fallback pose as optimal.
      f["doubled_segment_is_minimal"] =
          fb.brute_force->cost >= r.weighted_perimeter * (1.0 - 1e-8);
    }
    d["fallback"] = f;
  }

  if (c.want_svg) c.res.svg = render_svg(t, w, r, parse_render(c.spec), c.tol);
}

void cmd_convert(Context& c) {
  const Triangle t = parse_triangle(c.spec, c.tol);
  const Json& coords = field(c.spec, "coords");
  if (!coords.is_object()) bad("coords must be an object");
  const Json& kind_j = field(coords, "kind");
  if (!kind_j.is_string()) bad("coords.kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  const auto v = triple(field(coords, "values"), "coords.values");

  Json& d = c.doc();
  d["status"] = "ok";
  d["triangle"] = triangle_block(t);
  Json in;
  in["kind"] = kind;
  in["values"] = homogeneous(v);
  d["given"] = in;

  Json cands = Json::array();
  if (kind == "barycentric" || kind == "trilinear") {
    const BarycentricCoords bc = kind == "barycentric"
                                     ? BarycentricCoords{v[0], v[1], v[2]}
                                     : trilinear_to_barycentric({v[0], v[1], v[2]}, t);
    cands.push_back(coords_block(from_barycentric(bc, t), t));
  } else if (kind == "tripolar") {
    const TripolarCoords tp = TripolarCoords::make(v[0], v[1], v[2]);
    for (const TripolarCandidate& tc : tripolar_to_points(tp, t, c.tol)) {
      Json cj = coords_block(tc.point, t);
      cj["scale"] = tc.s;
      cj["biquadratic_residual"] = apollonian_biquadratic(t, tp).relative_residual(tc.s2);
      cands.push_back(cj);
    }
  } else {
    bad("coords.kind must be barycentric, trilinear or tripolar");
  }
  d["candidates"] = cands;
}

void cmd_simulate(Context& c) {
  const Triangle t = parse_triangle(c.spec, c.tol);
  const Weights w = parse_weights(c.spec);
  const RefractionCoeffs k = coeffs_from_weights(w);
  int steps = 3;
  if (c.spec.contains("steps")) steps = integer(c.spec.at("steps"), "steps");
  if (steps < 1 || steps > 100000) bad("steps must be between 1 and 100000");

  const Json& sj = field(c.spec, "start");
  BilliardState start;
  bool from_orbit = false;
  if (sj.is_string()) {
    if (sj.get<std::string>() != "orbit") bad("start must be \"orbit\" or a state object");
    ConstructionOptions co;
    co.brute_force_fallback = false;
    const SnellOrbitResult r = snell_fagnano_point(t, w, c.tol, co);
    if (r.status != OrbitStatus::Interior) {
      throw Error(ErrorCode::NoSuchPoint, "no interior Snell orbit for these weights (status " +
                                              std::string(to_string(r.status)) + ")");
    }
    start = orbit_launch(*r.orbit, t);
    from_orbit = true;
  } else if (sj.is_object()) {
    start.side = parse_side(field(sj, "side"));
    start.param = number(field(sj, "param"), "start.param");
    if (!(start.param > 0.0 && start.param < 1.0)) bad("start.param must lie in (0, 1)");
    const bool has_dir = sj.contains("direction"), has_target = sj.contains("toward");
    if (has_dir == has_target) bad("start needs exactly one of \"direction\" or \"toward\"");
    const Point2 origin = t.point_on_side(start.side, start.param);
    const Point2 raw = has_dir ? point(sj.at("direction"), "start.direction")
                               : point(sj.at("toward"), "start.toward") - origin;
    if (!(norm(raw) > 0.0)) bad("start direction is zero");
    start.direction = normalized(raw);
    if (!(dot(start.direction, t.inward_normal(start.side)) > 0.0)) {
      bad("start direction must point into the triangle");
    }
  } else {
    bad("start must be \"orbit\" or a state object");
  }

  const Trajectory tr = simulate(start, t, k, steps, c.tol);

  Json& d = c.doc();
  d["status"] = tr.failure ? "dynamics_failure" : "ok";
  d["triangle"] = triangle_block(t);
  d.update(weights_block(w));
  d["start_from_orbit"] = from_orbit;
  Json states = Json::array();
  for (size_t i = 0; i < tr.states.size(); ++i) {
    const BilliardState& s = tr.states[i];
    Json sj2;
    sj2["step"] = static_cast<int>(i);
    sj2["side"] = kSideNames[s.side];
    sj2["param"] = s.param;
    sj2["point"] = pt(t.point_on_side(s.side, s.param));
    sj2["direction"] = pt(s.direction);
    states.push_back(sj2);
  }
  d["trajectory"] = states;
  d["completed_steps"] = static_cast<int>(tr.states.size()) - 1;
  if (tr.states.size() >= 4) {
    const BilliardState& s0 = tr.states[0];
    const BilliardState& s3 = tr.states[3];
    Json p;
    p["period"] = 3;
    const bool same_side = s3.side == s0.side;
    const double dp = same_side ? std::abs(s3.param - s0.param) : 1.0;
    const double dd = norm(s3.direction - s0.direction);
    p["param_error"] = dp;
    p["direction_error"] = dd;
    p["periodic"] = same_side && dp < 1e-8 && dd < 1e-8;
    d["periodicity"] = p;
  }
  if (tr.failure) {
    Json f;
    f["code"] = std::string(to_string(*tr.failure));
    f["step"] = tr.failed_step;
    f["message"] = tr.message;
    d["failure"] = f;
    c.res.exit_code = kDynamicsFailure;
  }
}

void cmd_minimize(Context& c) {
  const Triangle t = parse_triangle(c.spec, c.tol);
  const Weights w = parse_weights(c.spec);
  const MinimizeReport m = minimize_inscribed(t, w, parse_minimize(c.spec));

  Json& d = c.doc();
  d["status"] = "ok";
  d["triangle"] = triangle_block(t);
  d.update(weights_block(w));
  d["minimizer"] = minimize_block(m);

  ConstructionOptions co;
  co.brute_force_fallback = false;
  const SnellOrbitResult r = snell_fagnano_point(t, w, c.tol, co);
  Json cmp;
  cmp["status"] = std::string(to_string(r.status));
  if (r.status == OrbitStatus::Interior) {
    cmp["weighted_perimeter"] = r.weighted_perimeter;
    cmp["orbit_on_segments"] = r.orbit_on_segments;
    cmp["relative_difference"] = (m.cost - r.weighted_perimeter) / r.weighted_perimeter;
    double far = 0.0;
    for (int i = 0; i < 3; ++i) far = std::max(far, distance(m.best.p[i], r.orbit->p[i]));
    cmp["max_vertex_distance"] = far / t.diameter();
  } else {
    cmp["weighted_perimeter"] = r.weighted_perimeter;
  }
  d["construction"] = cmp;
}

void cmd_river(Context& c) {
  const Json& rj = field(c.spec, "river");
  if (!rj.is_object()) bad("river must be an object");
  const Json& line = field(rj, "line");
  if (!line.is_array() || line.size() != 2) bad("river.line must hold two points");
  const RiverInstance inst = RiverInstance::make(
      point(field(rj, "a"), "river.a"), point(field(rj, "b"), "river.b"),
      point(line[0], "river.line"), point(line[1], "river.line"),
      number(field(rj, "lam1"), "river.lam1"), number(field(rj, "lam2"), "river.lam2"));
  const RiverSolution s = solve_river(inst);

  Json& d = c.doc();
  d["status"] = "ok";
  Json out;
  out["x"] = pt(s.x);
  out["param"] = s.param;
  out["cost"] = s.cost;
  out["snell_residual"] = s.snell_residual;
  out["tangential_balance"] = s.tangential_balance;
  out["iterations"] = s.iterations;
  d["solution"] = out;
}

void cmd_render(Context& c) {
  const Triangle t = parse_triangle(c.spec, c.tol);
  const Weights w = parse_weights(c.spec);
  ConstructionOptions co;
  co.brute_force_fallback = false;
  const SnellOrbitResult r = snell_fagnano_point(t, w, c.tol, co);
  c.res.svg = render_svg(t, w, r, parse_render(c.spec), c.tol);
  Json& d = c.doc();
  d["status"] = std::string(to_string(r.status));
  d["svg_bytes"] = c.res.svg->size();
}

}  // namespace

Tolerances apply_tolerances(const Tolerances& base, const Json& overrides) {
  if (!overrides.is_object()) bad("tolerances must be an object");
  Tolerances t = base;
  for (const auto& [key, value] : overrides.items()) {
    double* slot = key == "degenerate"    ? &t.degenerate
                   : key == "residual"    ? &t.residual
                   : key == "angle"       ? &t.angle
                   : key == "concurrency" ? &t.concurrency
                   : key == "validation"  ? &t.validation
                   : key == "tangency"    ? &t.tangency
                   : key == "vertex_hit"  ? &t.vertex_hit
                                          : nullptr;
    if (!slot) bad("unknown tolerance \"" + key + "\"");
    const double v = number(value, "tolerance " + key);
    if (!(v > 0.0)) bad("tolerance " + key + " must be positive");
    *slot = v;
  }
  return t;
}

CommandResult execute(std::string_view command, const Json& spec, const CommandOptions& opts) {
  CommandResult res;
  Json& d = res.doc;
  d["version"] = std::string(kVersion);
  d["command"] = std::string(command);
  d["status"] = "ok";
  d["input"] = spec;
  try {
    if (!spec.is_object()) bad("job spec must be a JSON object");
    Tolerances tol = opts.tol;
    if (spec.contains("tolerances")) tol = apply_tolerances(tol, spec.at("tolerances"));
    if (!opts.tol_overrides.empty()) tol = apply_tolerances(tol, opts.tol_overrides);
    d["tolerances"] = tolerance_block(tol);

    Context ctx{spec, tol, opts.want_svg, res};
    if (command == "point") {
      cmd_point(ctx);
    } else if (command == "convert") {
      cmd_convert(ctx);
    } else if (command == "simulate") {
      cmd_simulate(ctx);
    } else if (command == "minimize") {
      cmd_minimize(ctx);
    } else if (command == "river") {
      cmd_river(ctx);
    } else if (command == "render") {
      cmd_render(ctx);
    } else {
      bad("unknown command \"" + std::string(command) + "\"");
    }
  } catch (const Error& e) {
    d["status"] = "error";
    Json err;
    err["code"] = std::string(to_string(e.code()));
    err["message"] = e.what();
    d["error"] = err;
    res.exit_code = exit_code_for(e.code());
    res.svg.reset();
  } catch (const Json::exception& e) {
    d["status"] = "error";
    Json err;
    err["code"] = "InvalidArgument";
    err["message"] = e.what();
    d["error"] = err;
    res.exit_code = kInvalidInput;
    res.svg.reset();
  }
  d["exit_code"] = res.exit_code;
  return res;
}

}  // namespace sf::cli
