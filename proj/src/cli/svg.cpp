#include "snellfagnano/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "snellfagnano/apollonius.hpp"
#include "snellfagnano/error.hpp"

namespace sf::cli {
namespace {

constexpr double kWidth = 800.0, kHeight = 600.0, kMargin = 0.1;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

// Maps model coordinates into the canvas, y pointing up.
struct Viewport {
  double scale = 1.0;
  Point2 lo, hi;

  static Viewport fit(const std::vector<Point2>& pts) {
    Viewport v;
    v.lo = v.hi = pts.front();
    for (const Point2& p : pts) {
      v.lo = {std::min(v.lo.x, p.x), std::min(v.lo.y, p.y)};
      v.hi = {std::max(v.hi.x, p.x), std::max(v.hi.y, p.y)};
    }
    const double w = std::max(v.hi.x - v.lo.x, 1e-300), h = std::max(v.hi.y - v.lo.y, 1e-300);
    v.scale = std::min(kWidth * (1 - 2 * kMargin) / w, kHeight * (1 - 2 * kMargin) / h);
    return v;
  }

  Point2 map(Point2 p) const {
    const Point2 mid = (lo + hi) / 2.0;
    return {kWidth / 2 + scale * (p.x - mid.x), kHeight / 2 - scale * (p.y - mid.y)};
  }
};

class Writer {
 public:
  explicit Writer(const Viewport& v) : v_(v) {}

  void raw(const std::string& s) { out_ += s; }

  void open_group(const std::string& id, const std::string& attrs) {
    out_ += "  <g id=\"" + id + "\" " + attrs + ">\n";
  }
  void close_group() { out_ += "  </g>\n"; }

  void polygon(const std::vector<Point2>& pts, const std::string& attrs = "") {
    out_ += "    <polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      const Point2 q = v_.map(pts[i]);
      if (i) out_ += ' ';
      out_ += num(q.x) + ',' + num(q.y);
    }
    out_ += '"';
    if (!attrs.empty()) out_ += ' ' + attrs;
    out_ += "/>\n";
  }

  void line(Point2 p, Point2 q) {
    const Point2 a = v_.map(p), b = v_.map(q);
    out_ += "    <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
            "\" y2=\"" + num(b.y) + "\"/>\n";
  }

  void dot(Point2 p, double r) {
    const Point2 a = v_.map(p);
    out_ += "    <circle cx=\"" + num(a.x) + "\" cy=\"" + num(a.y) + "\" r=\"" + num(r) + "\"/>\n";
  }

  void circle(const Circle& c) {
    const Point2 a = v_.map(c.center);
    out_ += "    <circle cx=\"" + num(a.x) + "\" cy=\"" + num(a.y) + "\" r=\"" +
            num(v_.scale * c.radius) + "\"/>\n";
  }

  void label(Point2 p, Point2 offset, const std::string& text) {
    const Point2 a = v_.map(p);
    out_ += "    <text x=\"" + num(a.x + offset.x) + "\" y=\"" + num(a.y + offset.y) + "\">" +
            text + "</text>\n";
  }

  std::string str() const { return out_; }

 private:
  const Viewport& v_;
  std::string out_;
};

}  // namespace

std::string render_svg(const Triangle& t, const Weights& w, const SnellOrbitResult& r,
                       const RenderOptions& opts, const Tolerances& tol) {
  // Fit the triangle and erected apexes; F and the Apollonian points only
  // when they sit near the triangle, so a far-off point cannot shrink the figure.
  std::vector<Point2> fit(t.vertices().begin(), t.vertices().end());
  if (r.erected) fit.insert(fit.end(), r.erected->apex.begin(), r.erected->apex.end());
  const Point2 centroid = (t.A() + t.B() + t.C()) / 3.0;
  auto near = [&](Point2 p) { return distance(p, centroid) < 2.0 * t.diameter(); };
  if (r.point && near(*r.point)) fit.push_back(*r.point);

  std::vector<Point2> common;
  if (opts.apollonius) {
    try {
      common = apollonian_common_points(t, w, tol);
    } catch (const Error&) {
      common.clear();
    }
    for (const Point2& p : common) {
      if (near(p)) fit.push_back(p);
    }
  }

  const Viewport v = Viewport::fit(fit);
  Writer s(v);
  s.raw("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  s.raw("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n");
  s.raw("  <rect width=\"800\" height=\"600\" fill=\"white\"/>\n");

  if (opts.apollonius) {
    s.open_group("apollonius", "fill=\"none\" stroke=\"#7a9cc6\" stroke-width=\"1\"");
    for (int i = 0; i < 3; ++i) {
      const ApollonianCircle ac =
          apollonian_circle(t.vertex(i), t.vertex(i + 1), w[i] / w[i + 1], tol);
      if (ac.is_bisector()) {
        const Line& l = ac.line();
        const double reach = 4.0 * t.diameter();
        s.line(l.point - reach * l.direction, l.point + reach * l.direction);
      } else {
        s.circle(ac.circle());
      }
    }
    s.close_group();
    s.open_group("apollonius-points", "fill=\"#2a5d9f\"");
    for (const Point2& p : common) s.dot(p, 4);
    s.close_group();
  }

  if (r.erected) {
    s.open_group("erected", "fill=\"#f3e3c3\" stroke=\"#b58b3a\" stroke-width=\"1\"");
    for (int i = 0; i < 3; ++i) {
      s.polygon({t.side_start(i), r.erected->apex[i], t.side_end(i)});
    }
    s.close_group();
  }

  s.open_group("triangle", "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");
  s.polygon({t.A(), t.B(), t.C()});
  s.close_group();
  s.open_group("labels", "font-family=\"sans-serif\" font-size=\"16\" fill=\"black\"");
  static constexpr const char* kNames[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    const Point2 out = normalized(t.vertex(i) - centroid);
    s.label(t.vertex(i), {12 * out.x - 5, -12 * out.y + 5}, kNames[i]);
  }
  s.close_group();

  if (r.erected) {
    s.open_group("cevians", "stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    for (int i = 0; i < 3; ++i) s.line(t.vertex(i), r.erected->apex[i]);
    s.close_group();
  }

  if (r.orbit) {
    s.open_group("orbit", "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"");
    s.polygon({r.orbit->p[0], r.orbit->p[1], r.orbit->p[2]});
    s.close_group();
  }

  if (r.point) {
    s.open_group("point", "fill=\"#c0392b\"");
    s.dot(*r.point, 5);
    s.close_group();
  }

  s.raw("</svg>\n");
  return s.str();
}

}  // namespace sf::cli
