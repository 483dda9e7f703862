#ifndef SNELLFAGNANO_CLI_SVG_HPP
#define SNELLFAGNANO_CLI_SVG_HPP

#include <string>

#include "snellfagnano/construction.hpp"

namespace sf::cli {

struct RenderOptions {
  bool apollonius = false;
};

// 800x600 canvas with the figure fitted inside a 10% margin. Layers:
// triangle, erected triangles, dashed cevians, the point, the orbit and,
// optionally, the Apollonian circles with their common points.
std::string render_svg(const Triangle& t, const Weights& w, const SnellOrbitResult& r,
                       const RenderOptions& opts, const Tolerances& tol = {});

}  // namespace sf::cli

#endif  // SNELLFAGNANO_CLI_SVG_HPP
