#ifndef GAUGEKIT_SVG_HPP
#define GAUGEKIT_SVG_HPP

#include <string>
#include <vector>

#include "gaugekit/polytope.hpp"

namespace gaugekit {

// 2D figure in the style of the ball-hull plots: K outlined, covering
// translates dashed, the result polygon bold. y axis points up; the
// viewBox is fitted to the drawn bodies with a 5% margin.
struct SvgFigure {
  Polytope set;                      // K
  Polytope result;                   // bold polygon
  std::vector<Polytope> translates;  // dashed outlines
};

std::string render_svg(const SvgFigure& fig);

}  // namespace gaugekit

#endif  // GAUGEKIT_SVG_HPP
