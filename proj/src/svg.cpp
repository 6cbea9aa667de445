#include "gaugekit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gaugekit {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Vertices of a possibly degenerate 2D body in drawing order.
std::vector<Vec> outline(const Polytope& p) {
  if (p.is_empty()) return {};
  return p.vertices();  // CCW for polygons, endpoints for segments
}

void emit_poly(std::ostringstream& out, const std::vector<Vec>& pts, const char* style,
               double ymax_plus_ymin) {
  if (pts.empty()) return;
  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << num(pts[i][0]) << ',' << num(ymax_plus_ymin - pts[i][1]);  // y-up
  }
  out << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const SvgFigure& fig) {
  if (fig.set.dim() != 2) fail(ErrorCode::UnsupportedDimension, "SVG rendering is 2D only");

  std::vector<std::vector<Vec>> shapes;
  shapes.push_back(outline(fig.set));
  for (const auto& t : fig.translates) shapes.push_back(outline(t));
  shapes.push_back(outline(fig.result));

  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (const auto& s : shapes)
    for (const auto& p : s) {
      x0 = std::min(x0, p[0]);
      y0 = std::min(y0, p[1]);
      x1 = std::max(x1, p[0]);
      y1 = std::max(y1, p[1]);
    }
  if (!std::isfinite(x0)) fail(ErrorCode::EmptySet, "nothing to draw");

  const double mx = 0.05 * std::max(x1 - x0, 1e-9);
  const double my = 0.05 * std::max(y1 - y0, 1e-9);
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  const double flip = y0 + y1;  // screen y = flip - world y
  const double sw = 0.004 * std::max(x1 - x0, y1 - y0);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x0) << ' '
      << num(y0) << ' ' << num(x1 - x0) << ' ' << num(y1 - y0) << "\">\n";

  const std::string thin = "fill=\"none\" stroke=\"black\" stroke-width=\"" + num(sw) + "\"";
  const std::string dashed = thin + " stroke-dasharray=\"" + num(6 * sw) + "," + num(4 * sw) + "\"";
  const std::string bold = "fill=\"none\" stroke=\"black\" stroke-width=\"" + num(3 * sw) + "\"";

  emit_poly(out, outline(fig.set), thin.c_str(), flip);
  for (const auto& t : fig.translates) emit_poly(out, outline(t), dashed.c_str(), flip);
  emit_poly(out, outline(fig.result), bold.c_str(), flip);

  out << "</svg>\n";
  return out.str();
}

}  // namespace gaugekit
