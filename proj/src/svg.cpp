#include "goldman/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace goldman {

namespace {

constexpr double canvas_w = 1000, canvas_h = 600, pad = 40;

struct Camera {
  double x0 = 0, y_top = 1, scale = 1;

  double px(real x) const { return pad + (static_cast<double>(x) - x0) * scale; }
  double py(real y) const { return canvas_h - pad - static_cast<double>(y) * scale; }
};

std::string f4(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void draw_geodesic(std::ostringstream& os, const Camera& cam, const Geodesic& g,
                   const std::string& style, real y_top) {
  const Geodesic::Shape s = g.shape();
  if (s.vertical) {
    os << "<line x1=\"" << f4(cam.px(s.x0)) << "\" y1=\"" << f4(cam.py(0)) << "\" x2=\""
       << f4(cam.px(s.x0)) << "\" y2=\"" << f4(cam.py(y_top)) << "\" " << style << "/>\n";
    return;
  }
  os << "<path d=\"M " << f4(cam.px(s.center - s.radius)) << ' ' << f4(cam.py(0)) << " A "
     << f4(s.radius * cam.scale) << ' ' << f4(s.radius * cam.scale) << " 0 0 1 "
     << f4(cam.px(s.center + s.radius)) << ' ' << f4(cam.py(0)) << "\" fill=\"none\" " << style
     << "/>\n";
}

void draw_arc_segment(std::ostringstream& os, const Camera& cam, const Geodesic& carrier,
                      const HPoint& a, const HPoint& b, const std::string& style) {
  const Geodesic::Shape s = carrier.shape();
  if (s.vertical) {
    os << "<line x1=\"" << f4(cam.px(a.x)) << "\" y1=\"" << f4(cam.py(a.y)) << "\" x2=\""
       << f4(cam.px(b.x)) << "\" y2=\"" << f4(cam.py(b.y)) << "\" " << style << "/>\n";
    return;
  }
  const int sweep_flag = a.x < b.x ? 1 : 0;  // rightward along the upper semicircle is clockwise on screen
  os << "<path d=\"M " << f4(cam.px(a.x)) << ' ' << f4(cam.py(a.y)) << " A "
     << f4(s.radius * cam.scale) << ' ' << f4(s.radius * cam.scale) << " 0 0 " << sweep_flag
     << ' ' << f4(cam.px(b.x)) << ' ' << f4(cam.py(b.y)) << "\" fill=\"none\" " << style
     << "/>\n";
}

void draw_dot(std::ostringstream& os, const Camera& cam, const HPoint& p, double r,
              const std::string& fill) {
  os << "<circle cx=\"" << f4(cam.px(p.x)) << "\" cy=\"" << f4(cam.py(p.y)) << "\" r=\""
     << f4(r) << "\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string render_lift_svg(const SurfaceRep& rep, const Word& x, const Word& y,
                            const IntersectionRecord& record, int n_arcs) {
  const std::vector<LiftArc> arcs = lift_path(rep, x, y, record, n_arcs);
  const MoebiusMap term = word_to_map(rep, record.term_word);
  const Geodesic term_axis = axis(term);

  double xmin = 0, xmax = 0, ymax = 1e-6;
  bool first = true;
  auto grow = [&](real vx, real vy) {
    const double dx = static_cast<double>(vx), dy = static_cast<double>(vy);
    if (first) {
      xmin = xmax = dx;
      first = false;
    }
    xmin = std::min(xmin, dx);
    xmax = std::max(xmax, dx);
    ymax = std::max(ymax, dy);
  };
  for (const LiftArc& arc : arcs) {
    grow(arc.start.x, arc.start.y);
    grow(arc.end.x, arc.end.y);
    const Geodesic::Shape s = arc.carrier.shape();
    if (!s.vertical) {
      // The arc may pass over the circle top between its endpoints.
      if ((arc.start.x - s.center) * (arc.end.x - s.center) < 0) grow(s.center, s.radius);
    }
  }
  const double span_x = std::max(xmax - xmin, 1e-6);
  const double margin = 0.08 * std::max(span_x, ymax);
  xmin -= margin;
  xmax += margin;
  const double y_top_world = ymax + margin;

  Camera cam;
  cam.x0 = xmin;
  cam.scale = std::min((canvas_w - 2 * pad) / (xmax - xmin), (canvas_h - 2 * pad) / y_top_world);
  cam.y_top = y_top_world;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas_w << "\" height=\""
     << canvas_h << "\" viewBox=\"0 0 " << canvas_w << ' ' << canvas_h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Real axis.
  os << "<line x1=\"0\" y1=\"" << f4(cam.py(0)) << "\" x2=\"" << canvas_w << "\" y2=\""
     << f4(cam.py(0)) << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

  const real clip_top = static_cast<real>(y_top_world);
  const Geodesic base_axis = geodesic_rep(rep, cyclic_reduce(x).core);
  draw_geodesic(os, cam, base_axis, "stroke=\"#1f62b4\" stroke-width=\"1.5\"", clip_top);
  for (const LiftArc& arc : arcs)
    draw_geodesic(os, cam, arc.carrier, "stroke=\"#c8c8c8\" stroke-width=\"0.8\"", clip_top);
  draw_geodesic(os, cam, term_axis, "stroke=\"#c43131\" stroke-width=\"1.5\"", clip_top);

  for (const LiftArc& arc : arcs) {
    const bool on_x = ((arc.index % 2) + 2) % 2 == 0;
    draw_arc_segment(os, cam, arc.carrier, arc.start, arc.end,
                     on_x ? "stroke=\"#2d8a2d\" stroke-width=\"3\""
                          : "stroke=\"#7b3fb4\" stroke-width=\"3\"");
  }
  for (const LiftArc& arc : arcs) draw_dot(os, cam, arc.midpoint, 3.5, "#111111");
  draw_dot(os, cam, record.point, 4.5, "#e07b00");

  os << "<text x=\"12\" y=\"20\" font-family=\"monospace\" font-size=\"14\">x=" << word_text(x)
     << "  y=" << word_text(y) << "  g=" << word_text(record.conjugator)
     << "  term=" << record.term_class.text() << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace goldman
