#include "geonet/render.hpp"

#include <cstdio>
#include <string>

#include "geonet/errors.hpp"

namespace geonet {

void RenderStyle::validate() const {
  if (canvas < 64) throw DomainError("canvas must be at least 64 px");
  if (!(stroke_per_mult > 0)) throw DomainError("stroke width must be positive");
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const Network& net, const RenderStyle& style) {
  style.validate();
  const double half = style.canvas / 2.0;
  const double scale = half / 1.4;
  auto px = [&](double x) { return fmt(half + scale * x); };
  auto py = [&](double y) { return fmt(half - scale * y); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.canvas) +
         "\" height=\"" + std::to_string(style.canvas) + "\" viewBox=\"0 0 " +
         std::to_string(style.canvas) + " " + std::to_string(style.canvas) + "\">\n";
  svg += "  <circle class=\"boundary\" cx=\"" + px(0) + "\" cy=\"" + py(0) + "\" r=\"" +
         fmt(scale) + "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const auto& e : net.edges()) {
    const auto a = net.vertex(e.i).position.coords();
    const auto b = net.vertex(e.j).position.coords();
    svg += "  <line class=\"chord\" x1=\"" + px(a.x()) + "\" y1=\"" + py(a.y()) + "\" x2=\"" +
           px(b.x()) + "\" y2=\"" + py(b.y()) + "\" stroke=\"#1f4e99\" stroke-width=\"" +
           fmt(style.stroke_per_mult * static_cast<double>(e.mult)) + "\"/>\n";
  }
  for (const auto& v : net.vertices()) {
    const auto p = v.position.coords();
    svg += "  <line class=\"ray\" x1=\"" + px(p.x()) + "\" y1=\"" + py(p.y()) + "\" x2=\"" +
           px(1.3 * p.x()) + "\" y2=\"" + py(1.3 * p.y()) + "\" stroke=\"#b03a2e\" stroke-width=\"" +
           fmt(style.stroke_per_mult * static_cast<double>(v.exterior_mult)) + "\"/>\n";
  }
  for (std::size_t i = 0; i < net.vertex_count(); ++i) {
    const auto p = net.vertex(i).position.coords();
    svg += "  <circle class=\"vertex\" cx=\"" + px(p.x()) + "\" cy=\"" + py(p.y()) +
           "\" r=\"3\" fill=\"#000000\"/>\n";
    if (style.labels) {
      svg += "  <text class=\"label\" x=\"" + px(1.12 * p.x()) + "\" y=\"" + py(1.12 * p.y()) +
             "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace geonet
