#include "schottky/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "schottky/group.hpp"
#include "schottky/topology.hpp"

namespace schottky {

Layer parse_layer(const std::string& name) {
  static const std::map<std::string, Layer> names{{"circles", Layer::Circles}, {"intervals", Layer::Intervals},
                                                  {"domain", Layer::Domain},   {"tiles", Layer::Tiles},
                                                  {"klbox", Layer::CompactBox}, {"labels", Layer::Labels}};
  const auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown layer '" + name + "'");
  return it->second;
}

std::string decimal(const Rational& x) {
  if (x.is_zero()) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x.to_double());
  return buf;
}

RenderSpec fit_viewport(const SchottkyDescription& desc, RenderSpec spec) {
  if (desc.entries().empty()) return spec;
  Rational lo = desc.entries().begin()->second.circle.left();
  Rational hi = desc.entries().begin()->second.circle.right();
  Rational r_max = desc.entries().begin()->second.circle.radius();
  for (const auto& [k, e] : desc.entries()) {
    if (e.circle.left() < lo) lo = e.circle.left();
    if (e.circle.right() > hi) hi = e.circle.right();
    if (e.circle.radius() > r_max) r_max = e.circle.radius();
  }
  spec.x_min = lo - Rational(1);
  spec.x_max = hi + Rational(1);
  const Rational quarter = (spec.x_max - spec.x_min) / Rational(4);
  const Rational tall = r_max * Rational(3, 2);
  spec.y_max = quarter > tall ? quarter : tall;
  return spec;
}

namespace {

struct Palette {
  const char* circle;
  const char* interval;
  const char* domain;
  const char* tile;
  const char* box;
  const char* text;
};

Palette palette_of(const std::string& name) {
  if (name == "default") return {"#1f4e9c", "#c0392b", "#dfe9f7", "#8a8a8a", "#27ae60", "#222222"};
  if (name == "mono") return {"#000000", "#000000", "#e6e6e6", "#7f7f7f", "#000000", "#000000"};
  throw std::invalid_argument("unknown palette '" + name + "'");
}

class SvgWriter {
 public:
  explicit SvgWriter(const RenderSpec& spec) : spec_(spec) {}

  bool visible(const Rational& left, const Rational& right) const {
    return !(right < spec_.x_min || left > spec_.x_max);
  }

  std::string arc(const HalfCircle& c) const {
    const std::string r = decimal(c.radius());
    return "M " + decimal(c.left()) + " 0 A " + r + " " + r + " 0 0 1 " + decimal(c.right()) + " 0";
  }

  std::string stroke(const char* color, double scale = 1.0) const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", spec_.stroke_width * scale);
    return std::string(" fill=\"none\" stroke=\"") + color + "\" stroke-width=\"" + buf +
           "\" vector-effect=\"non-scaling-stroke\"";
  }

 private:
  const RenderSpec& spec_;
};

std::string escape(const std::string& s) {
  std::string out;
  for (const char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

RenderResult render_svg(const SchottkyDescription& desc, const RenderSpec& spec) {
  if (!(spec.x_min < spec.x_max)) throw std::invalid_argument("viewport requires x_min < x_max");
  if (spec.y_max.sign() <= 0) throw std::invalid_argument("viewport requires y_max > 0");
  if (spec.tile_depth < 0 || spec.tile_depth > kMaxRenderTileDepth)
    throw std::invalid_argument("tile depth must lie in 0.." + std::to_string(kMaxRenderTileDepth));
  const Palette colors = palette_of(spec.palette);
  const SvgWriter w(spec);
  RenderResult result;

  const Rational width = spec.x_max - spec.x_min;
  const double aspect = spec.y_max.to_double() / width.to_double();
  const int height_px = std::max(1, static_cast<int>(spec.width_px * aspect + 0.5));

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width_px << "\" height=\"" << height_px
      << "\" viewBox=\"" << decimal(spec.x_min) << ' ' << decimal(-spec.y_max) << ' ' << decimal(width) << ' '
      << decimal(spec.y_max) << "\">\n";
  svg << "<line class=\"axis\" x1=\"" << decimal(spec.x_min) << "\" y1=\"0\" x2=\"" << decimal(spec.x_max)
      << "\" y2=\"0\"" << w.stroke(colors.text, 0.5) << "/>\n";

  int content = 0;
  const auto has = [&](Layer l) { return spec.layers.count(l) != 0; };

  if (has(Layer::Domain)) {
    // Viewport rectangle minus the open half-disks; the circles are disjoint
    // so even-odd filling leaves exactly the fundamental domain.
    std::string d = "M " + decimal(spec.x_min) + " 0 L " + decimal(spec.x_max) + " 0 L " + decimal(spec.x_max) + " " +
                    decimal(-spec.y_max) + " L " + decimal(spec.x_min) + " " + decimal(-spec.y_max) + " Z";
    for (const auto& [k, e] : desc.entries())
      if (w.visible(e.circle.left(), e.circle.right())) d += " " + w.arc(e.circle) + " Z";
    svg << "<g class=\"layer-domain\">\n<path class=\"domain\" fill-rule=\"evenodd\" fill=\"" << colors.domain
        << "\" stroke=\"none\" d=\"" << d << "\"/>\n</g>\n";
  }

  if (has(Layer::Tiles) && spec.tile_depth >= 1) {
    svg << "<g class=\"layer-tiles\">\n";
    for (const Tile& tile : tessellation_tiles(desc, spec.tile_depth)) {
      if (tile.word.empty()) continue;
      for (const Geodesic& side : tile.sides) {
        if (const auto* c = std::get_if<HalfCircle>(&side)) {
          if (!w.visible(c->left(), c->right())) continue;
          svg << "<path class=\"tile\" d=\"" << w.arc(*c) << "\"" << w.stroke(colors.tile, 0.5) << "/>\n";
        } else {
          const Rational& x = std::get<VerticalLine>(side).abscissa;
          if (!w.visible(x, x)) continue;
          svg << "<line class=\"tile\" x1=\"" << decimal(x) << "\" y1=\"0\" x2=\"" << decimal(x) << "\" y2=\""
              << decimal(-spec.y_max) << "\"" << w.stroke(colors.tile, 0.5) << "/>\n";
        }
        ++content;
      }
    }
    svg << "</g>\n";
  }

  if (has(Layer::Circles)) {
    svg << "<g class=\"layer-circles\">\n";
    for (const auto& [k, e] : desc.entries()) {
      if (!w.visible(e.circle.left(), e.circle.right())) continue;
      svg << "<path class=\"circle\" data-index=\"" << k << "\" d=\"" << w.arc(e.circle) << "\""
          << w.stroke(colors.circle) << "/>\n";
      ++content;
    }
    svg << "</g>\n";
  }

  if (has(Layer::Intervals)) {
    svg << "<g class=\"layer-intervals\">\n";
    for (const auto& [k, e] : desc.entries()) {
      if (!w.visible(e.interval.left(), e.interval.right())) continue;
      svg << "<line class=\"interval\" data-index=\"" << k << "\" x1=\"" << decimal(e.interval.left())
          << "\" y1=\"0\" x2=\"" << decimal(e.interval.right()) << "\" y2=\"0\"" << w.stroke(colors.interval, 3.0)
          << "/>\n";
      ++content;
    }
    svg << "</g>\n";
  }

  if (has(Layer::CompactBox)) {
    if (desc.params().s < 1) {
      result.warnings.push_back("K_l overlay needs the parameter s; skipped");
    } else {
      const CompactBox box = compact_box(desc.params().s, spec.level);
      svg << "<g class=\"layer-klbox\">\n<rect class=\"klbox\" x=\"" << decimal(box.x_min) << "\" y=\""
          << decimal(-box.y_max) << "\" width=\"" << decimal(box.x_max - box.x_min) << "\" height=\""
          << decimal(box.y_max - box.y_min) << "\"" << w.stroke(colors.box, 1.5) << "/>\n</g>\n";
      if (w.visible(box.x_min, box.x_max) && box.y_min <= spec.y_max)
        ++content;
    }
  }

  if (has(Layer::Labels)) {
    const std::string size = decimal(width / Rational(120));
    svg << "<g class=\"layer-labels\">\n";
    for (const auto& [k, e] : desc.entries()) {
      if (!w.visible(e.circle.center(), e.circle.center())) continue;
      const std::string text = e.label ? e.label->to_string() : std::to_string(k);
      svg << "<text class=\"label\" x=\"" << decimal(e.circle.center()) << "\" y=\""
          << decimal(-(e.circle.radius() + width / Rational(200))) << "\" font-size=\"" << size
          << "\" text-anchor=\"middle\" fill=\"" << colors.text << "\">" << escape(text) << "</text>\n";
      ++content;
    }
    svg << "</g>\n";
  }

  svg << "</svg>\n";
  if (content == 0 && !spec.layers.empty()) result.warnings.push_back("viewport excludes all requested content");
  result.svg = svg.str();
  return result;
}

}  // namespace schottky
