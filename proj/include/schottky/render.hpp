#pragma once

#include <set>
#include <string>
#include <vector>

#include "schottky/description.hpp"

namespace schottky {

enum class Layer { Circles, Intervals, Domain, Tiles, CompactBox, Labels };

/// Parses "circles", "intervals", "domain", "tiles", "klbox", "labels".
Layer parse_layer(const std::string& name);

inline constexpr int kMaxRenderTileDepth = 6;

struct RenderSpec {
  Rational x_min{-10};
  Rational x_max{10};
  Rational y_max{5};
  double stroke_width = 1.0;
  std::string palette = "default";  // "default" or "mono"
  std::set<Layer> layers{Layer::Circles};
  int tile_depth = 2;  // word length for the tile layer, at most kMaxRenderTileDepth
  int level = 1;       // l for the K_l overlay
  int width_px = 1200;
};

/// Viewport framing every circle of the description with a margin of 1.
RenderSpec fit_viewport(const SchottkyDescription& desc, RenderSpec spec = {});

struct RenderResult {
  std::string svg;
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument for a degenerate viewport, an unknown
/// palette, or a tile depth above kMaxRenderTileDepth.
RenderResult render_svg(const SchottkyDescription& desc, const RenderSpec& spec);

/// Rational to decimal with 12 significant digits.
std::string decimal(const Rational& x);

}  // namespace schottky
