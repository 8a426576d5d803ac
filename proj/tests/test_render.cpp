#include <sstream>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <doctest.h>

#include "schottky/render.hpp"

using namespace schottky;

namespace {

int count_class(const boost::property_tree::ptree& node, const std::string& name, const std::string& cls) {
  int n = 0;
  for (const auto& [tag, child] : node) {
    if (tag == "<xmlattr>") continue;
    if (tag == name && child.get<std::string>("<xmlattr>.class", "") == cls) ++n;
    n += count_class(child, name, cls);
  }
  return n;
}

boost::property_tree::ptree parse_xml(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("decimal conversion keeps 12 significant digits") {
  CHECK(decimal(Rational(0)) == "0");
  CHECK(decimal(Rational(53, 20)) == "2.65");
  CHECK(decimal(Rational(1, 3)) == "0.333333333333");
  CHECK(decimal(Rational(-5)) == "-5");
}

TEST_CASE("layer names") {
  CHECK(parse_layer("circles") == Layer::Circles);
  CHECK(parse_layer("klbox") == Layer::CompactBox);
  CHECK_THROWS_AS(parse_layer("stars"), std::invalid_argument);
}

TEST_CASE("circle family of the genus-zero group") {
  const SchottkyDescription d = build_gamma_s(3);
  const RenderResult r = render_svg(d, fit_viewport(d));
  CHECK(r.warnings.empty());
  const auto tree = parse_xml(r.svg);
  CHECK(count_class(tree, "path", "circle") == 4);
  for (const char* c : {"data-index=\"-4\"", "data-index=\"4\"", "M 4 0 A 1 1 0 0 1 6 0", "M -11 0 A 1 1 0 0 1 -9 0"})
    CHECK(r.svg.find(c) != std::string::npos);
}

TEST_CASE("nested families with intervals") {
  const SchottkyDescription d = build_gamma_ms(2, 2, 3);
  RenderSpec spec = fit_viewport(d);
  spec.layers = {Layer::Circles, Layer::Intervals};
  const RenderResult r = render_svg(d, spec);
  const auto tree = parse_xml(r.svg);
  CHECK(count_class(tree, "path", "circle") == 26);
  CHECK(count_class(tree, "line", "interval") == 26);
}

TEST_CASE("compact box overlay") {
  const SchottkyDescription d = build_gamma_s(2);
  RenderSpec spec = fit_viewport(d);
  spec.layers = {Layer::CompactBox};
  spec.level = 1;
  const RenderResult r = render_svg(d, spec);
  const auto tree = parse_xml(r.svg);
  CHECK(count_class(tree, "rect", "klbox") == 1);
  CHECK(r.svg.find("x=\"-6\" y=\"-2\" width=\"12\" height=\"1\"") != std::string::npos);
}

TEST_CASE("domain, tiles and labels") {
  const SchottkyDescription d = build_gamma_s(2);
  RenderSpec spec = fit_viewport(d);
  spec.layers = {Layer::Domain, Layer::Tiles, Layer::Labels};
  spec.tile_depth = 1;
  const RenderResult r = render_svg(d, spec);
  const auto tree = parse_xml(r.svg);
  CHECK(count_class(tree, "path", "domain") == 1);
  CHECK(count_class(tree, "path", "tile") + count_class(tree, "line", "tile") == 4);
  CHECK(count_class(tree, "text", "label") == 2);
  CHECK(r.svg.find(">F(1)^-1<") != std::string::npos);
}

TEST_CASE("empty viewport warns and still emits a valid document") {
  const SchottkyDescription d = build_gamma_s(3);
  RenderSpec spec;
  spec.x_min = Rational(100);
  spec.x_max = Rational(120);
  const RenderResult r = render_svg(d, spec);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0] == "viewport excludes all requested content");
  const auto tree = parse_xml(r.svg);
  CHECK(count_class(tree, "path", "circle") == 0);
}

TEST_CASE("invalid render specs") {
  const SchottkyDescription d = build_gamma_s(2);
  RenderSpec bad;
  bad.x_min = Rational(1);
  bad.x_max = Rational(1);
  CHECK_THROWS_AS(render_svg(d, bad), std::invalid_argument);
  RenderSpec flat;
  flat.y_max = Rational(0);
  CHECK_THROWS_AS(render_svg(d, flat), std::invalid_argument);
  RenderSpec deep;
  deep.tile_depth = kMaxRenderTileDepth + 1;
  CHECK_THROWS_AS(render_svg(d, deep), std::invalid_argument);
  RenderSpec palette;
  palette.palette = "neon";
  CHECK_THROWS_AS(render_svg(d, palette), std::invalid_argument);
}

TEST_CASE("rendering is deterministic") {
  const SchottkyDescription d = build_gamma_ms(2, 3, 2);
  RenderSpec spec = fit_viewport(d);
  spec.layers = {Layer::Circles, Layer::Intervals, Layer::Domain, Layer::Tiles, Layer::CompactBox, Layer::Labels};
  spec.palette = "mono";
  CHECK(render_svg(d, spec).svg == render_svg(d, spec).svg);
}

}  // TEST_SUITE
