// Command-line front end: build, validate, reduce, words, topology, render.
//
// Exit codes: 0 success, 1 domain or validation failure, 2 I/O or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schottky/description.hpp"
#include "schottky/group.hpp"
#include "schottky/render.hpp"
#include "schottky/text_format.hpp"
#include "schottky/topology.hpp"

namespace {

using namespace schottky;

constexpr int kDomainError = 1;
constexpr int kIoError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

SchottkyDescription load(const std::string& path) { return parse_description(read_input(path)); }

std::pair<std::string, std::string> split_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument(std::string("expected ") + what);
  return {text.substr(0, comma), text.substr(comma + 1)};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// Flat key=value config: keys name long flags of the active subcommand and
// are only used when the flag is absent from the command line.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string config_path;
  CLI::App* sub = nullptr;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      --i;
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      --i;
    } else if (!sub) {
      sub = app.get_subcommand_no_throw(args[i]);
    }
  }
  if (config_path.empty() || !sub) return args;
  std::ifstream in(config_path);
  if (!in) throw IoError("cannot open config '" + config_path + "'");
  std::vector<std::string> extra;
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError("config line " + std::to_string(ln) + ": expected key=value");
    std::string key = CLI::detail::trim_copy(line.substr(0, eq));
    std::string value = CLI::detail::trim_copy(line.substr(eq + 1));
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
    if (given) continue;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (!opt) throw IoError("config line " + std::to_string(ln) + ": unknown key '" + key + "'");
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") extra.push_back(flag);
    } else {
      extra.push_back(flag);
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and analysis of geometric Schottky groups"};
  app.require_subcommand(1, 1);
  std::string config_unused;
  app.add_option("--config", config_unused, "flat key=value file supplying defaults for the subcommand's flags");

  int m = 0, s = 0, N = 0;
  bool genus0 = false;
  std::string output;
  auto* build = app.add_subcommand("build", "emit a description document");
  build->add_option("--m", m, "number of ends with infinite genus");
  build->add_option("--s", s, "number of ends")->required();
  build->add_option("--N", N, "truncation depth of the infinite families");
  build->add_flag("--genus0", genus0, "only the f_t family (genus zero, s ends)");
  build->add_option("-o,--output", output, "output file (default stdout)");

  std::string input = "-";
  std::string epsilon_text = "1/4";
  bool json = false;
  auto* validate_cmd = app.add_subcommand("validate", "check the Schottky-description conditions");
  validate_cmd->add_option("input", input, "description document, '-' for stdin");
  validate_cmd->add_option("--epsilon", epsilon_text, "neighbourhood radius p/q");
  validate_cmd->add_flag("--json", json, "machine-readable report");

  std::string point_text;
  int max_iters = kDefaultReductionBudget;
  auto* reduce = app.add_subcommand("reduce", "reduce a point into the fundamental domain");
  reduce->add_option("input", input, "description document, '-' for stdin");
  reduce->add_option("--point", point_text, "re,im as rationals")->required();
  reduce->add_option("--max-iters", max_iters, "iteration budget");

  int max_len = 2;
  bool allow_long = false;
  auto* words = app.add_subcommand("words", "list reduced words, one per line");
  words->add_option("input", input, "description document, '-' for stdin");
  words->add_option("--max-len", max_len, "maximum word length");
  words->add_flag("--allow-long", allow_long, "permit lengths above the default cap");

  int level = 0;
  auto* topology = app.add_subcommand("topology", "genus and boundary components of the quotient");
  topology->add_option("input", input, "description document, '-' for stdin");
  topology->add_option("--level", level, "exhaustion level l; 0 counts every block");
  topology->add_flag("--json", json, "machine-readable output");

  std::string layers_text = "circles";
  std::string viewport_text;
  RenderSpec spec;
  auto* render = app.add_subcommand("render", "draw the description as SVG");
  render->add_option("input", input, "description document, '-' for stdin");
  render->add_option("--layers", layers_text, "comma list of circles,intervals,domain,tiles,klbox,labels");
  render->add_option("--viewport", viewport_text, "x_min,x_max,y_max (default: fit to circles)");
  render->add_option("--tiles", spec.tile_depth, "word length for the tile layer");
  render->add_option("--level", spec.level, "l for the K_l overlay");
  render->add_option("--palette", spec.palette, "default or mono");
  render->add_option("--stroke", spec.stroke_width, "stroke width in pixels");
  render->add_option("--width", spec.width_px, "image width in pixels");
  render->add_option("-o,--output", output, "output file (default stdout)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    // usage errors share the parse-error exit code; --help still exits 0
    return app.exit(e) == 0 ? 0 : kIoError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }

  try {
    if (*build) {
      const SchottkyDescription desc = genus0 ? build_gamma_s(s) : build_gamma_ms(m, s, N);
      write_output(output, serialize(desc));
      return 0;
    }

    if (*validate_cmd) {
      const SchottkyDescription desc = load(input);
      Rational epsilon;
      try {
        epsilon = Rational::parse(epsilon_text);
      } catch (const std::invalid_argument& e) {
        throw IoError(std::string("--epsilon: ") + e.what());
      }
      const ValidationReport report = validate(desc, epsilon);
      if (json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < report.conditions.size(); ++i) {
          const auto& c = report.conditions[i];
          std::cout << "condition " << i + 1 << ": " << (c.pass ? "pass" : "FAIL") << '\n';
          for (const auto& f : c.witnesses) {
            std::cout << "  index " << f.index;
            if (f.other) std::cout << " vs " << *f.other;
            std::cout << ": " << f.reason << '\n';
          }
        }
        std::cout << "min inversive distance: "
                  << (report.min_inversive_distance ? report.min_inversive_distance->to_string() : "-") << '\n';
        std::cout << "certified epsilon: " << report.certified_epsilon << '\n';
        std::cout << (report.all_pass() ? "valid" : "invalid") << '\n';
      }
      return report.all_pass() ? 0 : kDomainError;
    }

    if (*reduce) {
      const SchottkyDescription desc = load(input);
      Rational re, im;
      try {
        const auto [re_text, im_text] = split_pair(point_text, "--point re,im");
        re = Rational::parse(re_text);
        im = Rational::parse(im_text);
      } catch (const std::invalid_argument& e) {
        throw IoError(std::string("--point: ") + e.what());
      }
      const Reduction r = reduce_to_domain(desc, QPoint(re, im), max_iters);
      std::cout << r.point.re() << ", " << r.point.im() << " ; word: " << r.word.to_string() << '\n';
      return 0;
    }

    if (*words) {
      const SchottkyDescription desc = load(input);
      for_each_word(
          desc, max_len,
          [](const Word& w) {
            std::cout << w.to_string() << '\n';
            return true;
          },
          allow_long);
      return 0;
    }

    if (*topology) {
      const SchottkyDescription desc = load(input);
      const std::string n_col = desc.params().variant == Variant::GammaMS ? std::to_string(desc.params().N) : "-";
      if (desc.params().s < 1) {
        const SurfaceSignature sig = signature(pattern_of(desc));
        if (json) {
          std::cout << nlohmann::json{{"signature", to_json(sig)}}.dump(2) << '\n';
        } else {
          std::cout << "N\tr\tb\tg\tregion_genus\n"
                    << n_col << '\t' << sig.rank << '\t' << sig.boundary_components << '\t' << sig.genus << "\t-\n"
                    << "r=" << sig.rank << " b=" << sig.boundary_components << " g=" << sig.genus << '\n';
        }
        return 0;
      }
      const EndsProfile profile = ends_profile(desc, level);
      const SurfaceSignature& sig = profile.signature_at_level;
      if (json) {
        nlohmann::json j = to_json(profile);
        j["N"] = desc.params().N;
        std::cout << j.dump(2) << '\n';
      } else {
        std::string regions;
        for (const auto& [t, g] : profile.per_region_genus) regions += (regions.empty() ? "" : ",") + std::to_string(g);
        std::cout << "N\tr\tb\tg\tregion_genus\n"
                  << n_col << '\t' << sig.rank << '\t' << sig.boundary_components << '\t' << sig.genus << '\t'
                  << regions << '\n'
                  << "r=" << sig.rank << " b=" << sig.boundary_components << " g=" << sig.genus << '\n';
      }
      return 0;
    }

    if (*render) {
      const SchottkyDescription desc = load(input);
      spec.layers.clear();
      for (const auto& name : split_list(layers_text)) spec.layers.insert(parse_layer(name));
      if (viewport_text.empty()) {
        spec = fit_viewport(desc, spec);
      } else {
        const auto parts = split_list(viewport_text);
        if (parts.size() != 3) throw IoError("--viewport expects x_min,x_max,y_max");
        try {
          spec.x_min = Rational::parse(parts[0]);
          spec.x_max = Rational::parse(parts[1]);
          spec.y_max = Rational::parse(parts[2]);
        } catch (const std::invalid_argument& e) {
          throw IoError(std::string("--viewport: ") + e.what());
        }
      }
      const RenderResult result = render_svg(desc, spec);
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
      write_output(output, result.svg);
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const ReductionBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "; partial word: " << e.partial_word().to_string() << "; last point: "
              << e.last_point().re() << ", " << e.last_point().im() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return 0;
}
