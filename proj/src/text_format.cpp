#include "schottky/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace schottky {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

constexpr std::string_view kMagic = "schottky v1";

std::string header_of(const DescriptionParams& p) {
  switch (p.variant) {
    case Variant::GammaMS:
      return std::string(kMagic) + "; m=" + std::to_string(p.m) + "; s=" + std::to_string(p.s) +
             "; N=" + std::to_string(p.N);
    case Variant::Genus0: return std::string(kMagic) + "; variant=genus0; s=" + std::to_string(p.s);
    case Variant::Custom: return std::string(kMagic) + "; variant=custom";
  }
  return {};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  for (auto w : split(trim(s), ' '))
    if (!w.empty()) out.push_back(w);
  return out;
}

template <typename Int>
Int to_int(std::string_view s, int line, const char* what) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
  return v;
}

Rational to_rational(std::string_view s, int line) {
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

DescriptionParams parse_header(std::string_view line) {
  const auto parts = split(line, ';');
  if (parts.empty() || trim(parts[0]) != kMagic) throw ParseError(1, "expected header starting with 'schottky v1'");
  std::map<std::string, std::string, std::less<>> kv;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto item = trim(parts[i]);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(1, "malformed header field '" + std::string(item) + "'");
    if (!kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second)
      throw ParseError(1, "duplicate header field '" + std::string(item.substr(0, eq)) + "'");
  }
  DescriptionParams p;
  const auto take = [&](const char* key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(1, std::string("header is missing '") + key + "'");
    const int v = to_int<int>(it->second, 1, key);
    kv.erase(it);
    return v;
  };
  if (const auto it = kv.find("variant"); it != kv.end()) {
    const std::string variant = it->second;
    kv.erase(it);
    if (variant == "genus0") {
      p.variant = Variant::Genus0;
      p.s = take("s");
    } else if (variant == "custom") {
      p.variant = Variant::Custom;
    } else {
      throw ParseError(1, "unknown variant '" + variant + "'");
    }
  } else {
    p.variant = Variant::GammaMS;
    p.m = take("m");
    p.s = take("s");
    p.N = take("N");
  }
  if (!kv.empty()) throw ParseError(1, "unexpected header field '" + kv.begin()->first + "'");
  if (header_of(p) != trim(line)) throw ParseError(1, "header is not in canonical form");
  return p;
}

}  // namespace

std::string serialize(const SchottkyDescription& desc) {
  std::ostringstream out;
  out << header_of(desc.params()) << '\n';
  for (const auto& [k, e] : desc.entries()) {
    out << k << " | " << (e.label ? e.label->to_string() : "-") << " | " << e.map.a() << ' ' << e.map.b() << ' '
        << e.map.c() << ' ' << e.map.d() << " | " << e.circle.center() << ' ' << e.circle.radius() << " | "
        << e.interval.left() << ' ' << e.interval.right() << '\n';
  }
  return out.str();
}

SchottkyDescription parse_description(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "empty document");
  const DescriptionParams params = parse_header(lines[0]);

  std::map<Index, DescriptionEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const auto fields = split(lines[i], '|');
    if (fields.size() != 5) throw ParseError(ln, "expected 5 '|'-separated fields");
    const Index k = to_int<Index>(trim(fields[0]), ln, "index");

    std::optional<GeneratorLabel> label;
    if (const auto l = trim(fields[1]); l != "-") {
      try {
        label = GeneratorLabel::parse(l);
      } catch (const std::exception& e) {
        throw ParseError(ln, e.what());
      }
    }
    const auto m = words(fields[2]);
    const auto c = words(fields[3]);
    const auto iv = words(fields[4]);
    if (m.size() != 4) throw ParseError(ln, "expected 4 matrix entries");
    if (c.size() != 2) throw ParseError(ln, "expected center and radius");
    if (iv.size() != 2) throw ParseError(ln, "expected interval endpoints");
    try {
      MoebiusMap map(to_rational(m[0], ln), to_rational(m[1], ln), to_rational(m[2], ln), to_rational(m[3], ln));
      HalfCircle circle(to_rational(c[0], ln), to_rational(c[1], ln));
      IntervalOnR interval(to_rational(iv[0], ln), to_rational(iv[1], ln));
      if (!entries.emplace(k, DescriptionEntry{label, map, interval, circle}).second)
        throw ParseError(ln, "duplicate index " + std::to_string(k));
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln, e.what());
    }
  }
  return SchottkyDescription(params, std::move(entries));
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json j;
  j["epsilon"] = report.epsilon.to_string();
  j["valid"] = report.all_pass();
  nlohmann::json conds = nlohmann::json::array();
  for (std::size_t i = 0; i < report.conditions.size(); ++i) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : report.conditions[i].witnesses) {
      nlohmann::json wj{{"index", w.index}, {"reason", w.reason}};
      if (w.other) wj["other"] = *w.other;
      witnesses.push_back(std::move(wj));
    }
    conds.push_back({{"condition", i + 1}, {"pass", report.conditions[i].pass}, {"witnesses", witnesses}});
  }
  j["conditions"] = std::move(conds);
  j["min_inversive_distance"] =
      report.min_inversive_distance ? nlohmann::json(report.min_inversive_distance->to_string()) : nlohmann::json();
  if (report.min_pair) j["min_pair"] = {report.min_pair->first, report.min_pair->second};
  j["certified_epsilon"] = report.certified_epsilon;
  return j;
}

nlohmann::json to_json(const SurfaceSignature& sig) {
  return {{"r", sig.rank}, {"b", sig.boundary_components}, {"g", sig.genus}, {"chi", sig.euler_characteristic}};
}

nlohmann::json to_json(const EndsProfile& profile) {
  nlohmann::json regions = nlohmann::json::array();
  for (const auto& [t, g] : profile.per_region_genus) {
    const auto b = profile.per_region_boundary.find(t);
    regions.push_back({{"region", t}, {"genus", g}, {"boundary", b == profile.per_region_boundary.end() ? 0 : b->second}});
  }
  nlohmann::json j{{"level", profile.level}, {"signature", to_json(profile.signature_at_level)}, {"regions", regions}};
  if (const auto it = profile.per_region_boundary.find(0); it != profile.per_region_boundary.end())
    j["unattributed_boundary"] = it->second;
  return j;
}

}  // namespace schottky
