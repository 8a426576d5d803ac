#include "schottky/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schottky {

namespace {

Side landing_side(const BoundaryPoint& image, const IntervalOnR& target, Index k, const char* which) {
  if (!image.is_infinite()) {
    if (image.value() == target.left()) return Side::Left;
    if (image.value() == target.right()) return Side::Right;
  }
  throw std::logic_error("generator " + std::to_string(k) + " sends the " + which +
                         " endpoint of its interval off the paired interval's endpoints");
}

}  // namespace

PairingPattern pattern_of(const SchottkyDescription& desc) {
  std::vector<Index> order;
  for (const auto& [k, e] : desc.entries()) order.push_back(k);
  std::sort(order.begin(), order.end(),
            [&](Index x, Index y) { return desc.at(x).interval.left() < desc.at(y).interval.left(); });
  std::map<Index, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  PairingPattern p;
  p.slots.reserve(order.size());
  for (const Index k : order) {
    const auto partner = position.find(-k);
    if (partner == position.end())
      throw std::logic_error("generator " + std::to_string(k) + " has no paired interval");
    const DescriptionEntry& e = desc.at(k);
    const IntervalOnR& target = desc.at(-k).interval;
    const Side l = landing_side(apply_boundary(e.map, e.interval.left()), target, k, "left");
    const Side r = landing_side(apply_boundary(e.map, e.interval.right()), target, k, "right");
    if (l == r) throw std::logic_error("generator " + std::to_string(k) + " collapses its interval's endpoints");
    p.slots.push_back({k, e.interval, partner->second, l, r});
  }
  return p;
}

std::vector<std::vector<std::size_t>> trace_boundary(const PairingPattern& p) {
  const std::size_t n = p.slots.size();
  if (n == 0) return {{0}};
  // Arc i ends at the left endpoint of slot i+1. Its generator carries that
  // point to an endpoint of the partner slot, where the next arc leaves; an
  // orientation-preserving gluing always lands on the partner's right end,
  // which is where arc `partner` starts.
  std::vector<std::size_t> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Slot& s = p.slots[(i + 1) % n];
    if (s.left_lands_on != Side::Right)
      throw std::logic_error("orientation-reversing endpoint gluing at generator " + std::to_string(s.index));
    next[i] = s.partner;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t a = start; !seen[a]; a = next[a]) {
      seen[a] = true;
      cycle.push_back(a);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

int boundary_cycles(const PairingPattern& p) { return static_cast<int>(trace_boundary(p).size()); }

SurfaceSignature signature(const PairingPattern& p) {
  SurfaceSignature sig;
  sig.rank = static_cast<int>(p.slots.size() / 2);
  sig.boundary_components = boundary_cycles(p);
  sig.euler_characteristic = 1 - sig.rank;
  const int twice_genus = 2 - sig.euler_characteristic - sig.boundary_components;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("inconsistent pairing: 1 + r - b = " + std::to_string(twice_genus) + " is not 2g");
  sig.genus = twice_genus / 2;
  return sig;
}

CompactBox compact_box(int s, int l) {
  if (s < 1 || l < 1) throw std::invalid_argument("compact box requires s >= 1 and l >= 1");
  const Rational half_width(5 * static_cast<std::int64_t>(s - 1) + l);
  return {l, -half_width, half_width, Rational(1, l), Rational(l + 1)};
}

std::set<int> EndsProfile::genus_carrying_regions() const {
  std::set<int> out;
  for (const auto& [t, g] : per_region_genus)
    if (g > 0) out.insert(t);
  return out;
}

int region_of_arc(const PairingPattern& p, std::size_t arc, int s) {
  const std::size_t n = p.slots.size();
  if (n == 0 || arc + 1 >= n) return s;
  const Rational mid = ((p.slots[arc].interval.right() + p.slots[arc + 1].interval.left()) / Rational(2)).abs();
  for (int t = 1; t < s; ++t)
    if (mid < Rational(5 * static_cast<std::int64_t>(t))) return t;
  return s;
}

namespace {

bool is_block(const DescriptionEntry& e) { return e.label && e.label->family != Family::F; }

}  // namespace

EndsProfile ends_profile(const SchottkyDescription& desc, int level) {
  const DescriptionParams& params = desc.params();
  if (params.s < 1) throw std::invalid_argument("ends profile needs a description built for Gamma_{m,s} or Gamma_s");
  if (level < 0) throw std::invalid_argument("exhaustion level must be non-negative");
  for (const auto& [k, e] : desc.entries())
    if (!e.label) throw std::invalid_argument("ends profile needs labelled generators");

  EndsProfile profile;
  profile.level = level;
  const SchottkyDescription surviving =
      desc.restricted([&](Index, const DescriptionEntry& e) { return !is_block(e) || e.label->n > level; });
  const PairingPattern pattern = pattern_of(surviving);
  profile.signature_at_level = signature(pattern);

  for (int t = 1; t <= params.s; ++t) {
    const SchottkyDescription region = desc.restricted(
        [&](Index, const DescriptionEntry& e) { return is_block(e) && e.label->k == t && e.label->n > level; });
    profile.per_region_genus[t] = signature(pattern_of(region)).genus;
    profile.per_region_boundary[t] = 0;
  }

  for (const auto& cycle : trace_boundary(pattern)) {
    const int region = region_of_arc(pattern, cycle.front(), params.s);
    const bool uniform = std::all_of(cycle.begin(), cycle.end(),
                                     [&](std::size_t a) { return region_of_arc(pattern, a, params.s) == region; });
    // Region 0 collects cycles whose arcs wander across several bands.
    ++profile.per_region_boundary[uniform ? region : 0];
  }
  return profile;
}

SurfaceSignature block_signature(const SchottkyDescription& desc, int k, int n_pair) {
  const DescriptionParams& params = desc.params();
  if (params.variant != Variant::GammaMS) throw std::invalid_argument("block signature needs a Gamma_{m,s} description");
  if (k < 1 || k > params.m) throw std::invalid_argument("block index k out of range 1..m");
  if (n_pair < 1 || 2 * n_pair > params.N)
    throw std::invalid_argument("block needs n = " + std::to_string(2 * n_pair) + " within the truncation N = " +
                                std::to_string(params.N));
  const SchottkyDescription block = desc.restricted([&](Index, const DescriptionEntry& e) {
    return is_block(e) && e.label->k == k && (e.label->n == 2 * n_pair - 1 || e.label->n == 2 * n_pair);
  });
  return signature(pattern_of(block));
}

}  // namespace schottky
