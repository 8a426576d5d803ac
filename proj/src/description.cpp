#include "schottky/description.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "schottky/primes.hpp"

namespace schottky {

IntervalOnR::IntervalOnR(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_ < right_)) throw std::invalid_argument("interval requires left < right");
}

std::string GeneratorLabel::to_string() const {
  std::string out;
  switch (family) {
    case Family::F: out = "F(" + std::to_string(k) + ")"; break;
    case Family::G: out = "G(" + std::to_string(k) + "," + std::to_string(n) + ")"; break;
    case Family::H: out = "H(" + std::to_string(k) + "," + std::to_string(n) + ")"; break;
  }
  if (inverted) out += "^-1";
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
    throw std::invalid_argument("malformed generator label: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

GeneratorLabel GeneratorLabel::parse(std::string_view text) {
  const std::string_view whole = text;
  const auto bad = [&] { return std::invalid_argument("malformed generator label: '" + std::string(whole) + "'"); };
  GeneratorLabel label;
  if (text.size() >= 3 && text.substr(text.size() - 3) == "^-1") {
    label.inverted = true;
    text.remove_suffix(3);
  }
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') throw bad();
  const std::string_view args = text.substr(2, text.size() - 3);
  switch (text[0]) {
    case 'F':
      label.family = Family::F;
      label.k = parse_int(args, whole);
      label.n = 0;
      return label;
    case 'G': label.family = Family::G; break;
    case 'H': label.family = Family::H; break;
    default: throw bad();
  }
  const auto comma = args.find(',');
  if (comma == std::string_view::npos) throw bad();
  label.k = parse_int(args.substr(0, comma), whole);
  label.n = parse_int(args.substr(comma + 1), whole);
  return label;
}

namespace {

Index checked_mul(Index a, Index b) {
  Index out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("generator index exceeds 64 bits");
  return out;
}

Index checked_pow(Index base, int exp) {
  Index out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

Index psi_index(const GeneratorLabel& label) {
  Index value = 0;
  switch (label.family) {
    case Family::F: value = checked_pow(nth_prime(1), label.k); break;
    case Family::G: value = checked_mul(nth_prime(2), checked_pow(nth_prime(4 + label.n), label.k)); break;
    case Family::H: value = checked_mul(nth_prime(3), checked_pow(nth_prime(4 + label.n), label.k)); break;
  }
  return label.inverted ? -value : value;
}

SchottkyDescription::SchottkyDescription(DescriptionParams params, std::map<Index, DescriptionEntry> entries)
    : params_(params), entries_(std::move(entries)) {}

const DescriptionEntry& SchottkyDescription::at(Index k) const {
  const auto it = entries_.find(k);
  if (it == entries_.end()) throw std::out_of_range("unknown generator index " + std::to_string(k));
  return it->second;
}

SchottkyDescription SchottkyDescription::restricted(
    const std::function<bool(Index, const DescriptionEntry&)>& keep) const {
  std::map<Index, DescriptionEntry> kept;
  for (const auto& [k, e] : entries_) {
    if (k <= 0 || !keep(k, e)) continue;
    kept.emplace(k, e);
    if (const auto it = entries_.find(-k); it != entries_.end()) kept.emplace(-k, it->second);
  }
  DescriptionParams p = params_;
  p.variant = Variant::Custom;
  return SchottkyDescription(p, std::move(kept));
}

namespace {

void add_pair(std::map<Index, DescriptionEntry>& entries, const GeneratorLabel& label, const MoebiusMap& map) {
  for (const auto& [l, f] : {std::pair{label, map}, std::pair{label.inverse(), invert(map)}}) {
    HalfCircle circle = isometric_circle(f);
    IntervalOnR interval(circle.left(), circle.right());
    entries.emplace(psi_index(l), DescriptionEntry{l, f, std::move(interval), std::move(circle)});
  }
}

// f_t(z) = (-5t z + (25t² - 1)) / (z - 5t)
MoebiusMap f_map(int t) {
  const Rational ft(5 * static_cast<std::int64_t>(t));
  return MoebiusMap(-ft, ft * ft - Rational(1), Rational(1), -ft);
}

struct BlockConstants {
  Rational scale;  // 2^n · 10
  Rational low;    // 13 + (5k - 3) · 2^n · 10
  Rational high;   // 17 + (5k - 3) · 2^n · 10
};

BlockConstants block_constants(int k, int n) {
  const Rational scale = pow(Rational(2), static_cast<unsigned>(n)) * Rational(10);
  const Rational offset = Rational(5 * static_cast<std::int64_t>(k) - 3) * scale;
  return {scale, Rational(13) + offset, Rational(17) + offset};
}

// g_{k,n}: isometric circle centred at low/scale, C(g⁻¹) at -high/scale.
MoebiusMap g_map(int k, int n) {
  const auto [scale, low, high] = block_constants(k, n);
  return MoebiusMap(-high, (high * low - Rational(1)) / scale, scale, -low);
}

// h_{k,n}: isometric circle centred at high/scale, C(h⁻¹) at -low/scale.
MoebiusMap h_map(int k, int n) {
  const auto [scale, low, high] = block_constants(k, n);
  return MoebiusMap(-low, (high * low - Rational(1)) / scale, scale, -high);
}

}  // namespace

SchottkyDescription build_gamma_ms(int m, int s, int N) {
  if (m <= 1 || m > s) throw std::invalid_argument("require 1 < m <= s");
  if (N < 1) throw std::invalid_argument("require N >= 1");
  std::map<Index, DescriptionEntry> entries;
  for (int t = 1; t <= s - 1; ++t) add_pair(entries, GeneratorLabel::f(t), f_map(t));
  for (int k = 1; k <= m; ++k) {
    for (int n = 1; n <= N; ++n) {
      add_pair(entries, GeneratorLabel::g(k, n), g_map(k, n));
      add_pair(entries, GeneratorLabel::h(k, n), h_map(k, n));
    }
  }
  return SchottkyDescription({Variant::GammaMS, m, s, N}, std::move(entries));
}

SchottkyDescription build_gamma_s(int s) {
  if (s < 2) throw std::invalid_argument("require s >= 2");
  std::map<Index, DescriptionEntry> entries;
  for (int t = 1; t <= s - 1; ++t) add_pair(entries, GeneratorLabel::f(t), f_map(t));
  return SchottkyDescription({Variant::Genus0, 0, s, 0}, std::move(entries));
}

SchottkyDescription make_description(const std::vector<CirclePair>& pairs) {
  std::map<Index, DescriptionEntry> entries;
  for (const auto& p : pairs) {
    if (p.index <= 0) throw std::invalid_argument("pair index must be positive");
    const MoebiusMap f = pairing_map(p.circle, p.partner);
    entries.emplace(p.index, DescriptionEntry{std::nullopt, f, IntervalOnR(p.circle.left(), p.circle.right()), p.circle});
    entries.emplace(-p.index,
                    DescriptionEntry{std::nullopt, invert(f), IntervalOnR(p.partner.left(), p.partner.right()), p.partner});
  }
  return SchottkyDescription({}, std::move(entries));
}

bool ValidationReport::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.pass; });
}

std::vector<ValidationFailure> ValidationReport::failures() const {
  std::vector<ValidationFailure> out;
  for (const auto& c : conditions) out.insert(out.end(), c.witnesses.begin(), c.witnesses.end());
  return out;
}

bool cosh_below(const Rational& x, const Rational& delta) {
  if (x.sign() < 0) return cosh_below(-x, delta);
  if (x.is_zero()) return Rational(1) < delta;
  // cosh x = Σ x^{2j}/(2j)!. After the term of order 2J the tail is bounded by
  // the next term times 1/(1 - x²/((2J+3)(2J+4))) once that ratio is < 1.
  const Rational x2 = x * x;
  Rational term(1);
  Rational partial(1);
  for (int j = 1; j <= 400; ++j) {
    const std::int64_t n = 2 * static_cast<std::int64_t>(j);
    term = term * x2 / Rational((n - 1) * n);
    partial += term;
    if (delta <= partial) return false;
    const Rational next = term * x2 / Rational((n + 1) * (n + 2));
    const Rational ratio = x2 / Rational((n + 3) * (n + 4));
    if (ratio < Rational(1)) {
      const Rational upper = partial + next / (Rational(1) - ratio);
      if (upper < delta) return true;
    }
  }
  return false;
}

ValidationReport validate(const SchottkyDescription& desc, const Rational& epsilon) {
  ValidationReport report;
  report.epsilon = epsilon;
  auto fail = [&](int condition, Index k, std::optional<Index> other, std::string reason) {
    auto& c = report.conditions[static_cast<std::size_t>(condition - 1)];
    c.pass = false;
    c.witnesses.push_back({condition, k, other, std::move(reason)});
  };

  // 1: closures pairwise disjoint. Sorting by left endpoint reduces this to
  // neighbours, but every overlapping pair is reported.
  std::vector<std::pair<Index, const IntervalOnR*>> sorted;
  for (const auto& [k, e] : desc.entries()) sorted.emplace_back(k, &e.interval);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.second->left() < y.second->left(); });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[j].second->left() > sorted[i].second->right()) break;
      fail(1, sorted[i].first, sorted[j].first, "interval closures intersect");
    }
  }

  // 2: in the half-plane model, no closure may contain ∞. Intervals carry
  // finite rational endpoints, so the remaining check is non-degeneracy.
  for (const auto& [k, e] : desc.entries())
    if (!(e.interval.left() < e.interval.right())) fail(2, k, std::nullopt, "interval is not bounded and open");

  // 3: the circle over A_k is the isometric circle of f_k, and the index set
  // is symmetric with f_{-k} = f_k⁻¹.
  for (const auto& [k, e] : desc.entries()) {
    if (k == 0) {
      fail(3, k, std::nullopt, "index 0 is not allowed");
      continue;
    }
    if (!desc.contains(-k)) {
      fail(3, k, -k, "index set is not symmetric");
    } else if (desc.at(-k).map != invert(e.map)) {
      fail(3, k, -k, "generator at -k is not the inverse of the generator at k");
    }
    if (e.map.c().is_zero()) {
      fail(3, k, std::nullopt, "generator is affine and has no isometric circle");
      continue;
    }
    if (isometric_circle(e.map) != e.circle) fail(3, k, std::nullopt, "circle is not the isometric circle of f_k");
    if (e.interval.left() != e.circle.left() || e.interval.right() != e.circle.right())
      fail(3, k, std::nullopt, "interval endpoints differ from circle endpoints");
  }

  // 4
  for (const auto& [k, e] : desc.entries())
    if (classify(e.map) != Classification::Hyperbolic)
      fail(4, k, std::nullopt, std::string("generator is ") + to_string(classify(e.map)));

  // 5: closed ε-neighbourhoods disjoint ⇔ distance > 2ε ⇔ δ > cosh(2ε).
  const Rational two_eps = Rational(2) * epsilon;
  for (auto i = desc.entries().begin(); i != desc.entries().end(); ++i) {
    for (auto j = std::next(i); j != desc.entries().end(); ++j) {
      const Rational delta = inversive_distance(i->second.circle, j->second.circle);
      if (!report.min_inversive_distance || delta < *report.min_inversive_distance) {
        report.min_inversive_distance = delta;
        report.min_pair = {i->first, j->first};
      }
      if (delta <= Rational(1)) {
        fail(5, i->first, j->first, "half-circles intersect or are nested (delta = " + delta.to_string() + ")");
      } else if (!cosh_below(two_eps, delta)) {
        fail(5, i->first, j->first, "epsilon-neighbourhoods meet (delta = " + delta.to_string() + ")");
      }
    }
  }
  if (report.min_inversive_distance && *report.min_inversive_distance > Rational(1))
    report.certified_epsilon = std::acosh(report.min_inversive_distance->to_double()) / 2.0;
  return report;
}

SeparationCheck strip_separation_check(const HalfCircle& c1, const HalfCircle& c2) {
  SeparationCheck out;
  const Rational gap = (c1.center() - c2.center()).abs();
  const Rational sum = c1.radius() + c2.radius();
  out.weak_hypothesis = gap > sum;
  out.strip_hypothesis = gap >= Rational(2) * sum;
  const Rational delta = inversive_distance(c1, c2);
  if (delta > Rational(1)) out.neighborhoods_disjoint_for = std::acosh(delta.to_double()) / 2.0;
  return out;
}

}  // namespace schottky
