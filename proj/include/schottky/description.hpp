#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schottky/moebius.hpp"

namespace schottky {

/// Open interval (left, right) of R with left < right.
class IntervalOnR {
 public:
  IntervalOnR(Rational left, Rational right);

  const Rational& left() const { return left_; }
  const Rational& right() const { return right_; }

  friend bool operator==(const IntervalOnR&, const IntervalOnR&) = default;

 private:
  Rational left_;
  Rational right_;
};

enum class Family { F, G, H };

/// Names one generator of the construction: F(t), G(k,n) or H(k,n),
/// optionally inverted. For F the second index is unused and held at 0.
struct GeneratorLabel {
  Family family = Family::F;
  int k = 1;  // t for the F family
  int n = 0;
  bool inverted = false;

  static GeneratorLabel f(int t, bool inv = false) { return {Family::F, t, 0, inv}; }
  static GeneratorLabel g(int k, int n, bool inv = false) { return {Family::G, k, n, inv}; }
  static GeneratorLabel h(int k, int n, bool inv = false) { return {Family::H, k, n, inv}; }

  GeneratorLabel inverse() const { return {family, k, n, !inverted}; }

  /// "F(1)", "G(2,3)^-1", ...
  std::string to_string() const;
  static GeneratorLabel parse(std::string_view text);

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Index of a generator in the description: an element of the symmetric
/// index set I ⊂ Z.
using Index = std::int64_t;

/// Prime-power index: F(t) ↦ 2^t, G(k,n) ↦ 3·p_{4+n}^k, H(k,n) ↦ 5·p_{4+n}^k,
/// negated for inverses. Throws std::overflow_error past 64 bits.
Index psi_index(const GeneratorLabel& label);

struct DescriptionEntry {
  std::optional<GeneratorLabel> label;
  MoebiusMap map;
  IntervalOnR interval;
  HalfCircle circle;
};

enum class Variant { GammaMS, Genus0, Custom };

struct DescriptionParams {
  Variant variant = Variant::Custom;
  int m = 0;
  int s = 0;
  int N = 0;

  friend bool operator==(const DescriptionParams&, const DescriptionParams&) = default;
};

/// A finite Schottky description: index κ ↦ (label, generator, interval,
/// isometric circle). Builders establish the structural invariants; parsed
/// or hand-made descriptions may violate them and validate() reports how.
class SchottkyDescription {
 public:
  SchottkyDescription(DescriptionParams params, std::map<Index, DescriptionEntry> entries);

  const DescriptionParams& params() const { return params_; }
  const std::map<Index, DescriptionEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(Index k) const { return entries_.count(k) != 0; }
  /// Throws std::out_of_range for an unknown index.
  const DescriptionEntry& at(Index k) const;

  /// Entries whose positive-index member satisfies `keep`, together with
  /// their inverses. The result is a Custom description that remembers
  /// the original (m, s, N).
  SchottkyDescription restricted(const std::function<bool(Index, const DescriptionEntry&)>& keep) const;

 private:
  DescriptionParams params_;
  std::map<Index, DescriptionEntry> entries_;
};

/// Construct Γ_{m,s} truncated to n ≤ N. Requires 1 < m ≤ s and N ≥ 1.
SchottkyDescription build_gamma_ms(int m, int s, int N);
/// Construct the genus-zero group generated by f_1..f_{s-1}. Requires s ≥ 2.
SchottkyDescription build_gamma_s(int s);

/// Hand-made description from (positive index, circle, partner circle)
/// triples. Each generator is pairing_map(circle, partner); the negative
/// index holds its inverse. Intended for synthetic patterns in tests.
struct CirclePair {
  Index index;
  HalfCircle circle;
  HalfCircle partner;
};
SchottkyDescription make_description(const std::vector<CirclePair>& pairs);

struct ValidationFailure {
  int condition;  // 1..5
  Index index;
  std::optional<Index> other;
  std::string reason;
};

struct ConditionResult {
  bool pass = true;
  std::vector<ValidationFailure> witnesses;
};

struct ValidationReport {
  Rational epsilon;
  std::array<ConditionResult, 5> conditions;
  /// Minimum inversive distance over all pairs of distinct circles, if any.
  std::optional<Rational> min_inversive_distance;
  std::optional<std::pair<Index, Index>> min_pair;
  /// arccosh(min δ)/2: the largest ε for which condition 5 would hold.
  double certified_epsilon = 0.0;

  bool all_pass() const;
  std::vector<ValidationFailure> failures() const;
};

/// Check the five Schottky-description conditions. Condition 5 asks for
/// δ > cosh(2ε) on every pair; this is decided exactly with rational bounds
/// on the cosh series. Failures are reported, never thrown.
ValidationReport validate(const SchottkyDescription& desc, const Rational& epsilon);

/// Exact decision of cosh(x) < delta for rational x ≥ 0.
bool cosh_below(const Rational& x, const Rational& delta);

struct SeparationCheck {
  /// |α1-α2| > r1 + r2
  bool weak_hypothesis = false;
  /// |α1-α2| ≥ 2(r1 + r2): the strips {|Re z - αi| < 2ri} are disjoint.
  bool strip_hypothesis = false;
  /// arccosh(δ)/2 when δ > 1, else 0.
  double neighborhoods_disjoint_for = 0.0;
};

SeparationCheck strip_separation_check(const HalfCircle& c1, const HalfCircle& c2);

}  // namespace schottky
