#include "schottky/group.hpp"

#include <string>

namespace schottky {

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == -letters[i - 1]) return false;
  return true;
}

std::string Word::to_string() const {
  if (letters.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

namespace {

void check_length(int max_len, bool allow_long) {
  if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
  if (!allow_long && max_len > kDefaultMaxWordLength)
    throw std::invalid_argument("max_len above " + std::to_string(kDefaultMaxWordLength) +
                                " requires an explicit override");
}

// Emits all reduced words of exactly `remaining` more letters after `prefix`,
// in lexicographic order. Returns false once the visitor asks to stop.
bool extend(const std::vector<Index>& alphabet, Word& prefix, int remaining,
            const std::function<bool(const Word&)>& visit) {
  if (remaining == 0) return visit(prefix);
  for (const Index k : alphabet) {
    if (!prefix.letters.empty() && prefix.letters.back() == -k) continue;
    prefix.letters.push_back(k);
    const bool go_on = extend(alphabet, prefix, remaining - 1, visit);
    prefix.letters.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_word(const SchottkyDescription& desc, int max_len, const std::function<bool(const Word&)>& visit,
                   bool allow_long) {
  check_length(max_len, allow_long);
  std::vector<Index> alphabet;
  for (const auto& [k, e] : desc.entries()) alphabet.push_back(k);
  Word prefix;
  for (int len = 0; len <= max_len; ++len)
    if (!extend(alphabet, prefix, len, visit)) return;
}

std::vector<Word> enumerate_words(const SchottkyDescription& desc, int max_len, bool allow_long) {
  std::vector<Word> out;
  for_each_word(
      desc, max_len,
      [&](const Word& w) {
        out.push_back(w);
        return true;
      },
      allow_long);
  return out;
}

GroupElement element_of(const SchottkyDescription& desc, const Word& word) {
  if (!word.is_reduced()) throw std::invalid_argument("word is not reduced: " + word.to_string());
  MoebiusMap map = MoebiusMap::identity();
  for (const Index k : word.letters) map = compose(desc.at(k).map, map);
  return {word, map};
}

DomainCertificate in_fundamental_domain(const SchottkyDescription& desc, const QPoint& z) {
  for (const auto& [k, e] : desc.entries()) {
    if (denominator_norm(e.map, z) < Rational(1)) return {z, false, k};
  }
  return {z, true, std::nullopt};
}

ReductionBudgetExceeded::ReductionBudgetExceeded(Word partial, QPoint last)
    : std::runtime_error("reduction did not reach the fundamental domain within the iteration budget"),
      partial_(std::move(partial)),
      last_(std::move(last)) {}

Reduction reduce_to_domain(const SchottkyDescription& desc, const QPoint& z, int max_iters) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  Reduction out{z, {}, {z}};
  for (int iter = 0; iter < max_iters; ++iter) {
    const DomainCertificate cert = in_fundamental_domain(desc, out.point);
    if (cert.in_domain) return out;
    out.point = apply(desc.at(*cert.violating_index).map, out.point);
    out.word.letters.push_back(*cert.violating_index);
    out.trace.push_back(out.point);
  }
  if (in_fundamental_domain(desc, out.point).in_domain) return out;
  throw ReductionBudgetExceeded(out.word, out.point);
}

std::vector<Tile> tessellation_tiles(const SchottkyDescription& desc, int max_len, bool allow_long) {
  std::vector<Tile> tiles;
  for_each_word(
      desc, max_len,
      [&](const Word& w) {
        const MoebiusMap g = element_of(desc, w).map;
        Tile tile{w, {}};
        tile.sides.reserve(desc.size());
        for (const auto& [k, e] : desc.entries()) tile.sides.push_back(image(g, e.circle));
        tiles.push_back(std::move(tile));
        return true;
      },
      allow_long);
  return tiles;
}

}  // namespace schottky
