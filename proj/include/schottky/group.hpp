#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schottky/description.hpp"

namespace schottky {

/// Reduced word over the generator indices of a description: no letter is
/// immediately followed by its inverse.
struct Word {
  std::vector<Index> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool is_reduced() const;
  /// Comma-separated indices, "-" for the empty word.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
};

struct GroupElement {
  Word word;
  MoebiusMap map;
};

/// Longest word enumerate_words accepts unless allow_long is set.
inline constexpr int kDefaultMaxWordLength = 8;

/// Visits every reduced word of length ≤ max_len in shortlex order, letters
/// ordered by index value. The callback returns false to stop early.
void for_each_word(const SchottkyDescription& desc, int max_len, const std::function<bool(const Word&)>& visit,
                   bool allow_long = false);

std::vector<Word> enumerate_words(const SchottkyDescription& desc, int max_len, bool allow_long = false);

/// The word acts letter by letter from the left: element_of([k1, k2]) is
/// z ↦ f_{k2}(f_{k1}(z)). Throws std::invalid_argument for unreduced words
/// and std::out_of_range for unknown letters.
GroupElement element_of(const SchottkyDescription& desc, const Word& word);

struct DomainCertificate {
  QPoint point;
  bool in_domain = true;
  /// First index (in index order) whose isometric circle strictly contains the point.
  std::optional<Index> violating_index;
};

/// Membership in the closed standard fundamental domain: |c_k z + d_k|² ≥ 1
/// for every generator.
DomainCertificate in_fundamental_domain(const SchottkyDescription& desc, const QPoint& z);

struct Reduction {
  QPoint point;
  Word word;
  /// The point after each step, starting with the input.
  std::vector<QPoint> trace;
};

class ReductionBudgetExceeded : public std::runtime_error {
 public:
  ReductionBudgetExceeded(Word partial, QPoint last);
  const Word& partial_word() const { return partial_; }
  const QPoint& last_point() const { return last_; }

 private:
  Word partial_;
  QPoint last_;
};

inline constexpr int kDefaultReductionBudget = 10'000;

/// Ford reduction: while z lies strictly inside some C(f_k), replace z by
/// f_k(z) and append k. On success element_of(word) maps the input onto the
/// returned point, which lies in the closed fundamental domain.
Reduction reduce_to_domain(const SchottkyDescription& desc, const QPoint& z, int max_iters = kDefaultReductionBudget);

struct Tile {
  Word word;
  std::vector<Geodesic> sides;
};

/// For each reduced word of length ≤ max_len, the images of every boundary
/// circle of the fundamental domain under element_of(word).
std::vector<Tile> tessellation_tiles(const SchottkyDescription& desc, int max_len, bool allow_long = false);

}  // namespace schottky
