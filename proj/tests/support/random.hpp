#pragma once

#include <cstdint>
#include <random>

#include "schottky/moebius.hpp"

namespace testing_support {

using schottky::MoebiusMap;
using schottky::QPoint;
using schottky::Rational;

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_num = 50, std::int64_t max_den = 12) {
  std::uniform_int_distribution<std::int64_t> num(-max_num, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_positive(std::mt19937_64& rng, std::int64_t max_num = 50, std::int64_t max_den = 12) {
  std::uniform_int_distribution<std::int64_t> num(1, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline QPoint random_point(std::mt19937_64& rng) { return QPoint(random_rational(rng), random_positive(rng)); }

/// Unit-determinant rational matrix: pick a, c, d freely (a ≠ 0) and solve
/// for b, or c = 0 with d = 1/a.
inline MoebiusMap random_map(std::mt19937_64& rng) {
  Rational a = random_rational(rng);
  while (a.is_zero()) a = random_rational(rng);
  const Rational c = random_rational(rng);
  const Rational d = random_rational(rng);
  if (c.is_zero()) return MoebiusMap(a, random_rational(rng), Rational(0), a.reciprocal());
  // ad - bc = 1  ⇒  b = (ad - 1)/c
  return MoebiusMap(a, (a * d - Rational(1)) / c, c, d);
}

}  // namespace testing_support
