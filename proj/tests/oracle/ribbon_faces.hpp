#pragma once

// Independent boundary-count oracle. The boundary of the fundamental domain
// is read as a one-vertex ribbon graph: half-edges are the intervals in
// cyclic order along R ∪ {∞}, edges join paired intervals. Faces of the
// ribbon graph are the cycles of (next-in-cyclic-order) ∘ (pair swap), and
// each face is one boundary component of the quotient. Uses only the cyclic
// order and the pairing, never the generators' endpoint images.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "schottky/description.hpp"

namespace oracle {

/// `cyclic` lists a pair id for each interval in cyclic order; every id
/// occurs exactly twice.
inline int ribbon_faces(const std::vector<long>& cyclic) {
  const std::size_t n = cyclic.size();
  if (n == 0) return 1;
  std::map<long, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < n; ++i) where[cyclic[i]].push_back(i);
  std::vector<std::size_t> swap(n);
  for (const auto& [id, pos] : where) {
    if (pos.size() != 2) throw std::invalid_argument("every pair id must occur twice");
    swap[pos[0]] = pos[1];
    swap[pos[1]] = pos[0];
  }
  std::vector<bool> seen(n, false);
  int faces = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++faces;
    for (std::size_t i = start; !seen[i]; i = (swap[i] + 1) % n) seen[i] = true;
  }
  return faces;
}

/// Cyclic pair-id sequence of a description: intervals sorted by left
/// endpoint, pair id |k|.
inline std::vector<long> cyclic_pairs(const schottky::SchottkyDescription& desc) {
  std::vector<std::pair<schottky::Rational, long>> items;
  for (const auto& [k, e] : desc.entries()) items.emplace_back(e.interval.left(), std::labs(k));
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<long> out;
  for (const auto& it : items) out.push_back(it.second);
  return out;
}

struct OracleSignature {
  int r, b, g;
};

inline OracleSignature ribbon_signature(const schottky::SchottkyDescription& desc) {
  const auto cyc = cyclic_pairs(desc);
  const int r = static_cast<int>(cyc.size() / 2);
  const int b = ribbon_faces(cyc);
  return {r, b, (1 + r - b) / 2};
}

}  // namespace oracle
