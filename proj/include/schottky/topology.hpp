#pragma once

#include <map>
#include <set>
#include <vector>

#include "schottky/description.hpp"

namespace schottky {

enum class Side { Left, Right };

/// One boundary interval A_k placed in the cyclic order of R ∪ {∞}.
struct Slot {
  Index index;
  IntervalOnR interval;
  /// Position of the slot holding A_{-k}.
  std::size_t partner;
  /// Where f_k sends the left and right endpoints of A_k: which endpoint of
  /// the partner interval each lands on.
  Side left_lands_on;
  Side right_lands_on;
};

/// The intervals of a description sorted along R, with the arc through ∞
/// closing the line into a circle. Free arc i runs from the right endpoint
/// of slot i to the left endpoint of slot i+1; the last one passes ∞.
struct PairingPattern {
  std::vector<Slot> slots;
};

/// Throws std::logic_error when a generator sends an endpoint of its
/// interval somewhere other than an endpoint of the paired interval.
PairingPattern pattern_of(const SchottkyDescription& desc);

/// Each cycle lists free-arc positions in tracing order.
std::vector<std::vector<std::size_t>> trace_boundary(const PairingPattern& p);

/// Number of boundary components (funnels) of the quotient.
int boundary_cycles(const PairingPattern& p);

struct SurfaceSignature {
  int rank = 0;
  int boundary_components = 1;
  int genus = 0;
  int euler_characteristic = 1;

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

/// r = slots/2, b = boundary_cycles, g = (1 + r - b)/2, χ = 1 - r. Throws
/// std::logic_error if g is not a non-negative integer.
SurfaceSignature signature(const PairingPattern& p);

/// Real-axis footprint of K_l: the compact box used to exhaust H.
struct CompactBox {
  int level;
  Rational x_min, x_max, y_min, y_max;
};

/// Requires s ≥ 1 and l ≥ 1.
CompactBox compact_box(int s, int l);

struct EndsProfile {
  int level = 0;
  /// Signature of the part of the description surviving outside K_l: all
  /// f_t together with the G/H blocks with n > l.
  SurfaceSignature signature_at_level;
  /// Region t ∈ {1..s} ↦ genus carried by the blocks of that region.
  std::map<int, int> per_region_genus;
  /// Region t ↦ number of boundary cycles whose free arcs lie in it.
  std::map<int, int> per_region_boundary;
  std::set<int> genus_carrying_regions() const;
};

/// Level 0 means no exhaustion filter (every block counts). Requires a
/// description made by build_gamma_ms or build_gamma_s.
EndsProfile ends_profile(const SchottkyDescription& desc, int level);

/// Signature of the block {G(k,2n-1), H(k,2n-1), G(k,2n), H(k,2n)} and
/// inverses. Throws std::invalid_argument when the block is not present.
SurfaceSignature block_signature(const SchottkyDescription& desc, int k, int n_pair);

/// Region t ∈ {1..s} of a free arc: s for the arc through ∞, otherwise the
/// band 5(t-1) < |x| < 5t containing the midpoint (clamped to 1..s).
int region_of_arc(const PairingPattern& p, std::size_t arc, int s);

}  // namespace schottky
