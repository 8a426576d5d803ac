#pragma once

#include <cstdint>

namespace schottky {

/// The index-th prime, counting from nth_prime(1) = 2. Backed by a sieve that
/// grows on demand; thread-safe.
std::int64_t nth_prime(int index);

}  // namespace schottky
