#include "schottky/primes.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace schottky {

namespace {

std::vector<std::int64_t> sieve_up_to(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

}  // namespace

std::int64_t nth_prime(int index) {
  if (index < 1) throw std::invalid_argument("prime index starts at 1");
  static std::mutex mutex;
  static std::vector<std::int64_t> primes;
  static std::int64_t limit = 64;
  std::lock_guard lock(mutex);
  while (primes.size() < static_cast<std::size_t>(index)) {
    limit *= 2;
    primes = sieve_up_to(limit);
  }
  return primes[static_cast<std::size_t>(index - 1)];
}

}  // namespace schottky
