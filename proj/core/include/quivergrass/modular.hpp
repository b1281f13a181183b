#pragma once

#include <cstdint>
#include <vector>

namespace quivergrass {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Inverse of a nonzero residue modulo the prime p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// The first `count` odd primes, starting at 3.
std::vector<std::uint32_t> odd_primes(std::size_t count);

}  // namespace quivergrass
