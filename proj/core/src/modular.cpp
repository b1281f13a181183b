#include "quivergrass/modular.hpp"

#include <stdexcept>

namespace quivergrass {

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid; p < 2^31 so signed 64-bit is ample.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw std::domain_error("inv_mod: zero has no inverse");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint32_t> odd_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  std::uint64_t p = 2;
  while (out.size() < count) {
    p = next_prime(p);
    out.push_back(static_cast<std::uint32_t>(p));
  }
  return out;
}

}  // namespace quivergrass
