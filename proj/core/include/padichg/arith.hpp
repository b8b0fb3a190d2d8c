#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace padichg {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 base, u64 e, u64 m);

/// Reduces a signed integer into [0, m).
u64 reduce_signed(i64 x, u64 m);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<u64> invmod(u64 a, u64 m);

bool is_prime(u64 n);

/// Distinct prime factors in increasing order.
std::vector<u64> prime_factors(u64 n);

/// base^e, or nullopt on 64-bit overflow.
std::optional<u64> checked_pow(u64 base, unsigned e);

u64 isqrt(u64 n);
u64 ceil_sqrt(u64 n);

i64 floor_div(i64 a, i64 b);

}  // namespace padichg
