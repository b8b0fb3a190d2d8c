#include "padichg/arith.hpp"

#include <cmath>

namespace padichg {

u64 powmod(u64 base, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

u64 reduce_signed(i64 x, u64 m) {
  const i64 r = x % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

std::optional<u64> invmod(u64 a, u64 m) {
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    const __int128 tmp_r = old_r - quot * r;
    old_r = r;
    r = tmp_r;
    const __int128 tmp_s = old_s - quot * s;
    old_s = s;
    s = tmp_s;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<u64> checked_pow(u64 base, unsigned e) {
  u64 result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
  }
  return result;
}

u64 isqrt(u64 n) {
  u64 x = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

u64 ceil_sqrt(u64 n) {
  const u64 s = isqrt(n);
  return s * s == n ? s : s + 1;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace padichg
