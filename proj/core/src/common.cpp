#include "hh/common.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hh {

i64 binom(i64 n, i64 k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i64 r = 1;
  for (i64 t = 1; t <= k; ++t) {
    // Exact at every step: r * (n-k+t) is divisible by t.
    r = r * (n - k + t) / t;
  }
  return r;
}

i64 isqrt(i64 x) {
  if (x < 0) throw std::invalid_argument("isqrt: negative argument");
  if (x < 2) return x;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

u64 hash_combine(u64 h, u64 v) { return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2))); }

u64 SplitMix::below(u64 bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix::below: zero bound");
  const u64 limit = ~0ULL - ~0ULL % bound;
  u64 v = next();
  while (v >= limit) v = next();
  return v % bound;
}

Rational::Rational(i64 n, i64 d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace hh
