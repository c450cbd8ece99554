#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hh {

using i64 = long long;
using u64 = unsigned long long;
using u32 = std::uint32_t;

// Conditions imposed by an m-fold point: m(m+1)/2.  Valid for any integer m,
// which matters for the raw Cremona bookkeeping where multiplicities can go
// negative.
constexpr i64 tri(i64 m) noexcept { return m * (m + 1) / 2; }

// n(n-1)/2
constexpr i64 choose2(i64 n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

// Exact binomial for small arguments; 0 when k < 0 or k > n.
i64 binom(i64 n, i64 k);

// ceil(a/b) for b > 0, exact for negative a.
constexpr i64 div_ceil(i64 a, i64 b) { return a / b + (a % b > 0 ? 1 : 0); }

// floor(sqrt(x)) for x >= 0.
i64 isqrt(i64 x);

u64 splitmix64(u64 x);
u64 hash_combine(u64 h, u64 v);

// Small deterministic RNG used by tests and the oracle point sampler.
// Stream state is fully determined by the seeding value, so results are
// reproducible across platforms and schedulers.
class SplitMix {
 public:
  explicit SplitMix(u64 seed) : state_(seed) {}
  u64 next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64(state_);
  }
  // Uniform in [0, bound) by rejection.
  u64 below(u64 bound);

 private:
  u64 state_;
};

// Exact rational with normalized sign and gcd-reduced terms.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n, i64 d);
  explicit Rational(i64 n) : num(n), den(1) {}

  bool operator==(const Rational&) const = default;
  bool is_integer() const { return den == 1; }
  std::string to_string() const;
};

}  // namespace hh
