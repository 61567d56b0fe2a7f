#pragma once

#include <cstdint>

namespace polytc {

/// C(n, k) mod 2 by Lucas's theorem: odd iff every binary digit of k is at
/// most the matching digit of n.
constexpr bool lucas_binomial(std::uint64_t n, std::uint64_t k) { return (k & ~n) == 0; }

/// C(n, k) mod 2 for signed arguments; zero when k < 0, n < 0 or k > n.
constexpr bool binomial_parity(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return false;
  return lucas_binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

/// x(x-1)/2 mod 2 as a polynomial in x, valid for negative x too.
constexpr bool choose2_parity(long long x) {
  long long r = ((x % 4) + 4) % 4;
  return r == 2 || r == 3;
}

constexpr bool odd(long long x) { return (x % 2 + 2) % 2 == 1; }

constexpr bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

/// C(A,2) + AB + AC + BC + C(B,2) mod 2.
bool techlem(long long a, long long b, long long c);
/// The congruence characterisation of techlem being zero:
/// A+B ≡ 0 (mod 4) or A+B+2C ≡ 1 (mod 4).
bool techlem_vanishes_by_congruence(long long a, long long b, long long c);

}  // namespace polytc
