#include <doctest.h>

#include <gmpxx.h>

#include "polytc/parity.hpp"

using namespace polytc;

namespace {

bool mpz_parity(unsigned long n, unsigned long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return mpz_odd_p(c.get_mpz_t()) != 0;
}

}  // namespace

TEST_CASE("Lucas parity matches exact binomials up to 64") {
  for (unsigned long n = 0; n <= 64; ++n) {
    for (unsigned long k = 0; k <= n; ++k) REQUIRE(lucas_binomial(n, k) == mpz_parity(n, k));
  }
}

TEST_CASE("binomial parity examples") {
  for (int e = 0; e <= 10; ++e) {
    const long long top = (1LL << e) - 1;
    for (long long i = 0; i <= top; ++i) CHECK(binomial_parity(top, i));
  }
  CHECK_FALSE(binomial_parity(4, 2));
  CHECK_FALSE(binomial_parity(3, 4));
  CHECK_FALSE(binomial_parity(-1, 0));
  CHECK(binomial_parity(7, 0));
}

TEST_CASE("small helpers") {
  for (long long x = -20; x <= 20; ++x) {
    CHECK(choose2_parity(x) == (((x * (x - 1) / 2) % 2) != 0));
    CHECK(odd(x) == (x % 2 != 0));
  }
  CHECK(is_power_of_two(1));
  CHECK(is_power_of_two(64));
  CHECK_FALSE(is_power_of_two(0));
  CHECK_FALSE(is_power_of_two(12));
}

TEST_CASE("quadratic parity characterization for A, B, C < 16") {
  for (long long a = 0; a < 16; ++a) {
    for (long long b = 0; b < 16; ++b) {
      for (long long c = 0; c < 16; ++c) {
        const long long direct = a * (a - 1) / 2 + a * b + a * c + b * c + b * (b - 1) / 2;
        REQUIRE(techlem(a, b, c) == (direct % 2 != 0));
        REQUIRE((direct % 2 == 0) == techlem_vanishes_by_congruence(a, b, c));
      }
    }
  }
}

TEST_CASE("odd binomials at alpha = 2m' - 3 for e <= 6") {
  for (int e = 1; e <= 6; ++e) {
    const int p = 1 << e;
    for (int mp = 2; mp <= p + 1; ++mp) {
      const int m = p + mp;
      const int alpha = 2 * mp - 3;
      for (int t = 0; t <= 4; ++t) {
        const bool in_lem1 = mp <= p - 1;
        const bool in_lem1p = t >= 2;
        if (!in_lem1 && !in_lem1p) continue;
        INFO("e=" << e << " m'=" << mp << " t=" << t);
        CHECK(mpz_parity(2 * m - 4 - alpha, m - t));
        CHECK(binomial_parity(2 * m - 4 - alpha, m - t));
      }
    }
  }
}
