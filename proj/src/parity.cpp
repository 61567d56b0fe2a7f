#include "polytc/parity.hpp"

namespace polytc {

namespace {
constexpr long long mod4(long long x) { return ((x % 4) + 4) % 4; }
}  // namespace

bool techlem(long long a, long long b, long long c) {
  return choose2_parity(a) ^ odd(a * b) ^ odd(a * c) ^ odd(b * c) ^ choose2_parity(b);
}

bool techlem_vanishes_by_congruence(long long a, long long b, long long c) {
  return mod4(a + b) == 0 || mod4(a + b + 2 * c) == 1;
}

}  // namespace polytc
