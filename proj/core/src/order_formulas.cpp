#include "basilica/errors.hpp"
#include "basilica/groups.hpp"

namespace basilica {

namespace {

void check_level(int n) {
  if (n < 1 || n > 61) throw input_error("order formulas require 1 <= n <= 61");
}

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

}  // namespace

std::int64_t log2_order_e(int n) {
  check_level(n);
  // (2^n + 2)/3 for even n, (2^n + 1)/3 for odd n; both are exact divisions.
  return (pow2(n) + (n % 2 == 0 ? 2 : 1)) / 3;
}

std::int64_t log2_order_b(int n) {
  check_level(n);
  if (n % 2 == 0) return (pow2(n + 1) - 2) / 3 + n / 2;
  return (pow2(n + 1) - 1) / 3 + (n - 1) / 2;
}

std::int64_t log2_order_m(int n) {
  check_level(n);
  if (n % 2 == 0) return (pow2(n + 1) - 2) / 3 + n - 1;
  return (pow2(n + 1) - 4) / 3 + n;
}

std::int64_t log2_order_b_counting(int n) {
  check_level(n);
  std::int64_t total = pow2(n) - 1;
  for (int m = 0; m < n; ++m) total -= pow2(n - 1 - m) * (m / 2);
  return total;
}

std::int64_t log2_order_aut(int n) {
  check_level(n);
  return pow2(n) - 1;
}

}  // namespace basilica
