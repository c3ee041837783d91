#include "basilica/rational.hpp"

#include <charconv>
#include <numeric>

#include "basilica/errors.hpp"

namespace basilica {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw resource_error(std::string(what) + " exceeds the 64-bit range");
  return static_cast<std::int64_t>(v);
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle variant of Pollard rho; bounded so a pathological input
// reports a resource error instead of spinning.
u64 rho_factor(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1; c < 64; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 iterations = 0;
    const u64 limit = u64{1} << 26;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = gcd_u64(x > y ? x - y : y - x, n);
      if (++iterations > limit) break;
    }
    if (d != 1 && d != n) return d;
  }
  throw resource_error("factorization did not converge within the iteration budget");
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n <= 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = rho_factor(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

// Square-free part of |n| with the sign of n.
std::int64_t squarefree_part(std::int64_t n) {
  if (n == 0) throw domain_error("zero has no square class");
  const bool negative = n < 0;
  u64 m = negative ? (n == INT64_MIN ? (u64{1} << 63) : static_cast<u64>(-n))
                   : static_cast<u64>(n);

  std::vector<u64> primes;
  for (u64 p = 2; p * p <= m && p < 100000; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  factor_into(m, primes);

  u128 sf = 1;
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    if ((j - i) % 2 == 1) sf *= primes[i];
    if (sf > u128(INT64_MAX)) throw resource_error("square-free part exceeds the 64-bit range");
    i = j;
  }
  const std::int64_t magnitude = static_cast<std::int64_t>(sf);
  return negative ? -magnitude : magnitude;
}

}  // namespace

rational::rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw input_error("rational with zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) throw resource_error("rational out of range");
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

rational rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw input_error("malformed rational: " + std::string(s));
    return v;
  };
  if (slash == std::string_view::npos) return rational(parse_int(text));
  return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

rational operator+(rational a, rational b) {
  const __int128 n = __int128(a.num) * b.den + __int128(b.num) * a.den;
  const __int128 d = __int128(a.den) * b.den;
  return rational(checked_narrow(n, "rational numerator"), checked_narrow(d, "rational denominator"));
}

rational operator-(rational a) { return rational(-a.num, a.den); }

rational operator*(rational a, rational b) {
  const __int128 n = __int128(a.num) * b.num;
  const __int128 d = __int128(a.den) * b.den;
  return rational(checked_narrow(n, "rational numerator"), checked_narrow(d, "rational denominator"));
}

std::int64_t square_class(const rational& q) {
  if (q.num == 0) throw domain_error("zero has no square class");
  // class(p/q) = class(p q); p and q are coprime, so no cross-cancellation.
  return square_class_product(squarefree_part(q.num), squarefree_part(q.den));
}

std::int64_t square_class_product(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) throw domain_error("zero has no square class");
  const std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  const __int128 prod = (__int128(a) / g) * (__int128(b) / g);
  return checked_narrow(prod, "square class");
}

bool degree_condition(const rational& x0) {
  if (x0 == rational(0) || x0 == rational(-1))
    throw domain_error("the root point must avoid 0 and -1");
  const std::int64_t classes[4] = {
      square_class(-x0),
      square_class(x0 + rational(1)),
      -1,
      2,
  };
  // Independence in Q^x/(Q^x)^2: no nonempty subset multiplies to a square.
  for (unsigned subset = 1; subset < 16; ++subset) {
    std::int64_t prod = 1;
    for (int k = 0; k < 4; ++k)
      if (subset >> k & 1u) prod = square_class_product(prod, classes[k]);
    if (prod == 1) return false;
  }
  return true;
}

std::vector<std::int64_t> scan_integers(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (x == 0 || x == -1) continue;
    if (degree_condition(rational(x))) out.push_back(x);
  }
  return out;
}

}  // namespace basilica
