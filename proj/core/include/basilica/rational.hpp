#ifndef BASILICA_RATIONAL_HPP_
#define BASILICA_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace basilica {

/// A rational p/q in lowest terms with q > 0.
struct rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  rational() = default;
  rational(std::int64_t n, std::int64_t d = 1);  // normalizes; d = 0 is an input error

  static rational parse(std::string_view text);  // "p" or "p/q"
  std::string to_string() const;

  bool operator==(const rational&) const = default;
};

rational operator+(rational a, rational b);
rational operator-(rational a);
rational operator*(rational a, rational b);

/// The square-free integer representative of a nonzero rational modulo
/// squares, via full 64-bit factorization (trial division, then
/// deterministic Miller-Rabin plus Brent's rho). Zero is a domain error;
/// results or intermediates beyond 64 bits raise resource_error.
std::int64_t square_class(const rational& q);

/// Product of two square classes, again square-free.
std::int64_t square_class_product(std::int64_t a, std::int64_t b);

/// Whether [Q(sqrt(-x0), sqrt(1+x0), zeta_8) : Q] = 16, decided by Kummer
/// theory: since Q(zeta_8) = Q(sqrt(-1), sqrt(2)), the degree is 16 exactly
/// when the classes {-x0, 1+x0, -1, 2} are independent in Q^x/(Q^x)^2, i.e.
/// no nonempty subset has a square product (all 15 subsets checked).
/// x0 in {0, -1} is a domain error.
bool degree_condition(const rational& x0);

/// The integers in [lo, hi] satisfying degree_condition, skipping 0 and -1.
std::vector<std::int64_t> scan_integers(std::int64_t lo, std::int64_t hi);

}  // namespace basilica

#endif  // BASILICA_RATIONAL_HPP_
