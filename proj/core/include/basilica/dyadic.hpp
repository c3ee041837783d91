#ifndef BASILICA_DYADIC_HPP_
#define BASILICA_DYADIC_HPP_

#include <cstdint>
#include <string>

#include "basilica/node_address.hpp"
#include "basilica/tree_aut.hpp"

namespace basilica {

/// An integer residue together with its 2-adic precision: a value in
/// [0, 2^precision) standing for a class modulo 2^precision.
struct dyadic_residue {
  std::uint64_t value = 0;
  int precision = 1;  // j >= 1; the modulus is 2^j

  std::uint64_t modulus() const { return std::uint64_t{1} << precision; }

  /// The same class at fewer bits. Requires 1 <= j <= precision.
  dyadic_residue truncate(int j) const;

  std::string to_string() const;  // "v mod 2^j"

  bool operator==(const dyadic_residue&) const = default;
};

/// Reduces a signed value into [0, 2^j).
dyadic_residue make_residue(std::int64_t value, int precision);

/// Largest precision at which Q(sigma, x) and P(sigma, x) are determined by a
/// depth-n portrait at a level-m node: floor((n - m + 1) / 2).
int dyadic_precision(int depth, int level);

/// Q(sigma, x) mod 2^j: the weighted parity sum over nodes x (a s1)(a s2)...,
/// with the level-(m + 2i) stratum weighted 2^i. Requires
/// j <= dyadic_precision(depth, level(x)); throws precision_error otherwise.
dyadic_residue q_value(const tree_aut& sigma, const node_address& x, int j);

/// P(sigma, x) at its full available precision j = dyadic_precision(n, m):
///   P = (-1)^Par(sigma, x) + 2 [Q(sigma, xba) + Q(sigma, xbb)]
///                          - 2 [Q(sigma, xaa) + Q(sigma, xab)].
/// The result is odd. Requires level(x) <= depth - 1.
dyadic_residue p_value(const tree_aut& sigma, const node_address& x);

/// P(sigma, x) truncated to j bits, 1 <= j <= dyadic_precision(n, m).
dyadic_residue p_value(const tree_aut& sigma, const node_address& x, int j);

}  // namespace basilica

#endif  // BASILICA_DYADIC_HPP_
