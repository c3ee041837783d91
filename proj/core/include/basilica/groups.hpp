#ifndef BASILICA_GROUPS_HPP_
#define BASILICA_GROUPS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "basilica/tree_aut.hpp"

namespace basilica {

enum class generator_name { alpha, beta, epsilon, theta, lambda };

generator_name parse_generator_name(std::string_view name);
std::string to_string(generator_name g);

/// The identity of Aut(T_n).
tree_aut identity_aut(int depth);

/// The standard automorphisms at depth n:
///  - alpha: parity 1 exactly at all-b labels of even length (the root included);
///           recursively alpha(aw) = bw, alpha(bw) = a beta(w).
///  - beta:  parity 1 exactly at all-b labels of odd length; beta = (e, alpha).
///  - epsilon: parity 1 everywhere; P(epsilon) = -1.
///  - theta: trivial on T_2, then Par(theta, xaa) = Par(theta, xab) = 0,
///           Par(theta, xba) = 1, Par(theta, xbb) = Par(theta, x); P(theta) = 3.
///  - lambda: for odd n >= 3 with j = (n+1)/2, the pair (e, beta^(2^(j-2)))
///            with beta taken at depth n-1; P(lambda, root) = 1 + 2^(j-1).
tree_aut make_generator(generator_name g, int depth);

/// Membership in the arithmetic basilica group M_n: P(sigma, x) is congruent
/// to P(sigma, root) mod 2^floor((n-m+1)/2) at every node x at every level m.
/// Levels are scanned bottom-up with early exit.
bool in_m(const tree_aut& sigma);

/// Membership in B_n = ker(P : M_n -> (Z/2^j)^x), j = floor((n+1)/2):
/// sigma in M_n and P(sigma, root) = 1 mod 2^j.
bool in_b(const tree_aut& sigma);

/// Membership in E_n = U_{n-1} intersect B_n.
bool in_e(const tree_aut& sigma);

/// Membership in the Frattini subgroup of M_n (depth >= 5): sigma in M_n,
/// fixes both level-1 nodes, is even on the four level-2 nodes, and
/// P(sigma, root) = 1 mod 8. Depth < 5 lacks P mod 8 and raises precision_error.
bool in_frattini(const tree_aut& sigma);

/// Exact log2 orders of the subgroup chain:
///   log2 |E_n| = 2^n/3 + (2/3 if n even else 1/3)
///   log2 |B_n| = 2^(n+1)/3 + n/2 - (2/3 if n even else 5/6)
///   log2 |M_n| = 2^(n+1)/3 + n - (5/3 if n even else 4/3)
/// all evaluated in exact integer arithmetic. Requires 1 <= n <= 61.
std::int64_t log2_order_e(int n);
std::int64_t log2_order_b(int n);
std::int64_t log2_order_m(int n);

/// log2 |B_n| via the counting formula
/// 2^n - 1 - sum_{m=0}^{n-1} 2^(n-1-m) floor(m/2); equals log2_order_b(n).
std::int64_t log2_order_b_counting(int n);

/// log2 |Aut(T_n)| = 2^n - 1.
std::int64_t log2_order_aut(int n);

}  // namespace basilica

#endif  // BASILICA_GROUPS_HPP_
