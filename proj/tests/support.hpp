#ifndef BASILICA_TESTS_SUPPORT_HPP_
#define BASILICA_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "basilica/dyadic.hpp"
#include "basilica/groups.hpp"
#include "basilica/node_address.hpp"
#include "basilica/tree_aut.hpp"

namespace basilica::test {

inline tree_aut random_portrait(int depth, std::mt19937_64& rng) {
  tree_aut::builder b(depth);
  for (int level = 0; level < depth; ++level)
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << level); ++i)
      b.set_par(level, i, (rng() & 1) != 0);
  return std::move(b).build();
}

// Independent string-rewriting oracle for the two standard generators,
// straight from their mutual recursion:
//   alpha(a w) = b w         alpha(b w) = a beta(w)
//   beta(a w)  = a w         beta(b w)  = b alpha(w)
inline std::string oracle_alpha(std::string_view w);

inline std::string oracle_beta(std::string_view w) {
  if (w.empty()) return {};
  std::string rest(w.substr(1));
  if (w[0] == 'a') return "a" + rest;
  return "b" + oracle_alpha(rest);
}

inline std::string oracle_alpha(std::string_view w) {
  if (w.empty()) return {};
  std::string rest(w.substr(1));
  if (w[0] == 'a') return "b" + rest;
  return "a" + oracle_beta(rest);
}

// Parity read off an arbitrary word action: Par(sigma, x) = 1 exactly when
// sigma(x a) differs from sigma(x) a.
template <typename Apply>
bool oracle_par(Apply&& apply, const std::string& x) {
  return apply(x + "a") != apply(x) + "a";
}

// Q via its own recursion Q(sigma, x) = Par(sigma, x) + 2 sum_s Q(sigma, x a s),
// independent of the direct stratum-sum implementation.
inline std::uint64_t oracle_q(const tree_aut& sigma, const node_address& x, int j) {
  if (j <= 0) return 0;
  std::int64_t total = sigma.par(x) ? 1 : 0;
  if (j > 1) {
    const node_address xa = x.child(symbol::a);
    total += 2 * static_cast<std::int64_t>(oracle_q(sigma, xa.child(symbol::a), j - 1));
    total += 2 * static_cast<std::int64_t>(oracle_q(sigma, xa.child(symbol::b), j - 1));
  }
  return static_cast<std::uint64_t>(total) & ((std::uint64_t{1} << j) - 1);
}

// A pseudo-random member of M_n: a word in the four standard generators and
// their inverses (M_n is closed under both).
inline tree_aut random_m_element(int depth, std::mt19937_64& rng, int length = 20) {
  const tree_aut gens[4] = {
      make_generator(generator_name::alpha, depth), make_generator(generator_name::beta, depth),
      make_generator(generator_name::epsilon, depth), make_generator(generator_name::theta, depth)};
  tree_aut acc = identity_aut(depth);
  for (int k = 0; k < length; ++k) {
    const tree_aut& g = gens[rng() % 4];
    acc = (rng() & 1) ? compose(acc, g) : compose(acc, inverse(g));
  }
  return acc;
}

// Extends a portrait upward with random parities on the new levels.
inline tree_aut random_extension(const tree_aut& sigma, int new_depth, std::mt19937_64& rng) {
  tree_aut::builder b(new_depth);
  for (int level = 0; level < new_depth; ++level)
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << level); ++i)
      b.set_par(level, i, level < sigma.depth() ? sigma.par(level, i) : (rng() & 1) != 0);
  return std::move(b).build();
}

}  // namespace basilica::test

#endif  // BASILICA_TESTS_SUPPORT_HPP_
