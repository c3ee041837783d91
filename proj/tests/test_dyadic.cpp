#include <doctest.h>

#include <random>

#include "basilica/dyadic.hpp"
#include "basilica/errors.hpp"
#include "basilica/groups.hpp"
#include "support.hpp"

using namespace basilica;
using test::random_portrait;

namespace {

node_address addr(const char* s) { return node_address::parse(s); }

}  // namespace

TEST_CASE("precision bound") {
  CHECK(dyadic_precision(5, 0) == 3);
  CHECK(dyadic_precision(5, 1) == 2);
  CHECK(dyadic_precision(5, 3) == 1);
  CHECK(dyadic_precision(5, 4) == 1);
  CHECK(dyadic_precision(24, 0) == 12);
}

TEST_CASE("q of the identity vanishes") {
  const tree_aut e(7);
  for (int m = 0; m <= 2; ++m)
    for (std::uint32_t i = 0; i < (1u << m); ++i)
      CHECK(q_value(e, node_address(m, i), dyadic_precision(7, m)).value == 0);
}

TEST_CASE("q of the all-parity involution is 1 + 4 + ... mod 2^j") {
  const tree_aut eps = make_generator(generator_name::epsilon, 5);
  CHECK(q_value(eps, node_address(), 3) == dyadic_residue{5, 3});
  CHECK(q_value(eps, node_address(), 2) == dyadic_residue{1, 2});
  const tree_aut eps7 = make_generator(generator_name::epsilon, 7);
  CHECK(q_value(eps7, addr("ab"), 3).value == 5);
  CHECK(q_value(eps7, node_address(), 4).value == 5);  // 1 + 4 = 5 mod 16
}

TEST_CASE("q of theta reduces to its parity") {
  const tree_aut theta = make_generator(generator_name::theta, 9);
  for (int m = 0; m <= 4; ++m) {
    const int j = dyadic_precision(9, m);
    for (std::uint32_t i = 0; i < (1u << m); ++i) {
      const node_address x(m, i);
      CHECK(q_value(theta, x, j).value == (theta.par(x) ? 1u : 0u));
    }
  }
}

TEST_CASE("q satisfies its own recursion") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int depth = 1 + static_cast<int>(rng() % 9);
    const tree_aut sigma = random_portrait(depth, rng);
    for (int m = 0; m < depth; ++m) {
      const int j = dyadic_precision(depth, m);
      for (std::uint32_t i = 0; i < (1u << m); ++i) {
        const node_address x(m, i);
        for (int jj = 1; jj <= j; ++jj)
          CHECK(q_value(sigma, x, jj).value == test::oracle_q(sigma, x, jj));
      }
    }
  }
}

TEST_CASE("p at the root of the named automorphisms") {
  CHECK(p_value(identity_aut(6), node_address()) == dyadic_residue{1, 3});
  CHECK(p_value(make_generator(generator_name::epsilon, 5), node_address()) ==
        dyadic_residue{7, 3});
  CHECK(p_value(make_generator(generator_name::theta, 5), node_address()) ==
        dyadic_residue{3, 3});
  CHECK(p_value(make_generator(generator_name::lambda, 5), node_address()) ==
        dyadic_residue{5, 3});
  CHECK(p_value(make_generator(generator_name::alpha, 9), node_address()).value == 1);
  CHECK(p_value(make_generator(generator_name::beta, 9), node_address()).value == 1);
}

TEST_CASE("p of epsilon and theta is constant across nodes") {
  const tree_aut eps = make_generator(generator_name::epsilon, 9);
  const tree_aut theta = make_generator(generator_name::theta, 9);
  for (int m = 0; m < 9; ++m) {
    const int j = dyadic_precision(9, m);
    const std::uint64_t mask = (std::uint64_t{1} << j) - 1;
    for (std::uint32_t i = 0; i < (1u << m); ++i) {
      const node_address x(m, i);
      CHECK(p_value(eps, x).value == mask);  // -1 mod 2^j
      CHECK(p_value(theta, x).value == (3 & mask));
    }
  }
}

TEST_CASE("p is independent of the extension") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const tree_aut sigma = random_portrait(n, rng);
    const tree_aut wide = test::random_extension(sigma, n + 2, rng);
    for (int m = 0; m < n; ++m) {
      const int j = dyadic_precision(n, m);
      for (std::uint32_t i = 0; i < (1u << m); ++i) {
        const node_address x(m, i);
        CHECK(p_value(sigma, x) == p_value(wide, x).truncate(j));
        CHECK(q_value(sigma, x, j) == q_value(wide, x, j));
      }
    }
  }
}

TEST_CASE("the q precision bound is sharp") {
  // Two extensions that agree through depth 6 but differ at one node of the
  // i = 3 stratum give different Q mod 2^4 while agreeing mod 2^3.
  const int n = 6;
  const tree_aut sigma(n);
  std::mt19937_64 rng(47);
  const tree_aut flat = test::random_extension(sigma, n + 2, rng);
  tree_aut::builder bumped_b(n + 2);
  for (int level = 0; level < n + 2; ++level)
    for (std::uint32_t i = 0; i < (1u << level); ++i)
      bumped_b.set_par(level, i, flat.par(level, i));
  bumped_b.set_par(6, 0, !flat.par(6, 0));  // node aaaaaa, in the i=3 stratum
  const tree_aut bumped = std::move(bumped_b).build();

  const node_address root;
  CHECK(q_value(flat, root, 3) == q_value(bumped, root, 3));
  CHECK(q_value(flat, root, 4).value != q_value(bumped, root, 4).value);
}

TEST_CASE("precision errors are raised, never silent truncation") {
  const tree_aut s(5);
  CHECK_THROWS_AS(q_value(s, node_address(), 4), precision_error);
  CHECK_THROWS_AS(q_value(s, addr("ab"), 3), precision_error);
  CHECK_THROWS_AS(q_value(s, node_address(), 0), input_error);
  CHECK_THROWS_AS(p_value(s, addr("bbbbb")), input_error);
  CHECK_THROWS_AS(p_value(s, node_address(), 9), precision_error);
  CHECK(p_value(s, addr("bbbb")).precision == 1);  // top level: j = 1
}

TEST_CASE("q cocycle at finite precision") {
  // Q(sigma, tau(x)) + P(sigma) Q(tau, x) = Q(sigma tau, x) for sigma in M_n.
  std::mt19937_64 rng(53);
  for (int depth = 4; depth <= 8; ++depth) {
    for (int trial = 0; trial < 40; ++trial) {
      const tree_aut sigma = test::random_m_element(depth, rng);
      const tree_aut tau = random_portrait(depth, rng);
      const tree_aut prod = compose(sigma, tau);
      const std::uint64_t p_sigma = p_value(sigma, node_address()).value;
      for (int m = 0; m < depth; ++m) {
        const int j = dyadic_precision(depth, m);
        const std::uint64_t mod_mask = (std::uint64_t{1} << j) - 1;
        for (std::uint32_t i = 0; i < (1u << m); ++i) {
          const node_address x(m, i);
          const std::uint64_t lhs =
              (q_value(sigma, tau.apply(x), j).value + p_sigma * q_value(tau, x, j).value) &
              mod_mask;
          CHECK(lhs == q_value(prod, x, j).value);
        }
      }
    }
  }
}

TEST_CASE("p is multiplicative at finite precision") {
  // P(sigma) P(tau, x) = P(sigma tau, x) for sigma in M_n, any tau.
  std::mt19937_64 rng(59);
  for (int depth = 4; depth <= 8; ++depth) {
    for (int trial = 0; trial < 40; ++trial) {
      const tree_aut sigma = test::random_m_element(depth, rng);
      const tree_aut tau = random_portrait(depth, rng);
      const tree_aut prod = compose(sigma, tau);
      const std::uint64_t p_sigma = p_value(sigma, node_address()).value;
      for (int m = 0; m < depth; ++m) {
        const int j = dyadic_precision(depth, m);
        const std::uint64_t mod_mask = (std::uint64_t{1} << j) - 1;
        for (std::uint32_t i = 0; i < (1u << m); ++i) {
          const node_address x(m, i);
          const std::uint64_t lhs = (p_sigma * p_value(tau, x).value) & mod_mask;
          CHECK(lhs == p_value(prod, x).value);
        }
      }
    }
  }
}

TEST_CASE("residue rendering") {
  CHECK(dyadic_residue{5, 3}.to_string() == "5 mod 2^3");
  CHECK(make_residue(-1, 3) == dyadic_residue{7, 3});
  CHECK(make_residue(-3, 3) == dyadic_residue{5, 3});
  CHECK(dyadic_residue{7, 3}.truncate(2) == dyadic_residue{3, 2});
}
