#include <doctest.h>

#include <random>

#include "basilica/detail/packed.hpp"
#include "basilica/enumerate.hpp"
#include "basilica/errors.hpp"
#include "basilica/groups.hpp"
#include "support.hpp"

using namespace basilica;
using test::random_portrait;

TEST_CASE("selector parsing") {
  CHECK(group_selector::parse("M").kind == selector_kind::m);
  CHECK(group_selector::parse("U:3").u_level == 3);
  CHECK(group_selector::parse("frattini").kind == selector_kind::frattini);
  CHECK(group_selector::parse("full").to_string() == "full");
  CHECK_THROWS_AS(group_selector::parse("Q"), input_error);
  CHECK_THROWS_AS(group_selector::parse("U:x"), input_error);
}

TEST_CASE("packed predicates agree with the generic ones, exhaustively to depth 4") {
  for (int depth = 1; depth <= 4; ++depth) {
    const detail::packed_predicates pred(depth);
    for (std::uint64_t w = 0; w < detail::portrait_count(depth); ++w) {
      const tree_aut s = tree_aut::from_index(depth, w);
      REQUIRE(pred.in_m(w) == in_m(s));
      REQUIRE(pred.in_b(w) == in_b(s));
      REQUIRE(pred.in_e(w) == in_e(s));
      REQUIRE(pred.p_root(w) ==
              p_value(s, node_address(), pred.root_precision()).value);
    }
  }
}

TEST_CASE("packed predicates agree with the generic ones on random depth-5 portraits") {
  const detail::packed_predicates pred(5);
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::uint64_t w = rng() & ((std::uint64_t{1} << 31) - 1);
    const tree_aut s = tree_aut::from_index(5, w);
    REQUIRE(pred.in_m(w) == in_m(s));
    if (pred.in_m(w)) {
      REQUIRE(pred.in_b(w) == in_b(s));
      REQUIRE(pred.in_frattini(w) == in_frattini(s));
      REQUIRE(pred.p_root(w) == p_value(s, node_address()).value);
    }
    REQUIRE(pred.in_e(w) == in_e(s));
    REQUIRE(pred.in_u(w, 2) == s.acts_trivially(2));
  }
  // And on members, which uniform sampling almost never hits.
  for (int trial = 0; trial < 2000; ++trial) {
    const tree_aut s = test::random_m_element(5, rng);
    const std::uint64_t w = s.pack_index();
    REQUIRE(pred.in_m(w));
    REQUIRE(pred.in_b(w) == in_b(s));
    REQUIRE(pred.in_frattini(w) == in_frattini(s));
    REQUIRE(pred.p_root(w) == p_value(s, node_address()).value);
    REQUIRE(pred.parity_pattern_holds(w));
  }
}

TEST_CASE("packed composition and inversion agree with the generic ones") {
  std::mt19937_64 rng(71);
  for (int depth = 1; depth <= 6; ++depth) {
    for (int trial = 0; trial < 200; ++trial) {
      const tree_aut s = random_portrait(depth, rng);
      const tree_aut t = random_portrait(depth, rng);
      CHECK(detail::packed_compose(depth, s.pack_index(), t.pack_index()) ==
            compose(s, t).pack_index());
      CHECK(detail::packed_inverse(depth, s.pack_index()) == inverse(s).pack_index());
      const detail::packed_multiplier right_by_t(t);
      CHECK(right_by_t(s.pack_index()) == compose(s, t).pack_index());
    }
  }
}

TEST_CASE("sweep counts match the order formulas at depths 1..4") {
  for (int depth = 1; depth <= 4; ++depth) {
    CHECK(sweep(depth, {selector_kind::m}).count ==
          std::uint64_t{1} << log2_order_m(depth));
    CHECK(sweep(depth, {selector_kind::b}).count ==
          std::uint64_t{1} << log2_order_b(depth));
    CHECK(sweep(depth, {selector_kind::e}).count ==
          std::uint64_t{1} << log2_order_e(depth));
    CHECK(sweep(depth, {selector_kind::full_aut}).count ==
          std::uint64_t{1} << log2_order_aut(depth));
  }
  CHECK(sweep(4, {selector_kind::u, 2}).count == std::uint64_t{1} << (15 - 3));
  CHECK(sweep(4, {selector_kind::u, 4}).count == 1);
}

TEST_CASE("sweep is independent of the thread partition") {
  for (int threads : {1, 2, 3, 7}) {
    CHECK(sweep(4, {selector_kind::m}, threads).count == std::uint64_t{1} << 13);
    CHECK(sweep(3, {selector_kind::b}, threads).count == std::uint64_t{1} << 6);
  }
}

TEST_CASE("sweep depth and selector validation") {
  CHECK_THROWS_AS(sweep(6, {selector_kind::m}), resource_error);
  CHECK_THROWS_AS(sweep(0, {selector_kind::m}), input_error);
  CHECK_THROWS_AS(sweep(4, {selector_kind::frattini}), precision_error);
  CHECK_THROWS_AS(sweep(3, {selector_kind::u, 4}), input_error);
}

TEST_CASE("closure of the standard generators matches the predicates, depths 1..4") {
  for (int depth = 1; depth <= 4; ++depth) {
    const std::vector<tree_aut> ab = {make_generator(generator_name::alpha, depth),
                                      make_generator(generator_name::beta, depth)};
    const closure_result b_closure = closure(ab);
    CHECK(b_closure.summary.count == std::uint64_t{1} << log2_order_b(depth));

    std::vector<tree_aut> abet = ab;
    abet.push_back(make_generator(generator_name::epsilon, depth));
    abet.push_back(make_generator(generator_name::theta, depth));
    const closure_result m_closure = closure(abet);
    CHECK(m_closure.summary.count == std::uint64_t{1} << log2_order_m(depth));

    // Set equality, not just cardinality.
    for (std::uint64_t w = 0; w < detail::portrait_count(depth); ++w) {
      const tree_aut s = tree_aut::from_index(depth, w);
      REQUIRE(b_closure.members.contains(w) == in_b(s));
      REQUIRE(m_closure.members.contains(w) == in_m(s));
    }
  }
}

TEST_CASE("closure of the identity alone") {
  const closure_result r = closure({identity_aut(3)});
  CHECK(r.summary.count == 1);
  CHECK(r.elements == std::vector<std::uint32_t>{0});
}

TEST_CASE("closure element order is deterministic with one thread") {
  const std::vector<tree_aut> gens = {make_generator(generator_name::alpha, 4),
                                      make_generator(generator_name::beta, 4)};
  closure_options opt;
  opt.threads = 1;
  const closure_result a = closure(gens, opt);
  const closure_result b = closure(gens, opt);
  CHECK(a.elements == b.elements);
  CHECK(a.summary.count == b.summary.count);
}

TEST_CASE("closure count is independent of threads") {
  const std::vector<tree_aut> gens = {make_generator(generator_name::alpha, 4),
                                      make_generator(generator_name::beta, 4),
                                      make_generator(generator_name::epsilon, 4)};
  closure_options one;
  one.threads = 1;
  closure_options many;
  many.threads = 4;
  const closure_result a = closure(gens, one);
  const closure_result b = closure(gens, many);
  CHECK(a.summary.count == b.summary.count);
  for (std::uint64_t w = 0; w < detail::portrait_count(4); ++w)
    REQUIRE(a.members.contains(w) == b.members.contains(w));
}

TEST_CASE("closure budget raises a resource error with the partial count") {
  const std::vector<tree_aut> gens = {make_generator(generator_name::alpha, 4),
                                      make_generator(generator_name::beta, 4)};
  closure_options opt;
  opt.budget = 100;
  try {
    closure(gens, opt);
    FAIL("expected resource_error");
  } catch (const resource_error& e) {
    CHECK(e.partial_count > 100);
    CHECK(e.partial_count < (std::uint64_t{1} << 12));
  }
}

TEST_CASE("M, B and E are closed under composition and inversion, exhaustively to depth 4") {
  for (int depth = 1; depth <= 4; ++depth) {
    const detail::packed_predicates pred(depth);
    for (int which = 0; which < 3; ++which) {
      auto member = [&](std::uint64_t w) {
        return which == 0 ? pred.in_m(w) : which == 1 ? pred.in_b(w) : pred.in_e(w);
      };
      std::vector<std::uint32_t> members;
      for (std::uint64_t w = 0; w < detail::portrait_count(depth); ++w)
        if (member(w)) members.push_back(static_cast<std::uint32_t>(w));

      std::uint64_t violations = 0;
      for (std::uint32_t u : members)
        if (!member(detail::packed_inverse(depth, u))) ++violations;
      for (std::uint32_t u : members)
        for (std::uint32_t v : members)
          if (!member(detail::packed_compose(depth, u, v))) ++violations;
      CHECK(violations == 0);
    }
  }
}

TEST_CASE("closure input validation") {
  CHECK_THROWS_AS(closure({}), input_error);
  CHECK_THROWS_AS(closure({identity_aut(2), identity_aut(3)}), input_error);
  CHECK_THROWS_AS(closure({identity_aut(6)}), resource_error);
}
