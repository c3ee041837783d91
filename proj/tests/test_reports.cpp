#include <doctest.h>

#include "basilica/dyadic.hpp"
#include "basilica/errors.hpp"
#include "basilica/groups.hpp"
#include "basilica/reports.hpp"

using namespace basilica;

TEST_CASE("exact sequence at depth 2 degenerates to M = B") {
  const exact_sequence_report rep = verify_exact_sequence(2);
  CHECK(rep.degenerate);
  CHECK(rep.j == 1);
  CHECK(rep.m_count == 8);
  CHECK(rep.kernel_count == 8);
  CHECK(rep.expected_kernel == 8);
  CHECK(rep.pass);
}

TEST_CASE("exact sequence at depths 3 and 4") {
  for (int depth : {3, 4}) {
    const exact_sequence_report rep = verify_exact_sequence(depth);
    CHECK(rep.j == 2);
    CHECK(rep.fibers.size() == 2);
    CHECK(rep.image_full);
    CHECK(rep.fibers_equal);
    CHECK(rep.kernel_count == std::uint64_t{1} << log2_order_b(depth));
    CHECK(rep.p_epsilon == 3);
    CHECK(rep.p_theta == 3);
    CHECK(rep.homomorphism_ok);
    CHECK(rep.pass);
  }
}

TEST_CASE("exact sequence sampled mode at depth 7") {
  const exact_sequence_report rep = verify_exact_sequence(7, 0, 50, 5);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.j == 4);
  CHECK(rep.p_epsilon == 15);
  CHECK(rep.p_theta == 3);
  CHECK(rep.image_full);
  CHECK(rep.homomorphism_ok);
  CHECK(rep.pass);
}

TEST_CASE("P of epsilon theta is -3") {
  const tree_aut eps = make_generator(generator_name::epsilon, 5);
  const tree_aut theta = make_generator(generator_name::theta, 5);
  CHECK(p_value(compose(eps, theta), node_address()).value == 5);  // -3 mod 8
}

TEST_CASE("E_n index in E_{n-1} x E_{n-1}") {
  const std::uint64_t expected_index[] = {1, 2, 1, 2};  // n = 2, 3, 4, 5
  const std::uint64_t expected_e[] = {4, 8, 64, 2048};
  for (int n = 2; n <= 5; ++n) {
    const induct_e_report rep = verify_induct_e(n);
    CHECK(rep.index == expected_index[n - 2]);
    CHECK(rep.e_count == expected_e[n - 2]);
    CHECK(rep.e_in_product == rep.e_count);
    CHECK(rep.e_subset_of_product);
    if (n % 2 == 1) {
      CHECK(rep.lambda_in_product);
      CHECK_FALSE(rep.lambda_in_e);
      CHECK(rep.lambda_coset_covers_complement);
      CHECK(rep.p_lambda == 1 + (std::uint64_t{1} << ((n + 1) / 2 - 1)));
    }
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(verify_induct_e(1), input_error);
  CHECK_THROWS_AS(verify_induct_e(6), resource_error);
}

TEST_CASE("parity pattern of specific members") {
  const parity_pattern_report id_rep = verify_parity_pattern(identity_aut(5));
  CHECK(id_rep.pass);
  CHECK(id_rep.p_mod4 == 1);
  for (int sign : id_rep.level_signs) CHECK(sign == +1);

  const parity_pattern_report a_rep =
      verify_parity_pattern(make_generator(generator_name::alpha, 5));
  CHECK(a_rep.pass);
  CHECK(a_rep.level_signs == std::vector<int>{-1, +1, -1, +1, -1});
  CHECK(a_rep.p_mod4 == 1);

  const parity_pattern_report e_rep =
      verify_parity_pattern(make_generator(generator_name::epsilon, 5));
  CHECK(e_rep.pass);
  CHECK(e_rep.level_signs == std::vector<int>{-1, +1, +1, +1, +1});
  CHECK(e_rep.p_mod4 == 3);

  CHECK_THROWS_AS(verify_parity_pattern(identity_aut(4)), input_error);
  tree_aut::builder nonmember(5);
  nonmember.set_par(2, 0, true);
  CHECK_THROWS_AS(verify_parity_pattern(std::move(nonmember).build()), input_error);
}

TEST_CASE("frattini verification rejects unusable depths") {
  CHECK_THROWS_AS(verify_frattini(4), precision_error);
  CHECK_THROWS_AS(verify_frattini(6), resource_error);
}
