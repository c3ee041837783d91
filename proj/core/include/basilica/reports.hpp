#ifndef BASILICA_REPORTS_HPP_
#define BASILICA_REPORTS_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "basilica/tree_aut.hpp"

namespace basilica {

/// The short exact sequence 0 -> B_n -> M_n -> (Z/2^j)^x -> 0 at one depth.
/// Exhaustive for n <= 5 (every portrait binned by P mod 2^j); sampled above
/// (residue coverage by products of epsilon and theta, plus random
/// multiplicativity checks).
struct exact_sequence_report {
  int depth = 0;
  int j = 1;
  bool exhaustive = true;
  bool degenerate = false;  // j == 1: the unit group is trivial and M_n = B_n
  std::uint64_t m_count = 0;
  std::vector<std::array<std::uint64_t, 2>> fibers;  // {residue, count}
  bool image_full = false;
  bool fibers_equal = false;
  std::uint64_t kernel_count = 0;
  std::uint64_t expected_kernel = 0;
  std::uint64_t p_epsilon = 0;
  std::uint64_t p_theta = 0;
  bool generator_images_ok = false;
  bool homomorphism_ok = false;
  bool pass = false;
  double seconds = 0.0;
};

exact_sequence_report verify_exact_sequence(int depth, int threads = 0,
                                            std::uint64_t sample_pairs = 1000,
                                            std::uint64_t seed = 1);

/// The inclusion E_n <= E_{n-1} x E_{n-1} and its index (1 for even n, 2 for
/// odd n), the lambda witness of the nontrivial coset for odd n.
struct induct_e_report {
  int n = 0;
  std::uint64_t e_prev_count = 0;
  std::uint64_t product_count = 0;   // |E_{n-1}|^2
  std::uint64_t e_in_product = 0;    // members of E_n inside the product
  std::uint64_t e_count = 0;         // independent enumeration of E_n
  std::uint64_t index = 0;
  std::uint64_t expected_index = 0;
  bool e_subset_of_product = false;
  // Lambda witness fields (odd n only; ignored for even n):
  bool lambda_in_product = false;
  bool lambda_in_e = true;
  std::uint64_t p_lambda = 0;
  int p_lambda_precision = 0;
  bool lambda_coset_covers_complement = false;
  bool pass = false;
  double seconds = 0.0;
};

induct_e_report verify_induct_e(int n);

/// Level-sign pattern of one member of M_n (depth >= 5): equal signs at all
/// even levels, equal signs at odd levels >= 3, level 1 agreeing with the
/// odd levels exactly when P = 1 mod 4.
struct parity_pattern_report {
  int depth = 0;
  std::vector<int> level_signs;  // level_signs[l-1] = sign at level l
  std::uint64_t p_mod4 = 0;
  bool even_levels_equal = false;
  bool odd_levels_equal = false;
  bool level1_matches_iff_p_1_mod4 = false;
  bool pass = false;
};

parity_pattern_report verify_parity_pattern(const tree_aut& sigma);

/// The Frattini subgroup of M_5: order 2^21 (index 16), normality under the
/// generators, and a witness in each of the 16 cosets built from products of
/// alpha, beta, epsilon, theta.
struct frattini_report {
  int depth = 5;
  std::uint64_t m_order = 0;
  std::uint64_t order = 0;
  std::uint64_t index = 0;
  bool normal = false;
  int cosets_witnessed = 0;
  bool coset_sizes_equal = false;
  std::uint64_t parity_pattern_violations = 0;
  bool pass = false;
  double seconds = 0.0;
};

frattini_report verify_frattini(int depth, int threads = 0);

}  // namespace basilica

#endif  // BASILICA_REPORTS_HPP_
