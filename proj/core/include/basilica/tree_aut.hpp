#ifndef BASILICA_TREE_AUT_HPP_
#define BASILICA_TREE_AUT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "basilica/errors.hpp"
#include "basilica/node_address.hpp"

namespace basilica {

/// An automorphism of the depth-n binary rooted tree, stored as its parity
/// portrait: one bit per node at levels 0..n-1, level-major, nodes within a
/// level ordered by node_address::index(). Par(sigma, x) = 1 means sigma
/// transposes the two children of x, i.e. sigma(x s) = sigma(x) s-flipped.
///
/// Values are immutable after construction; every operation returns a new
/// automorphism. This makes unrestricted concurrent reads safe.
class tree_aut {
 public:
  static constexpr int max_depth = 24;

  /// The identity automorphism of T_n (all parities zero).
  explicit tree_aut(int depth);

  int depth() const { return depth_; }

  /// Number of portrait bits, 2^depth - 1.
  std::uint64_t bit_count() const { return (std::uint64_t{1} << depth_) - 1; }

  /// Global portrait position of a node: 2^level - 1 + index.
  static std::uint64_t bit_position(const node_address& x) {
    return ((std::uint64_t{1} << x.level()) - 1) + x.index();
  }

  /// Par(sigma, x). Requires level(x) <= depth - 1.
  bool par(const node_address& x) const;
  bool par(int level, std::uint32_t index) const;

  /// The image sigma(x). Requires level(x) <= depth.
  node_address apply(const node_address& x) const;

  /// Restriction to the bottom m levels, 1 <= m <= depth.
  tree_aut restrict_to(int m) const;

  /// True iff the automorphism fixes every node at levels 0..m, i.e. lies in
  /// U_m = ker(Aut(T_n) -> Aut(T_m)). Requires 0 <= m <= depth.
  bool acts_trivially(int m) const;

  bool is_identity() const { return acts_trivially(depth_); }

  /// Sign of the permutation induced on the 2^level nodes at the given level
  /// (each parity-1 node one level below contributes one transposition).
  int level_sign(int level) const;

  /// Parity (mod 2) of the number of parity-1 nodes at one level.
  bool level_parity_count_odd(int level) const;

  bool operator==(const tree_aut& other) const = default;

  /// Parity bits packed into a single word, level-major; requires depth <= 6.
  std::uint64_t pack_index() const;
  static tree_aut from_index(int depth, std::uint64_t index);

  /// Binary form: one depth byte, then the parity bits level-major,
  /// little-endian bit order within each byte.
  std::vector<std::uint8_t> to_bytes() const;
  static tree_aut from_bytes(const std::vector<std::uint8_t>& bytes);

  /// Lowercase hex of to_bytes(), for CLI interchange.
  std::string to_hex() const;
  static tree_aut from_hex(std::string_view hex);

  const std::vector<std::uint64_t>& words() const { return words_; }

  class builder;

 private:
  tree_aut(int depth, std::vector<std::uint64_t> words);

  bool bit_at(std::uint64_t pos) const {
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }

  int depth_;
  std::vector<std::uint64_t> words_;

  friend class builder;
  friend tree_aut compose(const tree_aut&, const tree_aut&);
  friend tree_aut inverse(const tree_aut&);
};

/// Mutable construction helper; build() freezes the portrait.
class tree_aut::builder {
 public:
  explicit builder(int depth);

  void set_par(const node_address& x, bool value);
  void set_par(int level, std::uint32_t index, bool value);
  bool par(int level, std::uint32_t index) const;

  tree_aut build() &&;

 private:
  int depth_;
  std::vector<std::uint64_t> words_;
};

/// sigma composed with tau, acting as x -> sigma(tau(x)).
/// Par(sigma tau, x) = Par(sigma, tau(x)) XOR Par(tau, x).
tree_aut compose(const tree_aut& sigma, const tree_aut& tau);

/// Par(sigma^-1, x) = Par(sigma, sigma^-1(x)).
tree_aut inverse(const tree_aut& sigma);

/// Repeated squaring.
tree_aut power(const tree_aut& sigma, std::uint64_t exponent);

/// The element (sigma_a, sigma_b) of Aut(T_{n+1}) that fixes level 1 and acts
/// as sigma_a on the subtree rooted at a and sigma_b on the one rooted at b.
tree_aut subtree_pair(const tree_aut& sigma_a, const tree_aut& sigma_b);

/// Splits a sigma that fixes level 1 into its two level-1 subtree actions.
/// Requires Par(sigma, root) = 0 and depth >= 2.
std::pair<tree_aut, tree_aut> subtree_components(const tree_aut& sigma);

}  // namespace basilica

#endif  // BASILICA_TREE_AUT_HPP_
