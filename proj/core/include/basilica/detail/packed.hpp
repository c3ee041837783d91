#ifndef BASILICA_DETAIL_PACKED_HPP_
#define BASILICA_DETAIL_PACKED_HPP_

#include <array>
#include <cstdint>

#include "basilica/tree_aut.hpp"

namespace basilica::detail {

/// Portrait bits of a depth-n automorphism packed into one word, bit k being
/// the parity at global node position k (level-major). Usable for n <= 6.
using packed_aut = std::uint64_t;

inline std::uint64_t portrait_bits(int depth) { return (std::uint64_t{1} << depth) - 1; }

inline std::uint64_t portrait_count(int depth) {
  return std::uint64_t{1} << portrait_bits(depth);
}

/// Parity mask of one whole level: 2^level bits starting at 2^level - 1.
inline std::uint64_t level_mask(int level) {
  return ((std::uint64_t{1} << (std::uint64_t{1} << level)) - 1) << ((std::uint64_t{1} << level) - 1);
}

/// Fast membership predicates on packed portraits of depth <= 5.
///
/// At depths <= 5 every nonvacuous M_n congruence is a mod-4 congruence, and
/// P = 1 + 2(Par(x) + sum of the four grandchildren parities) mod 4, so each
/// congruence is a parity of a fixed bit mask. The per-byte XOR tables below
/// evaluate all of them in four lookups.
class packed_predicates {
 public:
  explicit packed_predicates(int depth);

  int depth() const { return depth_; }

  /// P(w, root) mod 2^j0 with j0 = min(floor((depth+1)/2), 3).
  int root_precision() const { return j0_; }
  unsigned p_root(packed_aut w) const;

  bool in_m(packed_aut w) const {
    const std::uint32_t x = static_cast<std::uint32_t>(w);
    return (m_tables_[0][x & 255] ^ m_tables_[1][(x >> 8) & 255] ^
            m_tables_[2][(x >> 16) & 255] ^ m_tables_[3][x >> 24]) == 0;
  }

  bool in_b(packed_aut w) const { return in_m(w) && p_root(w) == 1; }

  bool in_u(packed_aut w, int m) const {
    return (w & ((std::uint64_t{1} << ((std::uint64_t{1} << m) - 1)) - 1)) == 0;
  }

  bool in_e(packed_aut w) const { return in_u(w, depth_ - 1) && p_root(w) == 1 && in_m(w); }

  /// Depth 5 only (P mod 8 is unavailable below).
  bool in_frattini(packed_aut w) const;

  bool level_count_odd(packed_aut w, int level) const;

  /// The permutation-sign pattern of the remark on even/odd levels, for
  /// members of M_5: equal signs at even levels, equal signs at odd levels
  /// >= 3, and level 1 matching them exactly when P = 1 mod 4. Depth 5 only.
  bool parity_pattern_holds(packed_aut w) const;

 private:
  int depth_;
  int j0_;
  std::array<std::array<std::uint32_t, 256>, 4> m_tables_{};
};

/// Right multiplication w -> w * g by a fixed automorphism g of depth <= 6:
/// Par(w g, x) = Par(w, g(x)) xor Par(g, x), i.e. a fixed bit permutation of
/// w followed by a constant XOR. Evaluated with per-byte scatter tables.
class packed_multiplier {
 public:
  explicit packed_multiplier(const tree_aut& g);

  packed_aut operator()(packed_aut w) const {
    std::uint64_t r = par_mask_;
    for (int b = 0; b < bytes_; ++b) r ^= scatter_[b][(w >> (8 * b)) & 255];
    return r;
  }

  packed_aut applied_to_identity() const { return par_mask_; }

 private:
  int bytes_;
  std::uint64_t par_mask_;
  std::array<std::array<std::uint64_t, 256>, 8> scatter_{};
};

/// u composed with v on packed portraits of depth <= 6, allocation-free.
packed_aut packed_compose(int depth, packed_aut u, packed_aut v);

packed_aut packed_inverse(int depth, packed_aut u);

/// Thread-count resolution: explicit value, else the BASILICA_THREADS
/// environment variable, else the hardware concurrency (at least 1).
int resolve_threads(int requested);

}  // namespace basilica::detail

#endif  // BASILICA_DETAIL_PACKED_HPP_
