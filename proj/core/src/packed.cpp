#include "basilica/detail/packed.hpp"

#include <bit>
#include <cstdlib>
#include <thread>
#include <vector>

#include "basilica/errors.hpp"

namespace basilica::detail {

namespace {

// Global position of node (level, index).
constexpr std::uint64_t pos_of(int level, std::uint32_t index) {
  return ((std::uint64_t{1} << level) - 1) + index;
}

}  // namespace

packed_predicates::packed_predicates(int depth) : depth_(depth) {
  if (depth < 1 || depth > 5) throw input_error("packed predicates support depths 1..5");
  j0_ = (depth + 1) / 2;
  if (j0_ > 3) j0_ = 3;

  // One GF(2) condition per node x at levels 1..depth-3:
  // parity over { x, its grandchildren, the root, the root's grandchildren }.
  std::vector<std::uint64_t> masks;
  std::uint64_t root_mask = std::uint64_t{1} << pos_of(0, 0);
  if (depth >= 3)
    for (std::uint32_t t = 0; t < 4; ++t) root_mask |= std::uint64_t{1} << pos_of(2, t);
  for (int m = 1; m <= depth_ - 3; ++m) {
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << m); ++i) {
      std::uint64_t mask = std::uint64_t{1} << pos_of(m, i);
      for (std::uint32_t t = 0; t < 4; ++t) mask |= std::uint64_t{1} << pos_of(m + 2, 4 * i + t);
      masks.push_back(mask ^ root_mask);
    }
  }

  for (int b = 0; b < 4; ++b) {
    for (std::uint32_t v = 0; v < 256; ++v) {
      std::uint32_t cond = 0;
      for (std::size_t c = 0; c < masks.size(); ++c) {
        const std::uint64_t byte_mask = (masks[c] >> (8 * b)) & 255u;
        if (std::popcount(v & static_cast<std::uint32_t>(byte_mask)) & 1)
          cond |= std::uint32_t{1} << c;
      }
      m_tables_[b][v] = cond;
    }
  }
}

unsigned packed_predicates::p_root(packed_aut w) const {
  if (j0_ == 1) return 1;
  const unsigned p0 = static_cast<unsigned>(w & 1);
  if (j0_ == 2) {
    // P mod 4 = 1 + 2 (Par(root) xor parity count of level 2).
    const unsigned g = p0 ^ (static_cast<unsigned>(std::popcount(w & level_mask(2))) & 1u);
    return 1 + 2 * g;
  }
  // j0 == 3, depth 5: P = (-1)^p0 + 2[Q(ba)+Q(bb)] - 2[Q(aa)+Q(ab)] mod 8 with
  // Q(st) = Par(st) + 2(Par(st aa) + Par(st ab)).
  int q[4];
  for (std::uint32_t st = 0; st < 4; ++st) {
    const int base = static_cast<int>((w >> pos_of(2, st)) & 1);
    const int gc = static_cast<int>((w >> pos_of(4, 4 * st)) & 1) +
                   static_cast<int>((w >> pos_of(4, 4 * st + 1)) & 1);
    q[st] = base + 2 * gc;
  }
  int p = (p0 ? -1 : 1) + 2 * (q[2] + q[3]) - 2 * (q[0] + q[1]);
  return static_cast<unsigned>(((p % 8) + 8) % 8);
}

bool packed_predicates::in_frattini(packed_aut w) const {
  if (depth_ != 5) throw precision_error("Frattini membership needs P mod 8, so depth >= 5");
  if (w & 1) return false;
  if (std::popcount(w & level_mask(1)) & 1) return false;
  return in_m(w) && p_root(w) == 1;
}

bool packed_predicates::level_count_odd(packed_aut w, int level) const {
  return std::popcount(w & level_mask(level)) & 1;
}

bool packed_predicates::parity_pattern_holds(packed_aut w) const {
  if (depth_ != 5) throw input_error("parity pattern check is a depth-5 packed operation");
  const bool s1 = level_count_odd(w, 0);
  const bool s2 = level_count_odd(w, 1);
  const bool s3 = level_count_odd(w, 2);
  const bool s4 = level_count_odd(w, 3);
  const bool s5 = level_count_odd(w, 4);
  const bool p_is_1_mod_4 = (p_root(w) & 3) == 1;
  return s2 == s4 && s3 == s5 && ((s1 == s3) == p_is_1_mod_4);
}

packed_multiplier::packed_multiplier(const tree_aut& g) {
  if (g.depth() > 6) throw input_error("packed multiplication supports depths <= 6");
  const int n = g.depth();
  const std::uint64_t bits = portrait_bits(n);
  bytes_ = static_cast<int>((bits + 7) / 8);

  par_mask_ = 0;
  std::vector<int> dest_of_source(static_cast<std::size_t>(bits));
  for (int level = 0; level < n; ++level) {
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << level); ++i) {
      const node_address x(level, i);
      if (g.par(x)) par_mask_ |= std::uint64_t{1} << pos_of(level, i);
      dest_of_source[g.apply(x).index() + ((std::size_t{1} << level) - 1)] =
          static_cast<int>(pos_of(level, i));
    }
  }
  for (int b = 0; b < bytes_; ++b) {
    for (std::uint32_t v = 0; v < 256; ++v) {
      std::uint64_t r = 0;
      for (int k = 0; k < 8; ++k) {
        const std::uint64_t src = std::uint64_t{8} * b + k;
        if ((v >> k & 1u) && src < bits) r |= std::uint64_t{1} << dest_of_source[src];
      }
      scatter_[b][v] = r;
    }
  }
}

packed_aut packed_compose(int depth, packed_aut u, packed_aut v) {
  // Same level-by-level image propagation as the tree_aut overload, on fixed
  // stack arrays: Par(uv, x) = Par(u, v(x)) xor Par(v, x).
  std::uint8_t image[64];
  std::uint8_t next[64];
  image[0] = 0;
  std::uint64_t out = 0;
  for (int level = 0; level < depth; ++level) {
    const std::uint32_t count = std::uint32_t{1} << level;
    const std::uint64_t base = (std::uint64_t{1} << level) - 1;
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t t = image[i];
      const std::uint64_t pv = (v >> (base + i)) & 1u;
      out |= (((u >> (base + t)) & 1u) ^ pv) << (base + i);
      if (level + 1 < depth) {
        next[2 * i] = static_cast<std::uint8_t>((t << 1) | pv);
        next[2 * i + 1] = static_cast<std::uint8_t>((t << 1) | (pv ^ 1u));
      }
    }
    if (level + 1 < depth)
      for (std::uint32_t i = 0; i < 2 * count; ++i) image[i] = next[i];
  }
  return out;
}

packed_aut packed_inverse(int depth, packed_aut u) {
  std::uint8_t pre[64];
  std::uint8_t next[64];
  pre[0] = 0;
  std::uint64_t out = 0;
  for (int level = 0; level < depth; ++level) {
    const std::uint32_t count = std::uint32_t{1} << level;
    const std::uint64_t base = (std::uint64_t{1} << level) - 1;
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t y = pre[i];
      const std::uint64_t p = (u >> (base + y)) & 1u;
      out |= p << (base + i);
      if (level + 1 < depth) {
        next[2 * i] = static_cast<std::uint8_t>((y << 1) | p);
        next[2 * i + 1] = static_cast<std::uint8_t>((y << 1) | (p ^ 1u));
      }
    }
    if (level + 1 < depth)
      for (std::uint32_t i = 0; i < 2 * count; ++i) pre[i] = next[i];
  }
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BASILICA_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace basilica::detail
