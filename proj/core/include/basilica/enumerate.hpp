#ifndef BASILICA_ENUMERATE_HPP_
#define BASILICA_ENUMERATE_HPP_

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "basilica/tree_aut.hpp"

namespace basilica {

enum class selector_kind { m, b, e, u, frattini, full_aut };

/// Which subgroup a sweep counts. U carries the level of triviality.
struct group_selector {
  selector_kind kind = selector_kind::full_aut;
  int u_level = 0;

  static group_selector parse(std::string_view text);
  std::string to_string() const;
};

struct enumeration_result {
  int depth = 0;
  std::string selector;
  std::uint64_t count = 0;
  std::string method;  // "sweep" or "closure"
  double seconds = 0.0;
};

/// Exact count of depth-n portraits satisfying the selector, by exhaustive
/// scan of all 2^(2^n - 1) portrait indices. The index space is split into
/// contiguous per-thread ranges; counts merge by addition, so the result is
/// independent of the partition. Depths above 5 raise resource_error.
enumeration_result sweep(int depth, group_selector selector, int threads = 0);

/// Membership bitset over the packed portrait index space. Insertion is a
/// relaxed atomic fetch_or, so concurrent inserts are exactly-once.
class portrait_set {
 public:
  portrait_set() = default;
  explicit portrait_set(int depth);

  int depth() const { return depth_; }
  bool contains(std::uint64_t index) const {
    return (words_[index >> 6].load(std::memory_order_relaxed) >> (index & 63)) & 1u;
  }
  /// Marks an index; returns true when it was newly inserted. Thread-safe.
  bool insert(std::uint64_t index);

  std::uint64_t universe_size() const { return std::uint64_t{1} << bits_; }

 private:
  int depth_ = 0;
  int bits_ = 0;
  std::shared_ptr<std::atomic<std::uint64_t>[]> words_;
};

struct closure_options {
  std::uint64_t budget = 0;  // 0 = no limit short of the full index space
  int threads = 0;
  bool keep_elements = true;
};

struct closure_result {
  enumeration_result summary;
  portrait_set members;
  /// Elements in BFS discovery order (exactly FIFO when threads == 1).
  std::vector<std::uint32_t> elements;
};

/// Breadth-first closure of the given same-depth generators (depth <= 5)
/// under composition and inversion, starting from the identity. Exceeding
/// the budget raises resource_error carrying the partial count.
closure_result closure(const std::vector<tree_aut>& generators,
                       const closure_options& options = {});

/// One full pass over all depth-5 portraits, binning the members of M_5 by
/// (root parity, level-2 sign, P mod 8) and checking the even/odd level-sign
/// pattern along the way. Everything the depth-5 structure theorems need.
struct m_census {
  int depth = 5;
  std::uint64_t total = 0;
  std::uint64_t m_count = 0;
  std::uint64_t b_count = 0;
  std::uint64_t e_count = 0;
  std::uint64_t frattini_count = 0;
  /// cells[root_par][level2_odd][(p mod 8) / 2], summing to m_count.
  std::array<std::array<std::array<std::uint64_t, 4>, 2>, 2> cells{};
  std::uint64_t parity_pattern_violations = 0;
  double seconds = 0.0;
};

m_census census_m5(int threads = 0, std::vector<std::uint32_t>* frattini_members = nullptr);

}  // namespace basilica

#endif  // BASILICA_ENUMERATE_HPP_
