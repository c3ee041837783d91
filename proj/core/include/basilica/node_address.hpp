#ifndef BASILICA_NODE_ADDRESS_HPP_
#define BASILICA_NODE_ADDRESS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "basilica/errors.hpp"

namespace basilica {

// One of the two edges out of a node. 'a' is the left child, 'b' the right.
enum class symbol : std::uint8_t { a = 0, b = 1 };

inline constexpr symbol flip(symbol s, bool do_flip) {
  return static_cast<symbol>(static_cast<std::uint8_t>(s) ^ (do_flip ? 1u : 0u));
}

inline constexpr char to_char(symbol s) { return s == symbol::a ? 'a' : 'b'; }

// A node of the binary rooted tree, addressed by its path s1 s2 ... sm from
// the root. Packed form: index = sum bit(sk) * 2^(m-k), so s1 is the most
// significant bit and the within-level order matches a left-to-right drawing.
class node_address {
 public:
  static constexpr int max_level = 32;

  constexpr node_address() = default;  // the root (empty path)

  constexpr node_address(int level, std::uint32_t index) : level_(level), index_(index) {
    if (level < 0 || level > max_level) throw input_error("node level out of range");
    if (level < 32 && index >= (std::uint32_t{1} << level))
      throw input_error("node index out of range for level");
  }

  // Parses a path string over {a, b}; "" is the root.
  static node_address parse(std::string_view path) {
    if (path.size() > max_level) throw input_error("node path too long");
    std::uint32_t idx = 0;
    for (char c : path) {
      if (c != 'a' && c != 'b') throw input_error("node path must use symbols 'a' and 'b'");
      idx = (idx << 1) | (c == 'b' ? 1u : 0u);
    }
    return node_address(static_cast<int>(path.size()), idx);
  }

  constexpr int level() const { return level_; }
  constexpr std::uint32_t index() const { return index_; }

  constexpr bool is_root() const { return level_ == 0; }

  // k-th path symbol, 1-based as in the labeling s1 s2 ... sm.
  constexpr symbol at(int k) const {
    if (k < 1 || k > level_) throw input_error("path position out of range");
    return static_cast<symbol>((index_ >> (level_ - k)) & 1u);
  }

  constexpr node_address parent() const {
    if (level_ == 0) throw input_error("the root has no parent");
    return node_address(level_ - 1, index_ >> 1);
  }

  constexpr node_address child(symbol s) const {
    if (level_ >= max_level) throw input_error("child would exceed the maximum level");
    return node_address(level_ + 1, (index_ << 1) | static_cast<std::uint32_t>(s));
  }

  constexpr node_address sibling() const {
    if (level_ == 0) throw input_error("the root has no sibling");
    return node_address(level_, index_ ^ 1u);
  }

  std::string to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(level_));
    for (int k = 1; k <= level_; ++k) s.push_back(to_char(at(k)));
    return s;
  }

  friend constexpr auto operator<=>(const node_address&, const node_address&) = default;

 private:
  int level_ = 0;
  std::uint32_t index_ = 0;
};

}  // namespace basilica

#endif  // BASILICA_NODE_ADDRESS_HPP_
