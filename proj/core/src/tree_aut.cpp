#include "basilica/tree_aut.hpp"

#include <bit>
#include <utility>

namespace basilica {

namespace {

std::size_t word_count(int depth) {
  const std::uint64_t bits = (std::uint64_t{1} << depth) - 1;
  return static_cast<std::size_t>((bits + 63) / 64);
}

void check_depth(int depth) {
  if (depth < 1 || depth > tree_aut::max_depth) throw input_error("tree depth out of range");
}

}  // namespace

tree_aut::tree_aut(int depth) : depth_(depth) {
  check_depth(depth);
  words_.assign(word_count(depth), 0);
}

tree_aut::tree_aut(int depth, std::vector<std::uint64_t> words)
    : depth_(depth), words_(std::move(words)) {}

bool tree_aut::par(const node_address& x) const {
  if (x.level() > depth_ - 1) throw input_error("parity requested above the top level");
  return bit_at(bit_position(x));
}

bool tree_aut::par(int level, std::uint32_t index) const {
  if (level < 0 || level > depth_ - 1) throw input_error("parity requested above the top level");
  return bit_at(((std::uint64_t{1} << level) - 1) + index);
}

node_address tree_aut::apply(const node_address& x) const {
  if (x.level() > depth_) throw input_error("node is above the top level of the automorphism");
  // sigma(x s) = sigma(x) (s xor Par(sigma, x)); walk the path from the root,
  // looking parities up at the domain-side prefixes.
  std::uint32_t domain = 0;
  std::uint32_t image = 0;
  for (int k = 1; k <= x.level(); ++k) {
    const int level = k - 1;
    const bool p = bit_at(((std::uint64_t{1} << level) - 1) + domain);
    const std::uint32_t s = (x.index() >> (x.level() - k)) & 1u;
    image = (image << 1) | (s ^ (p ? 1u : 0u));
    domain = (domain << 1) | s;
  }
  return node_address(x.level(), image);
}

tree_aut tree_aut::restrict_to(int m) const {
  if (m < 1 || m > depth_) throw input_error("restriction level out of range");
  std::vector<std::uint64_t> out(word_count(m), 0);
  const std::uint64_t bits = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t w = 0; w < out.size(); ++w) out[w] = words_[w];
  const unsigned tail = static_cast<unsigned>(bits & 63);
  if (tail != 0) out.back() &= (std::uint64_t{1} << tail) - 1;
  return tree_aut(m, std::move(out));
}

bool tree_aut::acts_trivially(int m) const {
  if (m < 0 || m > depth_) throw input_error("level out of range");
  std::uint64_t bits = (std::uint64_t{1} << m) - 1;  // parities at levels 0..m-1
  std::size_t w = 0;
  while (bits >= 64) {
    if (words_[w] != 0) return false;
    ++w;
    bits -= 64;
  }
  if (bits != 0 && (words_[w] & ((std::uint64_t{1} << bits) - 1)) != 0) return false;
  return true;
}

bool tree_aut::level_parity_count_odd(int level) const {
  if (level < 0 || level > depth_ - 1) throw input_error("level out of range");
  const std::uint64_t lo = (std::uint64_t{1} << level) - 1;
  const std::uint64_t hi = lo + (std::uint64_t{1} << level);  // exclusive
  int ones = 0;
  for (std::uint64_t pos = lo >> 6; pos <= (hi - 1) >> 6; ++pos) {
    std::uint64_t w = words_[pos];
    const std::uint64_t base = pos << 6;
    if (base < lo) w &= ~std::uint64_t{0} << (lo - base);
    if (base + 64 > hi) w &= (hi - base) == 64 ? ~std::uint64_t{0}
                                               : ((std::uint64_t{1} << (hi - base)) - 1);
    ones += std::popcount(w);
  }
  return (ones & 1) != 0;
}

int tree_aut::level_sign(int level) const {
  if (level < 1 || level > depth_) throw input_error("level out of range");
  return level_parity_count_odd(level - 1) ? -1 : +1;
}

std::uint64_t tree_aut::pack_index() const {
  if (depth_ > 6) throw input_error("pack_index requires depth <= 6");
  return words_[0];
}

tree_aut tree_aut::from_index(int depth, std::uint64_t index) {
  check_depth(depth);
  if (depth > 6) throw input_error("from_index requires depth <= 6");
  const std::uint64_t bits = (std::uint64_t{1} << depth) - 1;
  if (bits < 64 && index >= (std::uint64_t{1} << bits))
    throw input_error("portrait index out of range");
  return tree_aut(depth, {index});
}

std::vector<std::uint8_t> tree_aut::to_bytes() const {
  const std::uint64_t bits = bit_count();
  std::vector<std::uint8_t> out(1 + static_cast<std::size_t>((bits + 7) / 8), 0);
  out[0] = static_cast<std::uint8_t>(depth_);
  for (std::uint64_t pos = 0; pos < bits; ++pos)
    if (bit_at(pos)) out[1 + (pos >> 3)] |= static_cast<std::uint8_t>(1u << (pos & 7));
  return out;
}

tree_aut tree_aut::from_bytes(const std::vector<std::uint8_t>& bytes) {
  if (bytes.empty()) throw input_error("empty automorphism serialization");
  const int depth = bytes[0];
  check_depth(depth);
  const std::uint64_t bits = (std::uint64_t{1} << depth) - 1;
  if (bytes.size() != 1 + static_cast<std::size_t>((bits + 7) / 8))
    throw input_error("automorphism serialization has the wrong length");
  std::vector<std::uint64_t> words(word_count(depth), 0);
  for (std::uint64_t pos = 0; pos < bits; ++pos)
    if ((bytes[1 + (pos >> 3)] >> (pos & 7)) & 1u) words[pos >> 6] |= std::uint64_t{1} << (pos & 63);
  return tree_aut(depth, std::move(words));
}

std::string tree_aut::to_hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : to_bytes()) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

tree_aut tree_aut::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw input_error("hex serialization must have even length");
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw input_error("invalid hex digit in automorphism serialization");
  };
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i)
    bytes[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
  return from_bytes(bytes);
}

tree_aut::builder::builder(int depth) : depth_(depth) {
  check_depth(depth);
  words_.assign(word_count(depth), 0);
}

void tree_aut::builder::set_par(const node_address& x, bool value) {
  set_par(x.level(), x.index(), value);
}

void tree_aut::builder::set_par(int level, std::uint32_t index, bool value) {
  if (level < 0 || level > depth_ - 1) throw input_error("parity set above the top level");
  const std::uint64_t pos = ((std::uint64_t{1} << level) - 1) + index;
  if (value)
    words_[pos >> 6] |= std::uint64_t{1} << (pos & 63);
  else
    words_[pos >> 6] &= ~(std::uint64_t{1} << (pos & 63));
}

bool tree_aut::builder::par(int level, std::uint32_t index) const {
  const std::uint64_t pos = ((std::uint64_t{1} << level) - 1) + index;
  return (words_[pos >> 6] >> (pos & 63)) & 1u;
}

tree_aut tree_aut::builder::build() && { return tree_aut(depth_, std::move(words_)); }

tree_aut compose(const tree_aut& sigma, const tree_aut& tau) {
  if (sigma.depth() != tau.depth()) throw input_error("compose requires equal depths");
  const int n = sigma.depth();
  tree_aut::builder out(n);

  // Propagate tau-images level by level: Par(sigma tau, x) = Par(sigma, tau(x))
  // xor Par(tau, x), and tau(x s) = tau(x) (s xor Par(tau, x)).
  std::vector<std::uint32_t> image{0};
  std::vector<std::uint32_t> next;
  for (int level = 0; level < n; ++level) {
    const std::uint32_t count = std::uint32_t{1} << level;
    if (level + 1 < n) next.resize(std::size_t{2} * count);
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t t = image[i];
      const bool pt = tau.par(level, i);
      out.set_par(level, i, sigma.par(level, t) ^ pt);
      if (level + 1 < n) {
        const std::uint32_t flip = pt ? 1u : 0u;
        next[std::size_t{2} * i] = (t << 1) | flip;
        next[std::size_t{2} * i + 1] = (t << 1) | (flip ^ 1u);
      }
    }
    image.swap(next);
  }
  return std::move(out).build();
}

tree_aut inverse(const tree_aut& sigma) {
  const int n = sigma.depth();
  tree_aut::builder out(n);

  // preimage[i] = sigma^-1(node i at the current level);
  // Par(sigma^-1, x) = Par(sigma, sigma^-1(x)).
  std::vector<std::uint32_t> preimage{0};
  std::vector<std::uint32_t> next;
  for (int level = 0; level < n; ++level) {
    const std::uint32_t count = std::uint32_t{1} << level;
    if (level + 1 < n) next.resize(std::size_t{2} * count);
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t y = preimage[i];
      const bool p = sigma.par(level, y);
      out.set_par(level, i, p);
      if (level + 1 < n) {
        // sigma^-1(x s) = sigma^-1(x) (s xor Par(sigma, sigma^-1(x)))
        const std::uint32_t flip = p ? 1u : 0u;
        next[std::size_t{2} * i] = (y << 1) | flip;
        next[std::size_t{2} * i + 1] = (y << 1) | (flip ^ 1u);
      }
    }
    preimage.swap(next);
  }
  return std::move(out).build();
}

tree_aut power(const tree_aut& sigma, std::uint64_t exponent) {
  tree_aut result(sigma.depth());
  tree_aut base = sigma;
  while (exponent != 0) {
    if (exponent & 1u) result = compose(result, base);
    exponent >>= 1;
    if (exponent != 0) base = compose(base, base);
  }
  return result;
}

std::pair<tree_aut, tree_aut> subtree_components(const tree_aut& sigma) {
  if (sigma.depth() < 2) throw input_error("subtree_components needs depth >= 2");
  if (sigma.par(node_address()))
    throw input_error("subtree_components needs an automorphism fixing level 1");
  const int m = sigma.depth() - 1;
  tree_aut::builder a(m);
  tree_aut::builder b(m);
  for (int level = 0; level < m; ++level) {
    const std::uint32_t count = std::uint32_t{1} << level;
    for (std::uint32_t i = 0; i < count; ++i) {
      if (sigma.par(level + 1, i)) a.set_par(level, i, true);
      if (sigma.par(level + 1, count + i)) b.set_par(level, i, true);
    }
  }
  return {std::move(a).build(), std::move(b).build()};
}

tree_aut subtree_pair(const tree_aut& sigma_a, const tree_aut& sigma_b) {
  if (sigma_a.depth() != sigma_b.depth()) throw input_error("subtree_pair requires equal depths");
  const int m = sigma_a.depth();
  if (m + 1 > tree_aut::max_depth) throw input_error("subtree_pair would exceed the depth cap");
  tree_aut::builder out(m + 1);
  for (int level = 0; level < m; ++level) {
    const std::uint32_t count = std::uint32_t{1} << level;
    for (std::uint32_t i = 0; i < count; ++i) {
      if (sigma_a.par(level, i)) out.set_par(level + 1, i, true);
      if (sigma_b.par(level, i)) out.set_par(level + 1, count + i, true);
    }
  }
  return std::move(out).build();
}

}  // namespace basilica
