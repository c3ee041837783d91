#include "basilica/dyadic.hpp"

#include <vector>

#include "basilica/errors.hpp"

namespace basilica {

dyadic_residue dyadic_residue::truncate(int j) const {
  if (j < 1 || j > precision) throw precision_error("truncation precision out of range");
  return {value & ((std::uint64_t{1} << j) - 1), j};
}

std::string dyadic_residue::to_string() const {
  return std::to_string(value) + " mod 2^" + std::to_string(precision);
}

dyadic_residue make_residue(std::int64_t value, int precision) {
  if (precision < 1 || precision > 62) throw precision_error("precision out of range");
  const std::int64_t m = std::int64_t{1} << precision;
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r), precision};
}

int dyadic_precision(int depth, int level) {
  if (level < 0 || level > depth) throw input_error("node level out of range for depth");
  return (depth - level + 1) / 2;
}

namespace {

// Sum over i = 0..j-1 of 2^i * sum of Par(sigma, y) over the stratum of nodes
// y = x (a s1)(a s2)...(a s_i). The stratum at step i+1 is obtained by taking
// the two children of the a-child of every stratum node.
std::int64_t q_sum(const tree_aut& sigma, const node_address& x, int j) {
  std::vector<std::uint32_t> stratum{x.index()};
  std::vector<std::uint32_t> next;
  std::int64_t total = 0;
  int level = x.level();
  for (int i = 0; i < j; ++i) {
    std::int64_t ones = 0;
    for (std::uint32_t idx : stratum) ones += sigma.par(level, idx) ? 1 : 0;
    total += ones << i;
    if (i + 1 < j) {
      next.clear();
      next.reserve(stratum.size() * 2);
      for (std::uint32_t idx : stratum) {
        const std::uint32_t a_child = idx << 1;  // append symbol a
        next.push_back(a_child << 1);            // then a
        next.push_back((a_child << 1) | 1u);     // then b
      }
      stratum.swap(next);
      level += 2;
    }
  }
  return total;
}

}  // namespace

dyadic_residue q_value(const tree_aut& sigma, const node_address& x, int j) {
  if (j < 1) throw input_error("requested precision must be at least 1");
  if (j > dyadic_precision(sigma.depth(), x.level()))
    throw precision_error("requested Q precision exceeds what the portrait determines");
  return make_residue(q_sum(sigma, x, j), j);
}

dyadic_residue p_value(const tree_aut& sigma, const node_address& x) {
  if (x.level() > sigma.depth() - 1)
    throw input_error("P is defined at nodes strictly below the top level");
  const int j = dyadic_precision(sigma.depth(), x.level());
  std::int64_t p = sigma.par(x) ? -1 : 1;
  if (j >= 2) {
    const node_address xa = x.child(symbol::a);
    const node_address xb = x.child(symbol::b);
    for (symbol t : {symbol::a, symbol::b}) {
      p += 2 * q_sum(sigma, xb.child(t), j - 1);
      p -= 2 * q_sum(sigma, xa.child(t), j - 1);
    }
  }
  return make_residue(p, j);
}

dyadic_residue p_value(const tree_aut& sigma, const node_address& x, int j) {
  return p_value(sigma, x).truncate(j);
}

}  // namespace basilica
