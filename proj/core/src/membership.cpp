#include "basilica/dyadic.hpp"
#include "basilica/errors.hpp"
#include "basilica/groups.hpp"

namespace basilica {

bool in_m(const tree_aut& sigma) {
  const int n = sigma.depth();
  const dyadic_residue p_root = p_value(sigma, node_address());
  // Low levels carry the highest precision, so most portraits fail there first.
  for (int m = 1; m < n; ++m) {
    const int j = dyadic_precision(n, m);
    if (j < 2) break;  // P is always odd, so the mod-2 congruence is vacuous
    const dyadic_residue want = p_root.truncate(j);
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << m); ++i) {
      if (p_value(sigma, node_address(m, i)) != want) return false;
    }
  }
  return true;
}

bool in_b(const tree_aut& sigma) {
  if (!in_m(sigma)) return false;
  return p_value(sigma, node_address()).value == 1;
}

bool in_e(const tree_aut& sigma) {
  return sigma.acts_trivially(sigma.depth() - 1) && in_b(sigma);
}

bool in_frattini(const tree_aut& sigma) {
  if (sigma.depth() < 5)
    throw precision_error("Frattini membership needs P mod 8, so depth >= 5");
  if (sigma.par(node_address())) return false;   // must fix both level-1 nodes
  if (sigma.level_sign(2) != +1) return false;   // even on the four level-2 nodes
  if (!in_m(sigma)) return false;
  return p_value(sigma, node_address(), 3).value == 1;
}

}  // namespace basilica
