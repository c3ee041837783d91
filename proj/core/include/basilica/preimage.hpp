#ifndef BASILICA_PREIMAGE_HPP_
#define BASILICA_PREIMAGE_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "basilica/detail/ddouble.hpp"
#include "basilica/node_address.hpp"

namespace basilica {

/// Minimal complex type usable with both double and detail::ddouble.
template <typename Real>
struct cplx {
  Real re{};
  Real im{};
};

template <typename Real>
cplx<Real> operator+(cplx<Real> a, cplx<Real> b) {
  return {a.re + b.re, a.im + b.im};
}
template <typename Real>
cplx<Real> operator-(cplx<Real> a, cplx<Real> b) {
  return {a.re - b.re, a.im - b.im};
}
template <typename Real>
cplx<Real> operator-(cplx<Real> a) {
  return {-a.re, -a.im};
}
template <typename Real>
cplx<Real> operator*(cplx<Real> a, cplx<Real> b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename Real>
cplx<Real> operator/(cplx<Real> a, cplx<Real> b) {
  const Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

template <typename Real>
Real norm(cplx<Real> z) {
  return z.re * z.re + z.im * z.im;
}

template <typename Real>
Real abs(cplx<Real> z) {
  using detail::sqrt;
  using std::sqrt;
  return sqrt(norm(z));
}

/// Principal branch square root (argument in (-pi/2, pi/2]).
template <typename Real>
cplx<Real> principal_sqrt(cplx<Real> z);

inline double to_double(double x) { return x; }
inline double to_double(detail::ddouble x) { return static_cast<double>(x); }

template <typename Real>
std::complex<double> to_std_complex(cplx<Real> z) {
  return {to_double(z.re), to_double(z.im)};
}

/// The compatible chain zeta_{2^m} = exp(2 pi i / 2^m), m = 1..m_max, built by
/// repeated principal square roots from zeta_2 = -1 so that the relation
/// (zeta_{2^m})^2 = zeta_{2^(m-1)} is exact by construction.
template <typename Real>
class root_chain {
 public:
  explicit root_chain(int m_max);

  int m_max() const { return static_cast<int>(zetas_.size()); }
  cplx<Real> zeta(int m) const;

 private:
  std::vector<cplx<Real>> zetas_;
};

/// The depth-n tree of iterated preimages of x0 under z^2 - 1, one complex
/// value per node. The labeling is the assignment of node addresses to
/// values; build() assigns the +/- square root branches in an order drawn
/// from the seed, and canonical_label() repairs it afterwards.
template <typename Real>
class basic_preimage_tree {
 public:
  static constexpr int max_build_depth = 20;

  using real_type = Real;
  using complex_type = cplx<Real>;

  /// Builds the tree. x0 must avoid {0, -1}; a branch value whose square
  /// falls within tolerance of zero raises domain_error (degenerate tree).
  static basic_preimage_tree build(std::complex<double> x0, int depth, std::uint64_t seed,
                                   double tolerance = 1e-9);

  int depth() const { return depth_; }
  double tolerance() const { return tolerance_; }
  std::uint64_t seed() const { return seed_; }

  complex_type value(int level, std::uint32_t index) const;
  complex_type value(const node_address& x) const { return value(x.level(), x.index()); }
  std::complex<double> value_as_double(const node_address& x) const {
    return to_std_complex(value(x));
  }

  /// Swaps recorded by the most recent canonical_label pass (sibling pairs
  /// whose subtrees were exchanged).
  const std::vector<std::pair<node_address, node_address>>& swap_log() const {
    return swap_log_;
  }

  template <typename R>
  friend basic_preimage_tree<R> canonical_label(basic_preimage_tree<R> tree,
                                                const root_chain<R>& chain);

 private:
  basic_preimage_tree() = default;

  /// Exchanges the subtrees rooted at a node and its sibling.
  void swap_sibling_subtrees(const node_address& x);

  int depth_ = 0;
  double tolerance_ = 0.0;
  std::uint64_t seed_ = 0;
  std::vector<std::vector<complex_type>> values_;  // values_[level][index]
  std::vector<std::pair<node_address, node_address>> swap_log_;
};

/// The level-by-level relabeling that makes every zeta-product identity hold:
/// for each new level n = 3..depth, walk levels 0, 2, ... (n odd) or
/// 1, 3, ... (n even) up through n-3; at each node y with i = (n-l-1)/2,
/// compare the product quotient against +/- zeta_{2^(i+1)} and, when the sign
/// is wrong, exchange the level-n siblings y b a^(2i-1) a and y b a^(2i-1) b.
/// Ambiguous comparisons (closer than 10x tolerance) raise precision_error.
template <typename Real>
basic_preimage_tree<Real> canonical_label(basic_preimage_tree<Real> tree,
                                          const root_chain<Real>& chain);

/// | product quotient at (y, i) - zeta_{2^(i+1)} |.
/// Requires level(y) + 2i + 1 <= depth.
template <typename Real>
double zetaprod_residual(const basic_preimage_tree<Real>& tree, const root_chain<Real>& chain,
                         const node_address& y, int i);

/// Largest zetaprod residual over every node y and every admissible i >= 0.
template <typename Real>
double max_zetaprod_residual(const basic_preimage_tree<Real>& tree,
                             const root_chain<Real>& chain);

/// Largest |(a1 a2)^2 + y| over all nodes y, where a1, a2 are grandchildren
/// of y lying over its two distinct children.
template <typename Real>
double max_sibling_square_residual(const basic_preimage_tree<Real>& tree);

/// A choice of the nested alpha/beta points: one bit for which child of y is
/// alpha_{0,1}, then per stage and per selected node one bit for the
/// grandchild over each of its children, alpha tree first.
struct nrel_selection {
  std::vector<std::uint8_t> bits;

  static std::size_t bit_count(int m);  // 2^(m+2) - 3
  static nrel_selection from_seed(int m, std::uint64_t seed);
};

struct nrel_report {
  int m = 0;
  double gamma_power_residual = 0.0;   // |(-gamma_m)^(2^m) - beta_{0,1}|
  double delta_power_residual = 0.0;   // |(-delta_m)^(2^m) - alpha_{0,1}|
  double primitivity_residual = 0.0;   // |(gamma_m/delta_m)^(2^m) + 1|
  double chain_residual = 0.0;         // worst |(-gamma_i)^2 -+ gamma_{i-1}| step
  double max_residual = 0.0;
};

/// Checks the root-of-unity product identities for one selection.
/// Requires level(y) + 2m + 1 <= depth; malformed selections raise input_error.
template <typename Real>
nrel_report verify_nrel(const basic_preimage_tree<Real>& tree, const node_address& y, int m,
                        const nrel_selection& selection);

using preimage_tree = basic_preimage_tree<double>;
using preimage_tree_x = basic_preimage_tree<detail::ddouble>;
using root_chain_d = root_chain<double>;
using root_chain_x = root_chain<detail::ddouble>;

}  // namespace basilica

#endif  // BASILICA_PREIMAGE_HPP_
