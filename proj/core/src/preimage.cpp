#include "basilica/preimage.hpp"

#include <algorithm>
#include <random>

#include "basilica/errors.hpp"

namespace basilica {

template <typename Real>
cplx<Real> principal_sqrt(cplx<Real> z) {
  using detail::sqrt;
  using std::sqrt;
  const Real r = abs(z);
  const Real half(0.5);
  if (!(to_double(r) > 0.0)) return {};
  if (z.re >= Real(0.0)) {
    const Real t = sqrt((r + z.re) * half);
    return {t, z.im / (t + t)};
  }
  const Real u = sqrt((r - z.re) * half);
  const Real v = z.im >= Real(0.0) ? u : -u;
  // re part is |im| / (2u) >= 0 since v carries the sign of im.
  return {z.im / (v + v), v};
}

template <typename Real>
root_chain<Real>::root_chain(int m_max) {
  if (m_max < 1 || m_max > 62) throw input_error("root chain length out of range");
  zetas_.reserve(static_cast<std::size_t>(m_max));
  zetas_.push_back({Real(-1.0), Real(0.0)});
  for (int m = 2; m <= m_max; ++m) zetas_.push_back(principal_sqrt(zetas_.back()));
}

template <typename Real>
cplx<Real> root_chain<Real>::zeta(int m) const {
  if (m < 1 || m > m_max()) throw input_error("root of unity outside the chain");
  return zetas_[static_cast<std::size_t>(m - 1)];
}

template <typename Real>
basic_preimage_tree<Real> basic_preimage_tree<Real>::build(std::complex<double> x0, int depth,
                                                           std::uint64_t seed, double tolerance) {
  if (depth < 1 || depth > max_build_depth) throw input_error("preimage depth out of range");
  if (tolerance < 0.0) throw input_error("tolerance must be nonnegative");
  if (std::abs(x0) <= tolerance || std::abs(x0 + 1.0) <= tolerance)
    throw domain_error("the root point must avoid 0 and -1");

  basic_preimage_tree tree;
  tree.depth_ = depth;
  tree.tolerance_ = tolerance;
  tree.seed_ = seed;
  tree.values_.resize(static_cast<std::size_t>(depth) + 1);
  tree.values_[0] = {complex_type{Real(x0.real()), Real(x0.imag())}};

  std::mt19937_64 rng(seed);
  for (int level = 1; level <= depth; ++level) {
    const auto& below = tree.values_[static_cast<std::size_t>(level - 1)];
    auto& here = tree.values_[static_cast<std::size_t>(level)];
    here.resize(below.size() * 2);
    for (std::size_t i = 0; i < below.size(); ++i) {
      const complex_type y = below[i];
      const complex_type shifted{y.re + Real(1.0), y.im};
      if (to_double(abs(shifted)) <= tolerance)
        throw domain_error("degenerate preimage: a branch value squares to nearly zero");
      const complex_type s = principal_sqrt(shifted);
      const bool flip = (rng() & 1) != 0;
      here[2 * i] = flip ? -s : s;
      here[2 * i + 1] = flip ? s : -s;
    }
  }
  return tree;
}

template <typename Real>
cplx<Real> basic_preimage_tree<Real>::value(int level, std::uint32_t index) const {
  if (level < 0 || level > depth_) throw input_error("node level outside the tree");
  return values_[static_cast<std::size_t>(level)][index];
}

template <typename Real>
void basic_preimage_tree<Real>::swap_sibling_subtrees(const node_address& x) {
  const node_address y = x.sibling();
  for (int level = x.level(); level <= depth_; ++level) {
    const int shift = level - x.level();
    const std::uint64_t block = std::uint64_t{1} << shift;
    auto& row = values_[static_cast<std::size_t>(level)];
    const std::uint64_t xa = static_cast<std::uint64_t>(x.index()) << shift;
    const std::uint64_t ya = static_cast<std::uint64_t>(y.index()) << shift;
    for (std::uint64_t k = 0; k < block; ++k) std::swap(row[xa + k], row[ya + k]);
  }
}

namespace {

// Quotient of the two zetaprod products at (y, i): over all (s_1..s_i), the
// term with leading symbol a divided by the term with leading symbol b,
// accumulated factor by factor to keep magnitudes tame. The term address is
// y . t . s_1 . a . s_2 . a ... s_i . a.
template <typename Real>
cplx<Real> zetaprod_quotient(const basic_preimage_tree<Real>& tree, const node_address& y,
                             int i) {
  const int target_level = y.level() + 2 * i + 1;
  cplx<Real> q{Real(1.0), Real(0.0)};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << i); ++mask) {
    std::uint64_t suffix_a = 0;  // leading a
    std::uint64_t suffix_b = 1;  // leading b
    for (int k = 1; k <= i; ++k) {
      const std::uint64_t sk = (mask >> (i - k)) & 1u;
      suffix_a = ((suffix_a << 1 | sk) << 1);  // s_k then the fixed a
      suffix_b = ((suffix_b << 1 | sk) << 1);
    }
    const std::uint32_t base = y.index() << (2 * i + 1);
    const cplx<Real> num = tree.value(target_level, base | static_cast<std::uint32_t>(suffix_a));
    const cplx<Real> den = tree.value(target_level, base | static_cast<std::uint32_t>(suffix_b));
    q = q * (num / den);
  }
  return q;
}

}  // namespace

template <typename Real>
basic_preimage_tree<Real> canonical_label(basic_preimage_tree<Real> tree,
                                          const root_chain<Real>& chain) {
  const int depth = tree.depth();
  if ((depth + 1) / 2 > chain.m_max())
    throw input_error("root chain too short for this depth");
  tree.swap_log_.clear();

  for (int n = 3; n <= depth; ++n) {
    for (int level = (n % 2 == 1) ? 0 : 1; level <= n - 3; level += 2) {
      const int i = (n - level - 1) / 2;
      const cplx<Real> zeta = chain.zeta(i + 1);
      for (std::uint32_t yi = 0; yi < (std::uint32_t{1} << level); ++yi) {
        const node_address y(level, yi);
        const cplx<Real> q = zetaprod_quotient(tree, y, i);
        const double d_plus = to_double(abs(q - zeta));
        const double d_minus = to_double(abs(q + zeta));
        if (std::abs(d_plus - d_minus) <= 10.0 * tree.tolerance())
          throw precision_error("ambiguous sign decision while labeling; raise the working "
                                "precision or reduce the depth");
        if (d_minus < d_plus) {
          // y b a^(2i-1) a, at level n: flipping it flips the denominator sign.
          std::uint32_t idx = (y.index() << 1) | 1u;        // y b
          idx <<= 2 * i;                                    // then 2i copies of a
          const node_address target(n, idx);
          tree.swap_sibling_subtrees(target);
          tree.swap_log_.emplace_back(target, target.sibling());
        }
      }
    }
  }
  return tree;
}

template <typename Real>
double zetaprod_residual(const basic_preimage_tree<Real>& tree, const root_chain<Real>& chain,
                         const node_address& y, int i) {
  if (i < 0 || y.level() + 2 * i + 1 > tree.depth())
    throw input_error("zetaprod index i out of range for this node");
  return to_double(abs(zetaprod_quotient(tree, y, i) - chain.zeta(i + 1)));
}

template <typename Real>
double max_zetaprod_residual(const basic_preimage_tree<Real>& tree,
                             const root_chain<Real>& chain) {
  double worst = 0.0;
  for (int level = 0; level < tree.depth(); ++level) {
    for (int i = 0; level + 2 * i + 1 <= tree.depth(); ++i) {
      for (std::uint32_t yi = 0; yi < (std::uint32_t{1} << level); ++yi) {
        const double r = zetaprod_residual(tree, chain, node_address(level, yi), i);
        if (r > worst) worst = r;
      }
    }
  }
  return worst;
}

template <typename Real>
double max_sibling_square_residual(const basic_preimage_tree<Real>& tree) {
  double worst = 0.0;
  for (int level = 0; level + 2 <= tree.depth(); ++level) {
    for (std::uint32_t yi = 0; yi < (std::uint32_t{1} << level); ++yi) {
      const cplx<Real> y = tree.value(level, yi);
      const cplx<Real> a1 = tree.value(level + 2, 4 * yi);      // over child a
      const cplx<Real> a2 = tree.value(level + 2, 4 * yi + 2);  // over child b
      const cplx<Real> p = a1 * a2;
      const double r = to_double(abs(p * p + y));
      if (r > worst) worst = r;
    }
  }
  return worst;
}

std::size_t nrel_selection::bit_count(int m) {
  return (std::size_t{1} << (m + 2)) - 3;
}

nrel_selection nrel_selection::from_seed(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  nrel_selection sel;
  sel.bits.resize(bit_count(m));
  for (auto& b : sel.bits) b = static_cast<std::uint8_t>(rng() & 1);
  return sel;
}

template <typename Real>
nrel_report verify_nrel(const basic_preimage_tree<Real>& tree, const node_address& y, int m,
                        const nrel_selection& selection) {
  if (m < 0 || y.level() + 2 * m + 1 > tree.depth())
    throw input_error("nrel stage m out of range for this node");
  if (selection.bits.size() != nrel_selection::bit_count(m))
    throw input_error("nrel selection has the wrong number of choice bits");
  for (std::uint8_t b : selection.bits)
    if (b > 1) throw input_error("nrel selection bits must be 0 or 1");

  std::size_t cursor = 0;
  auto next_bit = [&]() -> std::uint32_t { return selection.bits[cursor++]; };

  const node_address alpha0 = y.child(next_bit() ? symbol::b : symbol::a);
  const node_address beta0 = alpha0.sibling();

  // Stage lists of selected nodes; each stage ascends two levels by picking
  // one grandchild over each child, alpha tree first then beta tree.
  std::vector<node_address> alphas{alpha0};
  std::vector<node_address> betas{beta0};
  std::vector<cplx<Real>> gamma_chain{tree.value(alpha0)};
  std::vector<cplx<Real>> delta_chain{tree.value(beta0)};

  for (int stage = 1; stage <= m; ++stage) {
    for (auto* list : {&alphas, &betas}) {
      std::vector<node_address> next;
      next.reserve(list->size() * 2);
      for (const node_address& v : *list) {
        next.push_back(v.child(symbol::a).child(next_bit() ? symbol::b : symbol::a));
        next.push_back(v.child(symbol::b).child(next_bit() ? symbol::b : symbol::a));
      }
      *list = std::move(next);
    }
    cplx<Real> gamma{Real(1.0), Real(0.0)};
    for (const node_address& v : alphas) gamma = gamma * tree.value(v);
    cplx<Real> delta{Real(1.0), Real(0.0)};
    for (const node_address& v : betas) delta = delta * tree.value(v);
    gamma_chain.push_back(gamma);
    delta_chain.push_back(delta);
  }

  auto pow2k = [](cplx<Real> z, int k) {
    for (int t = 0; t < k; ++t) z = z * z;
    return z;
  };

  nrel_report rep;
  rep.m = m;
  rep.gamma_power_residual = to_double(abs(pow2k(-gamma_chain.back(), m) - delta_chain.front()));
  rep.delta_power_residual = to_double(abs(pow2k(-delta_chain.back(), m) - gamma_chain.front()));
  const cplx<Real> ratio = gamma_chain.back() / delta_chain.back();
  rep.primitivity_residual =
      to_double(abs(pow2k(ratio, m) + cplx<Real>{Real(1.0), Real(0.0)}));
  for (int stage = 1; stage <= m; ++stage) {
    const cplx<Real> sq = gamma_chain[stage] * gamma_chain[stage];
    const cplx<Real> want =
        stage == 1 ? -gamma_chain[stage - 1] : gamma_chain[stage - 1];
    const cplx<Real> sqd = delta_chain[stage] * delta_chain[stage];
    const cplx<Real> wantd =
        stage == 1 ? -delta_chain[stage - 1] : delta_chain[stage - 1];
    rep.chain_residual =
        std::max({rep.chain_residual, to_double(abs(sq - want)), to_double(abs(sqd - wantd))});
  }
  rep.max_residual = std::max({rep.gamma_power_residual, rep.delta_power_residual,
                               rep.primitivity_residual, rep.chain_residual});
  return rep;
}

template struct cplx<double>;
template struct cplx<detail::ddouble>;
template cplx<double> principal_sqrt(cplx<double>);
template cplx<detail::ddouble> principal_sqrt(cplx<detail::ddouble>);
template class root_chain<double>;
template class root_chain<detail::ddouble>;
template class basic_preimage_tree<double>;
template class basic_preimage_tree<detail::ddouble>;
template basic_preimage_tree<double> canonical_label(basic_preimage_tree<double>,
                                                     const root_chain<double>&);
template basic_preimage_tree<detail::ddouble> canonical_label(
    basic_preimage_tree<detail::ddouble>, const root_chain<detail::ddouble>&);
template double zetaprod_residual(const basic_preimage_tree<double>&, const root_chain<double>&,
                                  const node_address&, int);
template double zetaprod_residual(const basic_preimage_tree<detail::ddouble>&,
                                  const root_chain<detail::ddouble>&, const node_address&, int);
template double max_zetaprod_residual(const basic_preimage_tree<double>&,
                                      const root_chain<double>&);
template double max_zetaprod_residual(const basic_preimage_tree<detail::ddouble>&,
                                      const root_chain<detail::ddouble>&);
template double max_sibling_square_residual(const basic_preimage_tree<double>&);
template double max_sibling_square_residual(const basic_preimage_tree<detail::ddouble>&);
template nrel_report verify_nrel(const basic_preimage_tree<double>&, const node_address&, int,
                                 const nrel_selection&);
template nrel_report verify_nrel(const basic_preimage_tree<detail::ddouble>&, const node_address&,
                                 int, const nrel_selection&);

}  // namespace basilica
