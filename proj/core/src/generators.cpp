#include "basilica/groups.hpp"

#include "basilica/errors.hpp"

namespace basilica {

generator_name parse_generator_name(std::string_view name) {
  if (name == "alpha") return generator_name::alpha;
  if (name == "beta") return generator_name::beta;
  if (name == "epsilon") return generator_name::epsilon;
  if (name == "theta") return generator_name::theta;
  if (name == "lambda") return generator_name::lambda;
  throw input_error("unknown generator name: " + std::string(name));
}

std::string to_string(generator_name g) {
  switch (g) {
    case generator_name::alpha: return "alpha";
    case generator_name::beta: return "beta";
    case generator_name::epsilon: return "epsilon";
    case generator_name::theta: return "theta";
    case generator_name::lambda: return "lambda";
  }
  throw input_error("unknown generator");
}

namespace {

// Parity 1 exactly at all-b labels whose length has the given parity.
tree_aut all_b_levels(int depth, int level_mod_2) {
  tree_aut::builder out(depth);
  for (int level = level_mod_2; level < depth; level += 2)
    out.set_par(level, (std::uint32_t{1} << level) - 1, true);
  return std::move(out).build();
}

tree_aut make_epsilon(int depth) {
  tree_aut::builder out(depth);
  for (int level = 0; level < depth; ++level)
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << level); ++i) out.set_par(level, i, true);
  return std::move(out).build();
}

tree_aut make_theta(int depth) {
  tree_aut::builder out(depth);
  // Levels 0 and 1 are zero; from there Par at x s t depends on (s, t) and on
  // Par at the grandparent x.
  for (int level = 2; level < depth; ++level) {
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << level); ++i) {
      const std::uint32_t s = (i >> 1) & 1u;
      const std::uint32_t t = i & 1u;
      bool value = false;
      if (s == 1u) value = (t == 0u) ? true : out.par(level - 2, i >> 2);
      out.set_par(level, i, value);
    }
  }
  return std::move(out).build();
}

tree_aut make_lambda(int depth) {
  if (depth < 3 || depth % 2 == 0)
    throw input_error("lambda is defined for odd depth n >= 3");
  const int j = (depth + 1) / 2;
  const tree_aut beta = make_generator(generator_name::beta, depth - 1);
  return subtree_pair(identity_aut(depth - 1), power(beta, std::uint64_t{1} << (j - 2)));
}

}  // namespace

tree_aut identity_aut(int depth) { return tree_aut(depth); }

tree_aut make_generator(generator_name g, int depth) {
  switch (g) {
    case generator_name::alpha: return all_b_levels(depth, 0);
    case generator_name::beta: return all_b_levels(depth, 1);
    case generator_name::epsilon: return make_epsilon(depth);
    case generator_name::theta: return make_theta(depth);
    case generator_name::lambda: return make_lambda(depth);
  }
  throw input_error("unknown generator");
}

}  // namespace basilica
