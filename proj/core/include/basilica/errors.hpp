#ifndef BASILICA_ERRORS_HPP_
#define BASILICA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace basilica {

// Error categories, matching the CLI exit-code contract:
//   input/domain -> 3, resource -> 4, precision -> 5.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range arguments (bad depth, address beyond the tree, ...).
struct input_error : error {
  using error::error;
};

// Arguments outside the mathematical domain of an operation (x0 in {0, -1}, ...).
struct domain_error : input_error {
  using input_error::input_error;
};

// A computation would exceed its stated bounds (sweep beyond depth 5,
// closure budget, factor outside the 64-bit factorization range).
struct resource_error : error {
  std::uint64_t partial_count = 0;

  explicit resource_error(const std::string& what, std::uint64_t partial = 0)
      : error(what), partial_count(partial) {}
};

// The requested precision is not available (2-adic precision bound,
// ambiguous sign decision in floating point).
struct precision_error : error {
  using error::error;
};

}  // namespace basilica

#endif  // BASILICA_ERRORS_HPP_
