#ifndef BASILICA_JSON_WRITER_HPP_
#define BASILICA_JSON_WRITER_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace basilica {

/// A small order-preserving JSON value for canonical, reproducible output:
/// object keys keep insertion order and every floating-point number prints
/// with 17 significant digits, so identical runs emit identical bytes.
class json {
 public:
  json() : value_(nullptr) {}
  json(std::nullptr_t) : value_(nullptr) {}
  json(bool b) : value_(b) {}
  json(int v) : value_(static_cast<std::int64_t>(v)) {}
  json(std::int64_t v) : value_(v) {}
  json(std::uint64_t v) : value_(v) {}
  json(double v) : value_(v) {}
  json(const char* s) : value_(std::string(s)) {}
  json(std::string s) : value_(std::move(s)) {}

  static json object() {
    json j;
    j.value_ = object_type{};
    return j;
  }
  static json array() {
    json j;
    j.value_ = array_type{};
    return j;
  }

  json& set(std::string key, json v);  // object insert (keeps order)
  json& push(json v);                  // array append

  /// indent < 0: compact one-line form; otherwise pretty with that many
  /// spaces per level. Both are deterministic.
  std::string dump(int indent = 2) const;

 private:
  using array_type = std::vector<json>;
  using object_type = std::vector<std::pair<std::string, json>>;

  void write(std::string& out, int indent, int depth) const;

  std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double, std::string,
               array_type, object_type>
      value_;
};

}  // namespace basilica

#endif  // BASILICA_JSON_WRITER_HPP_
