#include "basilica/json_writer.hpp"

#include <cmath>
#include <cstdio>

#include "basilica/errors.hpp"

namespace basilica {

json& json::set(std::string key, json v) {
  auto* obj = std::get_if<object_type>(&value_);
  if (!obj) throw input_error("json::set on a non-object");
  obj->emplace_back(std::move(key), std::move(v));
  return *this;
}

json& json::push(json v) {
  auto* arr = std::get_if<array_type>(&value_);
  if (!arr) throw input_error("json::push on a non-array");
  arr->push_back(std::move(v));
  return *this;
}

namespace {

void escape_to(std::string& out, const std::string& s) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void newline_indent(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out.push_back('\n');
  out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void json::write(std::string& out, int indent, int depth) const {
  struct visitor {
    std::string& out;
    int indent;
    int depth;
    const json* self;

    void operator()(std::nullptr_t) const { out += "null"; }
    void operator()(bool b) const { out += b ? "true" : "false"; }
    void operator()(std::int64_t v) const { out += std::to_string(v); }
    void operator()(std::uint64_t v) const { out += std::to_string(v); }
    void operator()(double v) const {
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
    }
    void operator()(const std::string& s) const { escape_to(out, s); }
    void operator()(const array_type& arr) const {
      if (arr.empty()) {
        out += "[]";
        return;
      }
      out.push_back('[');
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out.push_back(',');
        newline_indent(out, indent, depth + 1);
        arr[i].write(out, indent, depth + 1);
      }
      newline_indent(out, indent, depth);
      out.push_back(']');
    }
    void operator()(const object_type& obj) const {
      if (obj.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      for (std::size_t i = 0; i < obj.size(); ++i) {
        if (i) out.push_back(',');
        newline_indent(out, indent, depth + 1);
        escape_to(out, obj[i].first);
        out.push_back(':');
        if (indent >= 0) out.push_back(' ');
        obj[i].second.write(out, indent, depth + 1);
      }
      newline_indent(out, indent, depth);
      out.push_back('}');
    }
  };
  std::visit(visitor{out, indent, depth, this}, value_);
}

std::string json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

}  // namespace basilica
