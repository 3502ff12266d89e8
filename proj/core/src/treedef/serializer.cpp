#include <charconv>
#include <sstream>
#include <stdexcept>

#include "btrl/treedef/document.hpp"

namespace btrl::treedef {
namespace {

void append_escaped(std::string& out, std::string_view text) {
  out += '"';
  for (unsigned char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          constexpr char hex[] = "0123456789abcdef";
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 0xf];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

void append_number(std::string& out, double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  const std::string_view text(buf, static_cast<std::size_t>(end - buf));
  out += text;
  // Keep the value a JSON float so the type survives a round trip.
  if (text.find('.') == std::string_view::npos &&
      text.find('e') == std::string_view::npos &&
      text.find('E') == std::string_view::npos) {
    out += ".0";
  }
}

void append_property(std::string& out, const PropertyValue& value) {
  if (const auto* b = std::get_if<bool>(&value)) {
    out += *b ? "true" : "false";
  } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
    out += std::to_string(*i);
  } else if (const auto* d = std::get_if<double>(&value)) {
    append_number(out, *d);
  } else {
    append_escaped(out, std::get<std::string>(value));
  }
}

void append_node(std::string& out, const NodeSpec& spec) {
  out += "      \"id\": ";
  append_escaped(out, spec.id);
  out += ",\n      \"kind\": ";
  append_escaped(out, spec.kind);
  if (!spec.title.empty()) {
    out += ",\n      \"title\": ";
    append_escaped(out, spec.title);
  }
  if (spec.has_children_field) {
    out += ",\n      \"children\": [";
    for (std::size_t i = 0; i < spec.children.size(); ++i) {
      if (i > 0) out += ", ";
      append_escaped(out, spec.children[i]);
    }
    out += ']';
  }
  if (spec.child) {
    out += ",\n      \"child\": ";
    append_escaped(out, *spec.child);
  }
  if (!spec.properties.empty()) {
    out += ",\n      \"properties\": {";
    bool first = true;
    for (const auto& [key, value] : spec.properties) {
      if (!first) out += ", ";
      first = false;
      append_escaped(out, key);
      out += ": ";
      append_property(out, value);
    }
    out += '}';
  }
}

}  // namespace

std::string serialize_tree_document(const TreeDocument& doc) {
  std::string out;
  out += "{\n";
  if (!doc.title.empty()) {
    out += "  \"title\": ";
    append_escaped(out, doc.title);
    out += ",\n";
  }
  out += "  \"root\": ";
  append_escaped(out, doc.root_id);
  out += ",\n  \"nodes\": {";
  bool first = true;
  for (const auto& [id, spec] : doc.nodes) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    ";
    append_escaped(out, id);
    out += ": {\n";
    append_node(out, spec);
    out += "\n    }";
  }
  out += "\n  }\n}\n";
  return out;
}

}  // namespace btrl::treedef
