#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "btrl/treedef/document.hpp"

namespace btrl::treedef {
namespace {

using nlohmann::json;

[[noreturn]] void shape_error(const std::string& message) {
  throw TreeDefError(TreeDefErrorCode::kDocumentShape, message);
}

std::string require_string(const json& obj, const char* field,
                           const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    shape_error(where + " is missing required field '" + field + "'");
  }
  if (!it->is_string()) {
    shape_error(where + " field '" + field + "' must be a string");
  }
  return it->get<std::string>();
}

PropertyValue parse_property(const json& value, const std::string& where) {
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) {
      shape_error(where + " holds an integer too large to represent");
    }
    return static_cast<std::int64_t>(u);
  }
  if (value.is_number_float()) return value.get<double>();
  if (value.is_string()) return value.get<std::string>();
  shape_error(where + " must be a boolean, number, or string");
}

NodeSpec parse_node(const std::string& id, const json& obj) {
  const std::string where = "node '" + id + "'";
  if (!obj.is_object()) shape_error(where + " must be an object");

  NodeSpec spec;
  spec.id = id;
  if (obj.contains("id")) {
    const std::string declared = require_string(obj, "id", where);
    if (declared != id) {
      shape_error(where + " declares mismatching id '" + declared + "'");
    }
  }
  spec.kind = require_string(obj, "kind", where);
  if (spec.kind.empty()) shape_error(where + " has an empty kind");
  if (obj.contains("title")) {
    spec.title = require_string(obj, "title", where);
  }

  if (auto it = obj.find("children"); it != obj.end()) {
    if (!it->is_array()) {
      shape_error(where + " field 'children' must be an array");
    }
    spec.has_children_field = true;
    for (const json& entry : *it) {
      if (!entry.is_string()) {
        shape_error(where + " children must be node id strings");
      }
      spec.children.push_back(entry.get<std::string>());
    }
  }
  if (obj.contains("child")) {
    spec.child = require_string(obj, "child", where);
  }

  if (auto it = obj.find("properties"); it != obj.end()) {
    if (!it->is_object()) {
      shape_error(where + " field 'properties' must be an object");
    }
    for (const auto& [key, value] : it->items()) {
      spec.properties.emplace(
          key, parse_property(value, where + " property '" + key + "'"));
    }
  }

  for (const auto& [key, value] : obj.items()) {
    if (key != "id" && key != "kind" && key != "title" && key != "children" &&
        key != "child" && key != "properties") {
      shape_error(where + " has unknown field '" + key + "'");
    }
  }
  return spec;
}

void check_forms(const NodeSpec& spec) {
  if (spec.has_children_field && spec.child.has_value()) {
    throw TreeDefError(TreeDefErrorCode::kArityViolation,
                       "node '" + spec.id +
                           "' mixes the 'children' and 'child' forms");
  }
  if (spec.has_children_field && spec.children.empty()) {
    throw TreeDefError(
        TreeDefErrorCode::kArityViolation,
        "node '" + spec.id + "' declares an empty children list");
  }
}

void check_structure(const TreeDocument& doc) {
  if (doc.nodes.find(doc.root_id) == doc.nodes.end()) {
    throw TreeDefError(TreeDefErrorCode::kRootMissing,
                       "root id '" + doc.root_id + "' names no node");
  }

  // Every reference must resolve, and no node may have two parents.
  std::map<std::string, std::string> parent_of;
  for (const auto& [id, spec] : doc.nodes) {
    std::vector<std::string> refs = spec.children;
    if (spec.child) refs.push_back(*spec.child);
    for (const std::string& ref : refs) {
      if (doc.nodes.find(ref) == doc.nodes.end()) {
        throw TreeDefError(TreeDefErrorCode::kDanglingReference,
                           "node '" + id + "' references missing node '" +
                               ref + "'");
      }
      auto [it, inserted] = parent_of.emplace(ref, id);
      if (!inserted) {
        throw TreeDefError(TreeDefErrorCode::kMultiParent,
                           "node '" + ref + "' has parents '" + it->second +
                               "' and '" + id + "'");
      }
    }
  }

  if (parent_of.find(doc.root_id) != parent_of.end()) {
    throw TreeDefError(TreeDefErrorCode::kCycle,
                       "root '" + doc.root_id +
                           "' is referenced as a child, closing a cycle");
  }

  // With single parents and an unparented root, any unreached node is
  // either in a detached component or a cycle; both are rejected here.
  std::set<std::string> reached;
  std::vector<const std::string*> stack{&doc.root_id};
  while (!stack.empty()) {
    const std::string& id = *stack.back();
    stack.pop_back();
    if (!reached.insert(id).second) continue;
    const NodeSpec& spec = doc.nodes.at(id);
    for (const std::string& ref : spec.children) stack.push_back(&ref);
    if (spec.child) stack.push_back(&*spec.child);
  }
  for (const auto& [id, spec] : doc.nodes) {
    if (reached.find(id) == reached.end()) {
      throw TreeDefError(TreeDefErrorCode::kUnreachableNode,
                         "node '" + id + "' is not reachable from the root");
    }
  }
}

}  // namespace

TreeDocument parse_tree_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw TreeDefError(TreeDefErrorCode::kSyntaxError,
                       std::string("not valid JSON at byte ") +
                           std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) shape_error("document must be a JSON object");

  TreeDocument doc;
  if (root.contains("title")) {
    doc.title = require_string(root, "title", "document");
  }
  doc.root_id = require_string(root, "root", "document");

  auto nodes_it = root.find("nodes");
  if (nodes_it == root.end() || !nodes_it->is_object()) {
    shape_error("document needs a 'nodes' object");
  }
  for (const auto& [id, value] : nodes_it->items()) {
    if (id.empty()) shape_error("node ids must be non-empty");
    NodeSpec spec = parse_node(id, value);
    check_forms(spec);
    doc.nodes.emplace(id, std::move(spec));
  }

  for (const auto& [key, value] : root.items()) {
    if (key != "title" && key != "root" && key != "nodes") {
      shape_error("document has unknown field '" + key + "'");
    }
  }

  check_structure(doc);
  return doc;
}

TreeDocument load_tree_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open tree file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tree_document(buffer.str());
}

}  // namespace btrl::treedef
