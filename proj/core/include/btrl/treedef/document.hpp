#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace btrl::treedef {

using PropertyValue = std::variant<bool, std::int64_t, double, std::string>;

// One node entry from a tree document. Composite form lists `children`,
// decorator form names a single `child`, leaves have neither; the flag
// distinguishes an explicit empty children list (invalid) from absence.
struct NodeSpec {
  std::string id;
  std::string kind;
  std::string title;  // optional display label, empty when absent
  std::vector<std::string> children;
  bool has_children_field = false;
  std::optional<std::string> child;
  std::map<std::string, PropertyValue> properties;

  bool operator==(const NodeSpec&) const = default;
};

struct TreeDocument {
  std::string title;
  std::string root_id;
  std::map<std::string, NodeSpec> nodes;  // keyed by node id

  const NodeSpec& node(const std::string& id) const;

  bool operator==(const TreeDocument&) const = default;
};

enum class TreeDefErrorCode {
  kSyntaxError,           // input is not well-formed JSON
  kDocumentShape,         // required field missing or of the wrong type
  kRootMissing,           // root id does not name a node
  kDanglingReference,     // a child id does not name a node
  kMultiParent,           // a node is referenced by more than one parent
  kCycle,                 // the root is its own descendant
  kUnreachableNode,       // a node is not reachable from the root
  kArityViolation,        // child fields inconsistent with the node's form
  kUnknownKind,           // kind not present in the registry
  kMissingProperty,       // a required property is absent
  kPropertyTypeMismatch,  // a property holds the wrong type
};

std::string_view to_string(TreeDefErrorCode code) noexcept;

class TreeDefError : public std::runtime_error {
 public:
  TreeDefError(TreeDefErrorCode code, const std::string& message);
  TreeDefErrorCode code() const { return code_; }

 private:
  TreeDefErrorCode code_;
};

// Parses and structurally validates a tree document. Guarantees on return:
// the root exists, every reference resolves, every node has exactly one
// parent except the root which has none, all nodes are reachable, and each
// node's child fields are consistent (not both forms, no empty child list).
// Kind names and properties are validated later, when the tree is built
// against a registry.
TreeDocument parse_tree_document(std::string_view text);

// Canonical form: stable key order, nodes sorted by id, two-space indent,
// shortest round-trip number formatting. parse(serialize(doc)) == doc, and
// serialize(parse(text)) == text whenever text is already canonical.
std::string serialize_tree_document(const TreeDocument& doc);

TreeDocument load_tree_file(const std::string& path);

}  // namespace btrl::treedef
