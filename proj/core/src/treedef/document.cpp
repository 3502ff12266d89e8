#include "btrl/treedef/document.hpp"

namespace btrl::treedef {

const NodeSpec& TreeDocument::node(const std::string& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) {
    throw TreeDefError(TreeDefErrorCode::kDanglingReference,
                       "no node with id '" + id + "'");
  }
  return it->second;
}

std::string_view to_string(TreeDefErrorCode code) noexcept {
  switch (code) {
    case TreeDefErrorCode::kSyntaxError: return "syntax_error";
    case TreeDefErrorCode::kDocumentShape: return "document_shape";
    case TreeDefErrorCode::kRootMissing: return "root_missing";
    case TreeDefErrorCode::kDanglingReference: return "dangling_reference";
    case TreeDefErrorCode::kMultiParent: return "multi_parent";
    case TreeDefErrorCode::kCycle: return "cycle";
    case TreeDefErrorCode::kUnreachableNode: return "unreachable_node";
    case TreeDefErrorCode::kArityViolation: return "arity_violation";
    case TreeDefErrorCode::kUnknownKind: return "unknown_kind";
    case TreeDefErrorCode::kMissingProperty: return "missing_property";
    case TreeDefErrorCode::kPropertyTypeMismatch:
      return "property_type_mismatch";
  }
  return "unknown";
}

TreeDefError::TreeDefError(TreeDefErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace btrl::treedef
