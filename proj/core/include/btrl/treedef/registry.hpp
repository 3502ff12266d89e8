#pragma once

#include <functional>
#include <map>
#include <string>

#include "btrl/bt/node.hpp"
#include "btrl/bt/tree.hpp"
#include "btrl/treedef/document.hpp"

namespace btrl::treedef {

// One buildable node kind: its category drives arity checking against the
// document, the factory turns a node spec plus already-built children into
// a live node. Factories receive decorator children as a one-element vector.
struct KindInfo {
  bt::NodeCategory category;
  std::function<bt::NodePtr(const NodeSpec&, std::vector<bt::NodePtr>)> make;
};

class NodeRegistry {
 public:
  // Registry with the built-in kinds: Sequence, Priority, MemSequence,
  // MemPriority, Parallel, Inverter, Repeater.
  static NodeRegistry with_core_kinds();

  void add(std::string kind, KindInfo info);
  bool contains(const std::string& kind) const;
  const KindInfo* find(const std::string& kind) const;

 private:
  std::map<std::string, KindInfo> kinds_;
};

// Instantiates the document against the registry. Throws TreeDefError with
// kUnknownKind for unregistered kinds, kArityViolation when a node's child
// form does not match its kind's category, and property errors surfaced by
// factories.
bt::BehaviorTree build_tree(const TreeDocument& doc,
                            const NodeRegistry& registry);

// Property lookup helpers for factories.
std::int64_t require_int_property(const NodeSpec& spec, const std::string& key);
double get_double_property(const NodeSpec& spec, const std::string& key,
                           double fallback);
std::string require_string_property(const NodeSpec& spec,
                                    const std::string& key);
std::string get_string_property(const NodeSpec& spec, const std::string& key,
                                const std::string& fallback);

}  // namespace btrl::treedef
