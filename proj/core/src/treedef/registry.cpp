#include "btrl/treedef/registry.hpp"

#include <stdexcept>

#include "btrl/bt/composites.hpp"
#include "btrl/bt/decorators.hpp"

namespace btrl::treedef {
namespace {

template <typename NodeType>
bt::NodePtr make_plain_composite(const NodeSpec& spec,
                                 std::vector<bt::NodePtr> children) {
  auto node = std::make_unique<NodeType>(spec.id);
  for (auto& child : children) node->add_child(std::move(child));
  return node;
}

bt::NodePtr make_parallel(const NodeSpec& spec,
                          std::vector<bt::NodePtr> children) {
  const auto success = require_int_property(spec, "success_threshold");
  const auto failure = require_int_property(spec, "failure_threshold");
  auto node = std::make_unique<bt::ParallelNode>(
      static_cast<int>(success), static_cast<int>(failure), spec.id);
  for (auto& child : children) node->add_child(std::move(child));
  return node;
}

bt::NodePtr make_inverter(const NodeSpec& spec,
                          std::vector<bt::NodePtr> children) {
  auto node = std::make_unique<bt::InverterNode>(spec.id);
  node->set_child(std::move(children.front()));
  return node;
}

bt::NodePtr make_repeater(const NodeSpec& spec,
                          std::vector<bt::NodePtr> children) {
  const auto count = require_int_property(spec, "count");
  auto node =
      std::make_unique<bt::RepeaterNode>(static_cast<int>(count), spec.id);
  node->set_child(std::move(children.front()));
  return node;
}

bt::NodePtr build_node(const TreeDocument& doc, const NodeRegistry& registry,
                       const std::string& id) {
  const NodeSpec& spec = doc.node(id);
  const KindInfo* info = registry.find(spec.kind);
  if (info == nullptr) {
    throw TreeDefError(TreeDefErrorCode::kUnknownKind,
                       "node '" + id + "' has unregistered kind '" +
                           spec.kind + "'");
  }

  // The document's child form has to agree with what the kind is.
  switch (info->category) {
    case bt::NodeCategory::COMPOSITE:
      if (!spec.has_children_field) {
        throw TreeDefError(TreeDefErrorCode::kArityViolation,
                           "composite node '" + id +
                               "' needs a 'children' list");
      }
      break;
    case bt::NodeCategory::DECORATOR:
      if (!spec.child.has_value()) {
        throw TreeDefError(TreeDefErrorCode::kArityViolation,
                           "decorator node '" + id + "' needs a 'child'");
      }
      break;
    case bt::NodeCategory::ACTION:
    case bt::NodeCategory::CONDITION:
      if (spec.has_children_field || spec.child.has_value()) {
        throw TreeDefError(TreeDefErrorCode::kArityViolation,
                           "leaf node '" + id + "' cannot have children");
      }
      break;
  }

  std::vector<bt::NodePtr> children;
  for (const std::string& child_id : spec.children) {
    children.push_back(build_node(doc, registry, child_id));
  }
  if (spec.child) {
    children.push_back(build_node(doc, registry, *spec.child));
  }

  bt::NodePtr node = info->make(spec, std::move(children));
  if (!node) {
    throw std::logic_error("factory for kind '" + spec.kind +
                           "' returned no node");
  }
  return node;
}

}  // namespace

NodeRegistry NodeRegistry::with_core_kinds() {
  NodeRegistry registry;
  registry.add("Sequence", {bt::NodeCategory::COMPOSITE,
                            make_plain_composite<bt::SequenceNode>});
  registry.add("Priority", {bt::NodeCategory::COMPOSITE,
                            make_plain_composite<bt::PriorityNode>});
  registry.add("MemSequence", {bt::NodeCategory::COMPOSITE,
                               make_plain_composite<bt::MemSequenceNode>});
  registry.add("MemPriority", {bt::NodeCategory::COMPOSITE,
                               make_plain_composite<bt::MemPriorityNode>});
  registry.add("Parallel", {bt::NodeCategory::COMPOSITE, make_parallel});
  registry.add("Inverter", {bt::NodeCategory::DECORATOR, make_inverter});
  registry.add("Repeater", {bt::NodeCategory::DECORATOR, make_repeater});
  return registry;
}

void NodeRegistry::add(std::string kind, KindInfo info) {
  if (!info.make) {
    throw std::invalid_argument("kind '" + kind + "' needs a factory");
  }
  kinds_.insert_or_assign(std::move(kind), std::move(info));
}

bool NodeRegistry::contains(const std::string& kind) const {
  return kinds_.find(kind) != kinds_.end();
}

const KindInfo* NodeRegistry::find(const std::string& kind) const {
  auto it = kinds_.find(kind);
  return it == kinds_.end() ? nullptr : &it->second;
}

bt::BehaviorTree build_tree(const TreeDocument& doc,
                            const NodeRegistry& registry) {
  return bt::BehaviorTree(build_node(doc, registry, doc.root_id));
}

std::int64_t require_int_property(const NodeSpec& spec,
                                  const std::string& key) {
  auto it = spec.properties.find(key);
  if (it == spec.properties.end()) {
    throw TreeDefError(TreeDefErrorCode::kMissingProperty,
                       "node '" + spec.id + "' needs property '" + key + "'");
  }
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
  throw TreeDefError(TreeDefErrorCode::kPropertyTypeMismatch,
                     "node '" + spec.id + "' property '" + key +
                         "' must be an integer");
}

double get_double_property(const NodeSpec& spec, const std::string& key,
                           double fallback) {
  auto it = spec.properties.find(key);
  if (it == spec.properties.end()) return fallback;
  if (const auto* d = std::get_if<double>(&it->second)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) {
    return static_cast<double>(*i);
  }
  throw TreeDefError(TreeDefErrorCode::kPropertyTypeMismatch,
                     "node '" + spec.id + "' property '" + key +
                         "' must be a number");
}

std::string require_string_property(const NodeSpec& spec,
                                    const std::string& key) {
  auto it = spec.properties.find(key);
  if (it == spec.properties.end()) {
    throw TreeDefError(TreeDefErrorCode::kMissingProperty,
                       "node '" + spec.id + "' needs property '" + key + "'");
  }
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw TreeDefError(TreeDefErrorCode::kPropertyTypeMismatch,
                     "node '" + spec.id + "' property '" + key +
                         "' must be a string");
}

std::string get_string_property(const NodeSpec& spec, const std::string& key,
                                const std::string& fallback) {
  auto it = spec.properties.find(key);
  if (it == spec.properties.end()) return fallback;
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw TreeDefError(TreeDefErrorCode::kPropertyTypeMismatch,
                     "node '" + spec.id + "' property '" + key +
                         "' must be a string");
}

}  // namespace btrl::treedef
