#include "btrl/bt/tree.hpp"

#include <stdexcept>

namespace btrl::bt {
namespace {

// Walk depth-first in child order so ids match document order.
void index_subtree(Node& node, std::vector<Node*>& index) {
  node.validate();
  index.push_back(&node);
  for (const NodePtr& child : node.children()) {
    index_subtree(*child, index);
  }
}

}  // namespace

BehaviorTree::BehaviorTree(NodePtr root_child)
    : root_child_(std::move(root_child)) {
  if (!root_child_) {
    throw std::invalid_argument("tree root must have exactly one child");
  }
  index_subtree(*root_child_, index_);
  for (std::size_t i = 0; i < index_.size(); ++i) {
    index_[i]->id_ = static_cast<NodeId>(i + 1);
  }
}

NodeStatus BehaviorTree::tick(TickContext& ctx) {
  ++ctx.tick_counter;
  return root_child_->tick(ctx);
}

Node* BehaviorTree::node(NodeId id) {
  if (id == 0 || id > index_.size()) return nullptr;
  return index_[id - 1];
}

const Node* BehaviorTree::node(NodeId id) const {
  if (id == 0 || id > index_.size()) return nullptr;
  return index_[id - 1];
}

Node* BehaviorTree::find_by_name(std::string_view name) {
  for (Node* n : index_) {
    if (n->name() == name) return n;
  }
  return nullptr;
}

void BehaviorTree::for_each(const std::function<void(Node&)>& fn) {
  for (Node* n : index_) fn(*n);
}

}  // namespace btrl::bt
