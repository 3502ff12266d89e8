#pragma once

#include <functional>

#include "btrl/bt/node.hpp"

namespace btrl::bt {

// Owns a validated tree. The conceptual root has exactly one child (the
// node passed in); ticking the tree ticks that child. Construction walks
// the tree once, assigns depth-first ids starting at 1, checks per-node
// arity, and builds an id index.
class BehaviorTree {
 public:
  explicit BehaviorTree(NodePtr root_child);

  BehaviorTree(BehaviorTree&&) = default;
  BehaviorTree& operator=(BehaviorTree&&) = default;

  NodeStatus tick(TickContext& ctx);

  Node& root_child() { return *root_child_; }
  const Node& root_child() const { return *root_child_; }

  std::size_t node_count() const { return index_.size(); }
  Node* node(NodeId id);
  const Node* node(NodeId id) const;
  Node* find_by_name(std::string_view name);

  void for_each(const std::function<void(Node&)>& fn);

 private:
  NodePtr root_child_;
  std::vector<Node*> index_;  // position id-1 holds the node
};

}  // namespace btrl::bt
