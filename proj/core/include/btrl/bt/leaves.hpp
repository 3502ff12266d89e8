#pragma once

#include <functional>

#include "btrl/bt/node.hpp"

namespace btrl::bt {

// Leaf that performs work against the world. The callback may return any
// status; exceptions become ERROR via the Node::tick wrapper.
class ActionLeaf final : public Node {
 public:
  using Callback = std::function<NodeStatus(TickContext&)>;

  ActionLeaf(std::string kind, Callback callback, std::string name = {});

 protected:
  NodeStatus do_tick(TickContext& ctx) override;

 private:
  Callback callback_;
};

// Leaf that evaluates a predicate: SUCCESS when it holds, FAILURE when it
// does not. Conditions never report RUNNING.
class ConditionLeaf final : public Node {
 public:
  using Predicate = std::function<bool(TickContext&)>;

  ConditionLeaf(std::string kind, Predicate predicate, std::string name = {});

 protected:
  NodeStatus do_tick(TickContext& ctx) override;

 private:
  Predicate predicate_;
};

}  // namespace btrl::bt
