#pragma once

#include "btrl/bt/node.hpp"

namespace btrl::bt {

class DecoratorNode : public Node {
 public:
  void set_child(NodePtr child);
  Node& child() { return *child_; }
  std::span<const NodePtr> children() const override;
  void validate() const override;
  void abandon(TickContext& ctx) override;

 protected:
  using Node::Node;
  std::span<NodePtr> mutable_children() override;

  NodePtr child_;
};

// Swaps SUCCESS and FAILURE; RUNNING and ERROR pass through untouched.
class InverterNode final : public DecoratorNode {
 public:
  explicit InverterNode(std::string name = {});

 protected:
  NodeStatus do_tick(TickContext& ctx) override;
};

// Runs its child to a terminal status `count` times, reporting RUNNING in
// between, then returns the final terminal status. ERROR aborts and resets
// the completion counter.
class RepeaterNode final : public DecoratorNode {
 public:
  explicit RepeaterNode(int count, std::string name = {});
  void abandon(TickContext& ctx) override;
  void validate() const override;

  int count() const { return count_; }

 protected:
  NodeStatus do_tick(TickContext& ctx) override;

 private:
  int count_;
};

}  // namespace btrl::bt
