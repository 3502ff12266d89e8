#pragma once

#include "btrl/bt/node.hpp"

namespace btrl::bt {

class CompositeNode : public Node {
 public:
  void add_child(NodePtr child);
  std::span<const NodePtr> children() const override;
  void validate() const override;

 protected:
  using Node::Node;
  std::span<NodePtr> mutable_children() override;

  // Shared helper for Sequence/Priority: a child that was RUNNING on the
  // previous tick but was cut off by an earlier sibling this tick gets an
  // abandon() call so it can release its state.
  void abandon_stale_running_child(TickContext& ctx, std::size_t last_ticked);
  void remember_running_child(TickContext& ctx, std::size_t index);
  void forget_running_child(TickContext& ctx);

  std::vector<NodePtr> children_;
};

// Ticks children left to right, stops at the first child that does not
// SUCCEED and returns that status. Re-evaluates from the first child on
// every tick.
class SequenceNode final : public CompositeNode {
 public:
  explicit SequenceNode(std::string name = {});
  void abandon(TickContext& ctx) override;

 protected:
  NodeStatus do_tick(TickContext& ctx) override;
};

// Ticks children left to right, stops at the first child that does not
// FAIL and returns that status. Re-evaluates from the first child on
// every tick.
class PriorityNode final : public CompositeNode {
 public:
  explicit PriorityNode(std::string name = {});
  void abandon(TickContext& ctx) override;

 protected:
  NodeStatus do_tick(TickContext& ctx) override;
};

// Sequence that remembers a RUNNING child and resumes from it on the next
// tick without re-ticking the children before it. The memory is cleared on
// any terminal result or ERROR.
class MemSequenceNode final : public CompositeNode {
 public:
  explicit MemSequenceNode(std::string name = {});
  void abandon(TickContext& ctx) override;

 protected:
  NodeStatus do_tick(TickContext& ctx) override;
};

// Priority with the same resume-from-memory behavior as MemSequence.
class MemPriorityNode final : public CompositeNode {
 public:
  explicit MemPriorityNode(std::string name = {});
  void abandon(TickContext& ctx) override;

 protected:
  NodeStatus do_tick(TickContext& ctx) override;
};

// Ticks every child every tick. SUCCESS once at least success_threshold
// children succeed, FAILURE once at least failure_threshold fail, RUNNING
// otherwise; the success check wins if both thresholds are met in the same
// tick. Any child ERROR aborts the tick immediately.
class ParallelNode final : public CompositeNode {
 public:
  ParallelNode(int success_threshold, int failure_threshold,
               std::string name = {});
  void abandon(TickContext& ctx) override;
  void validate() const override;

  int success_threshold() const { return success_threshold_; }
  int failure_threshold() const { return failure_threshold_; }

 protected:
  NodeStatus do_tick(TickContext& ctx) override;

 private:
  int success_threshold_;
  int failure_threshold_;
};

}  // namespace btrl::bt
