#include "btrl/bt/composites.hpp"

#include <stdexcept>

namespace btrl::bt {
namespace {

// Blackboard keys for composite bookkeeping.
constexpr std::string_view kRunningChild = "running_child";
constexpr std::string_view kResumeIndex = "resume_index";

}  // namespace

void CompositeNode::add_child(NodePtr child) {
  if (!child) throw std::invalid_argument("composite child must not be null");
  children_.push_back(std::move(child));
}

std::span<const NodePtr> CompositeNode::children() const { return children_; }

std::span<NodePtr> CompositeNode::mutable_children() { return children_; }

void CompositeNode::validate() const { Node::validate(); }

void CompositeNode::abandon_stale_running_child(TickContext& ctx,
                                                std::size_t last_ticked) {
  const std::int64_t prev = ctx.blackboard.get_int(id(), kRunningChild, -1);
  if (prev >= 0 && static_cast<std::size_t>(prev) < children_.size() &&
      static_cast<std::size_t>(prev) > last_ticked) {
    children_[static_cast<std::size_t>(prev)]->abandon(ctx);
  }
}

void CompositeNode::remember_running_child(TickContext& ctx,
                                           std::size_t index) {
  ctx.blackboard.set(id(), kRunningChild,
                     static_cast<std::int64_t>(index));
}

void CompositeNode::forget_running_child(TickContext& ctx) {
  ctx.blackboard.erase(id(), kRunningChild);
}

SequenceNode::SequenceNode(std::string name)
    : CompositeNode(NodeCategory::COMPOSITE, "Sequence", std::move(name)) {}

NodeStatus SequenceNode::do_tick(TickContext& ctx) {
  NodeStatus result = NodeStatus::SUCCESS;
  std::size_t last = children_.size();
  for (std::size_t i = 0; i < children_.size(); ++i) {
    const NodeStatus s = children_[i]->tick(ctx);
    if (s != NodeStatus::SUCCESS) {
      result = s;
      last = i;
      break;
    }
  }
  abandon_stale_running_child(ctx, last);
  if (result == NodeStatus::RUNNING) {
    remember_running_child(ctx, last);
  } else {
    forget_running_child(ctx);
  }
  return result;
}

void SequenceNode::abandon(TickContext& ctx) {
  const std::int64_t prev = ctx.blackboard.get_int(id(), kRunningChild, -1);
  if (prev >= 0 && static_cast<std::size_t>(prev) < children_.size()) {
    children_[static_cast<std::size_t>(prev)]->abandon(ctx);
  }
  forget_running_child(ctx);
}

PriorityNode::PriorityNode(std::string name)
    : CompositeNode(NodeCategory::COMPOSITE, "Priority", std::move(name)) {}

NodeStatus PriorityNode::do_tick(TickContext& ctx) {
  NodeStatus result = NodeStatus::FAILURE;
  std::size_t last = children_.size();
  for (std::size_t i = 0; i < children_.size(); ++i) {
    const NodeStatus s = children_[i]->tick(ctx);
    if (s != NodeStatus::FAILURE) {
      result = s;
      last = i;
      break;
    }
  }
  abandon_stale_running_child(ctx, last);
  if (result == NodeStatus::RUNNING) {
    remember_running_child(ctx, last);
  } else {
    forget_running_child(ctx);
  }
  return result;
}

void PriorityNode::abandon(TickContext& ctx) {
  const std::int64_t prev = ctx.blackboard.get_int(id(), kRunningChild, -1);
  if (prev >= 0 && static_cast<std::size_t>(prev) < children_.size()) {
    children_[static_cast<std::size_t>(prev)]->abandon(ctx);
  }
  forget_running_child(ctx);
}

MemSequenceNode::MemSequenceNode(std::string name)
    : CompositeNode(NodeCategory::COMPOSITE, "MemSequence", std::move(name)) {}

NodeStatus MemSequenceNode::do_tick(TickContext& ctx) {
  const auto start = static_cast<std::size_t>(
      ctx.blackboard.get_int(id(), kResumeIndex, 0));
  for (std::size_t i = start; i < children_.size(); ++i) {
    const NodeStatus s = children_[i]->tick(ctx);
    if (s == NodeStatus::RUNNING) {
      ctx.blackboard.set(id(), kResumeIndex, static_cast<std::int64_t>(i));
      return s;
    }
    if (s != NodeStatus::SUCCESS) {
      ctx.blackboard.erase(id(), kResumeIndex);
      return s;
    }
  }
  ctx.blackboard.erase(id(), kResumeIndex);
  return NodeStatus::SUCCESS;
}

void MemSequenceNode::abandon(TickContext& ctx) {
  const std::int64_t at = ctx.blackboard.get_int(id(), kResumeIndex, -1);
  if (at >= 0 && static_cast<std::size_t>(at) < children_.size()) {
    children_[static_cast<std::size_t>(at)]->abandon(ctx);
  }
  ctx.blackboard.erase(id(), kResumeIndex);
}

MemPriorityNode::MemPriorityNode(std::string name)
    : CompositeNode(NodeCategory::COMPOSITE, "MemPriority", std::move(name)) {}

NodeStatus MemPriorityNode::do_tick(TickContext& ctx) {
  const auto start = static_cast<std::size_t>(
      ctx.blackboard.get_int(id(), kResumeIndex, 0));
  for (std::size_t i = start; i < children_.size(); ++i) {
    const NodeStatus s = children_[i]->tick(ctx);
    if (s == NodeStatus::RUNNING) {
      ctx.blackboard.set(id(), kResumeIndex, static_cast<std::int64_t>(i));
      return s;
    }
    if (s != NodeStatus::FAILURE) {
      ctx.blackboard.erase(id(), kResumeIndex);
      return s;
    }
  }
  ctx.blackboard.erase(id(), kResumeIndex);
  return NodeStatus::FAILURE;
}

void MemPriorityNode::abandon(TickContext& ctx) {
  const std::int64_t at = ctx.blackboard.get_int(id(), kResumeIndex, -1);
  if (at >= 0 && static_cast<std::size_t>(at) < children_.size()) {
    children_[static_cast<std::size_t>(at)]->abandon(ctx);
  }
  ctx.blackboard.erase(id(), kResumeIndex);
}

ParallelNode::ParallelNode(int success_threshold, int failure_threshold,
                           std::string name)
    : CompositeNode(NodeCategory::COMPOSITE, "Parallel", std::move(name)),
      success_threshold_(success_threshold),
      failure_threshold_(failure_threshold) {}

void ParallelNode::validate() const {
  CompositeNode::validate();
  const int n = static_cast<int>(children_.size());
  if (success_threshold_ < 1 || success_threshold_ > n) {
    throw std::invalid_argument(
        "parallel success threshold out of range [1, child count]");
  }
  if (failure_threshold_ < 1 || failure_threshold_ > n) {
    throw std::invalid_argument(
        "parallel failure threshold out of range [1, child count]");
  }
}

NodeStatus ParallelNode::do_tick(TickContext& ctx) {
  int succeeded = 0;
  int failed = 0;
  for (auto& child : children_) {
    const NodeStatus s = child->tick(ctx);
    if (s == NodeStatus::ERROR) return NodeStatus::ERROR;
    if (s == NodeStatus::SUCCESS) ++succeeded;
    if (s == NodeStatus::FAILURE) ++failed;
  }
  if (succeeded >= success_threshold_) return NodeStatus::SUCCESS;
  if (failed >= failure_threshold_) return NodeStatus::FAILURE;
  return NodeStatus::RUNNING;
}

void ParallelNode::abandon(TickContext& ctx) {
  for (auto& child : children_) child->abandon(ctx);
}

}  // namespace btrl::bt
