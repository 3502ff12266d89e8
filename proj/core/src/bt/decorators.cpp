#include "btrl/bt/decorators.hpp"

#include <stdexcept>

namespace btrl::bt {
namespace {

constexpr std::string_view kCompleted = "completed";

}  // namespace

void DecoratorNode::set_child(NodePtr child) {
  if (!child) throw std::invalid_argument("decorator child must not be null");
  child_ = std::move(child);
}

std::span<const NodePtr> DecoratorNode::children() const {
  if (!child_) return {};
  return {&child_, 1};
}

std::span<NodePtr> DecoratorNode::mutable_children() {
  if (!child_) return {};
  return {&child_, 1};
}

void DecoratorNode::validate() const { Node::validate(); }

void DecoratorNode::abandon(TickContext& ctx) {
  if (child_) child_->abandon(ctx);
}

InverterNode::InverterNode(std::string name)
    : DecoratorNode(NodeCategory::DECORATOR, "Inverter", std::move(name)) {}

NodeStatus InverterNode::do_tick(TickContext& ctx) {
  switch (child_->tick(ctx)) {
    case NodeStatus::SUCCESS: return NodeStatus::FAILURE;
    case NodeStatus::FAILURE: return NodeStatus::SUCCESS;
    case NodeStatus::RUNNING: return NodeStatus::RUNNING;
    case NodeStatus::ERROR: return NodeStatus::ERROR;
  }
  return NodeStatus::ERROR;
}

RepeaterNode::RepeaterNode(int count, std::string name)
    : DecoratorNode(NodeCategory::DECORATOR, "Repeater", std::move(name)),
      count_(count) {}

void RepeaterNode::validate() const {
  DecoratorNode::validate();
  if (count_ < 1) {
    throw std::invalid_argument("repeater count must be at least 1");
  }
}

NodeStatus RepeaterNode::do_tick(TickContext& ctx) {
  const NodeStatus s = child_->tick(ctx);
  if (s == NodeStatus::RUNNING) return NodeStatus::RUNNING;
  if (s == NodeStatus::ERROR) {
    ctx.blackboard.erase(id(), kCompleted);
    return NodeStatus::ERROR;
  }
  const std::int64_t done = ctx.blackboard.get_int(id(), kCompleted, 0) + 1;
  if (done >= count_) {
    ctx.blackboard.erase(id(), kCompleted);
    return s;
  }
  ctx.blackboard.set(id(), kCompleted, done);
  return NodeStatus::RUNNING;
}

void RepeaterNode::abandon(TickContext& ctx) {
  DecoratorNode::abandon(ctx);
  ctx.blackboard.erase(id(), kCompleted);
}

}  // namespace btrl::bt
