#include "btrl/bt/node.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <stdexcept>

namespace btrl::bt {

std::string_view to_string(NodeStatus s) noexcept {
  switch (s) {
    case NodeStatus::SUCCESS: return "SUCCESS";
    case NodeStatus::FAILURE: return "FAILURE";
    case NodeStatus::RUNNING: return "RUNNING";
    case NodeStatus::ERROR: return "ERROR";
  }
  return "ERROR";
}

std::ostream& operator<<(std::ostream& os, NodeStatus s) {
  return os << to_string(s);
}

std::string_view to_string(NodeCategory c) noexcept {
  switch (c) {
    case NodeCategory::COMPOSITE: return "composite";
    case NodeCategory::DECORATOR: return "decorator";
    case NodeCategory::ACTION: return "action";
    case NodeCategory::CONDITION: return "condition";
  }
  return "composite";
}

std::size_t TickTrace::count(NodeId node) const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(),
                    [&](const Event& e) { return e.node == node; }));
}

std::size_t TickTrace::count_in_tick(NodeId node, std::uint64_t tick) const {
  return static_cast<std::size_t>(std::count_if(
      events.begin(), events.end(),
      [&](const Event& e) { return e.node == node && e.tick == tick; }));
}

Node::Node(NodeCategory category, std::string kind, std::string name)
    : category_(category), kind_(std::move(kind)), name_(std::move(name)) {}

NodeStatus Node::tick(TickContext& ctx) {
  NodeStatus status;
  try {
    status = do_tick(ctx);
  } catch (const std::exception&) {
    status = NodeStatus::ERROR;
  }
  if (category_ == NodeCategory::CONDITION && status == NodeStatus::RUNNING) {
    // Conditions are instantaneous by contract; a RUNNING one is a bug in
    // the predicate wiring, not something the tree can interpret.
    status = NodeStatus::ERROR;
  }
  if (ctx.trace != nullptr) {
    ctx.trace->events.push_back({ctx.tick_counter, id_, status});
  }
  return status;
}

void Node::abandon(TickContext&) {}

void Node::validate() const {
  const std::size_t n = children().size();
  switch (category_) {
    case NodeCategory::COMPOSITE:
      if (n < 1) {
        throw std::invalid_argument("composite node '" + kind_ +
                                    "' needs at least one child");
      }
      break;
    case NodeCategory::DECORATOR:
      if (n != 1) {
        throw std::invalid_argument("decorator node '" + kind_ +
                                    "' needs exactly one child");
      }
      break;
    case NodeCategory::ACTION:
    case NodeCategory::CONDITION:
      if (n != 0) {
        throw std::invalid_argument("leaf node '" + kind_ +
                                    "' cannot have children");
      }
      break;
  }
}

}  // namespace btrl::bt
