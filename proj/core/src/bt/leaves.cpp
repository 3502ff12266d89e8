#include "btrl/bt/leaves.hpp"

#include <stdexcept>

namespace btrl::bt {

ActionLeaf::ActionLeaf(std::string kind, Callback callback, std::string name)
    : Node(NodeCategory::ACTION, std::move(kind), std::move(name)),
      callback_(std::move(callback)) {
  if (!callback_) throw std::invalid_argument("action callback must be set");
}

NodeStatus ActionLeaf::do_tick(TickContext& ctx) { return callback_(ctx); }

ConditionLeaf::ConditionLeaf(std::string kind, Predicate predicate,
                             std::string name)
    : Node(NodeCategory::CONDITION, std::move(kind), std::move(name)),
      predicate_(std::move(predicate)) {
  if (!predicate_) {
    throw std::invalid_argument("condition predicate must be set");
  }
}

NodeStatus ConditionLeaf::do_tick(TickContext& ctx) {
  return predicate_(ctx) ? NodeStatus::SUCCESS : NodeStatus::FAILURE;
}

}  // namespace btrl::bt
