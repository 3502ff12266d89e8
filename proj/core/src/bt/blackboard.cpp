#include "btrl/bt/blackboard.hpp"

#include <stdexcept>

namespace btrl::bt {

void Blackboard::set(NodeId node, std::string_view key, Value value) {
  entries_.insert_or_assign({node, std::string(key)}, std::move(value));
}

const Blackboard::Value* Blackboard::find(NodeId node,
                                          std::string_view key) const {
  auto it = entries_.find(std::pair<NodeId, std::string_view>{node, key});
  return it == entries_.end() ? nullptr : &it->second;
}

bool Blackboard::contains(NodeId node, std::string_view key) const {
  return find(node, key) != nullptr;
}

std::int64_t Blackboard::get_int(NodeId node, std::string_view key,
                                 std::int64_t fallback) const {
  const Value* v = find(node, key);
  if (v == nullptr) return fallback;
  if (const auto* i = std::get_if<std::int64_t>(v)) return *i;
  throw std::runtime_error("blackboard: key '" + std::string(key) +
                           "' holds a non-integer value");
}

void Blackboard::erase(NodeId node, std::string_view key) {
  auto it = entries_.find(std::pair<NodeId, std::string_view>{node, key});
  if (it != entries_.end()) entries_.erase(it);
}

void Blackboard::erase_node(NodeId node) {
  auto it = entries_.lower_bound(
      std::pair<NodeId, std::string_view>{node, std::string_view{}});
  while (it != entries_.end() && it->first.first == node) {
    it = entries_.erase(it);
  }
}

void Blackboard::clear() { entries_.clear(); }

}  // namespace btrl::bt
