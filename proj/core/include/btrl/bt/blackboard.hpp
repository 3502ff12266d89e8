#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace btrl::bt {

using NodeId = std::uint32_t;

// Shared key/value store scoped per node. Composites with memory keep their
// resume index here, repeaters their completion count; keeping this state
// outside the nodes lets one tree instance run against several independent
// blackboards.
class Blackboard {
 public:
  using Value = std::variant<std::int64_t, double, bool, std::string>;

  void set(NodeId node, std::string_view key, Value value);
  const Value* find(NodeId node, std::string_view key) const;
  bool contains(NodeId node, std::string_view key) const;

  // Typed read with fallback; throws std::runtime_error if the stored value
  // has a different type (tests rely on this catching key collisions early).
  std::int64_t get_int(NodeId node, std::string_view key,
                       std::int64_t fallback) const;

  void erase(NodeId node, std::string_view key);
  void erase_node(NodeId node);
  void clear();
  std::size_t size() const { return entries_.size(); }

 private:
  struct KeyLess {
    using is_transparent = void;
    template <typename A, typename B>
    bool operator()(const A& a, const B& b) const {
      if (a.first != b.first) return a.first < b.first;
      return std::string_view(a.second) < std::string_view(b.second);
    }
  };

  std::map<std::pair<NodeId, std::string>, Value, KeyLess> entries_;
};

}  // namespace btrl::bt
