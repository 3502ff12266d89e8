#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace btrl::bt {

// Result of ticking a node. SUCCESS and FAILURE are the terminal outcomes,
// RUNNING means the node needs more ticks, and ERROR signals an internal
// fault that the tree must not mask: every composite forwards it upward
// unchanged, so a faulting leaf aborts the whole tick.
enum class NodeStatus : std::uint8_t {
  SUCCESS,
  FAILURE,
  RUNNING,
  ERROR,
};

constexpr bool is_terminal(NodeStatus s) noexcept {
  return s == NodeStatus::SUCCESS || s == NodeStatus::FAILURE;
}

std::string_view to_string(NodeStatus s) noexcept;
std::ostream& operator<<(std::ostream& os, NodeStatus s);

enum class NodeCategory : std::uint8_t {
  COMPOSITE,  // one or more children, orchestrates their ticks
  DECORATOR,  // exactly one child, transforms its status
  ACTION,     // leaf that acts on the world, may return RUNNING
  CONDITION,  // leaf that tests the world, SUCCESS/FAILURE only
};

std::string_view to_string(NodeCategory c) noexcept;

}  // namespace btrl::bt
