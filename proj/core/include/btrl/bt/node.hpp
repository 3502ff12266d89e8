#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "btrl/bt/blackboard.hpp"
#include "btrl/bt/status.hpp"

namespace btrl::bt {

class Node;
using NodePtr = std::unique_ptr<Node>;

// Base for whatever environment the leaves act on. Leaves downcast the
// World pointer they find in the tick context; a missing or mismatched
// world surfaces as ERROR through the exception path.
class World {
 public:
  virtual ~World() = default;
};

// Optional per-tick recording: one event per node visit, in visit order.
// Tests use it to count ticks (short-circuit proofs) and to compare whole
// executions for interference.
struct TickTrace {
  struct Event {
    std::uint64_t tick = 0;
    NodeId node = 0;
    NodeStatus status = NodeStatus::ERROR;
    bool operator==(const Event&) const = default;
  };

  std::vector<Event> events;

  std::size_t count(NodeId node) const;
  std::size_t count_in_tick(NodeId node, std::uint64_t tick) const;
  void clear() { events.clear(); }
};

struct TickContext {
  Blackboard& blackboard;
  World* world = nullptr;
  TickTrace* trace = nullptr;
  std::uint64_t tick_counter = 0;  // advanced by BehaviorTree::tick
};

class Node {
 public:
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  // Dispatches to do_tick, translating any thrown std::exception into
  // ERROR so a faulting leaf cannot unwind through the tree, and records
  // the visit in the trace if one is attached.
  NodeStatus tick(TickContext& ctx);

  // Called when a parent stops ticking this node while it was RUNNING.
  // Default clears nothing; stateful nodes override to drop resume state,
  // learning nodes treat it as an interruption.
  virtual void abandon(TickContext& ctx);

  NodeId id() const { return id_; }
  NodeCategory category() const { return category_; }
  const std::string& kind() const { return kind_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  virtual std::span<const NodePtr> children() const { return {}; }

  // Structural self-check, called once per node when a BehaviorTree is
  // assembled. Throws std::invalid_argument on violation.
  virtual void validate() const;

 protected:
  Node(NodeCategory category, std::string kind, std::string name = {});

  virtual NodeStatus do_tick(TickContext& ctx) = 0;
  virtual std::span<NodePtr> mutable_children() { return {}; }

 private:
  friend class BehaviorTree;

  NodeId id_ = 0;
  NodeCategory category_;
  std::string kind_;
  std::string name_;
};

}  // namespace btrl::bt
