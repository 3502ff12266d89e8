#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

namespace btrl::rl {

// A discrete state is a small tuple of integer features. Tables are keyed
// on the whole tuple, so feature layout is up to the caller.
using DiscreteState = std::vector<int>;
using ActionIndex = int;

struct StateHash {
  std::size_t operator()(const DiscreteState& s) const noexcept;
};

// Sparse action-value table: rows appear on first write, and any value
// never written reads as 0. The action count is fixed at construction so
// every row has the same width.
class QTable {
 public:
  explicit QTable(int n_actions);

  int n_actions() const { return n_actions_; }
  std::size_t state_count() const { return rows_.size(); }

  double value(const DiscreteState& s, ActionIndex a) const;
  void set(const DiscreteState& s, ActionIndex a, double v);

  // Max over the row; 0 for a state never written (the row of zeros).
  double max_value(const DiscreteState& s) const;
  // Lowest-index maximizer.
  ActionIndex greedy_action(const DiscreteState& s) const;
  // All maximizers, ascending. Never empty.
  std::vector<ActionIndex> argmax_set(const DiscreteState& s) const;

  // Rows sorted lexicographically by state, for deterministic export.
  std::vector<std::pair<DiscreteState, std::vector<double>>> sorted_rows()
      const;

  // Plain-text snapshot: a header naming the format and action count, then
  // one line per (state, action) pair. Doubles round-trip exactly.
  void save(std::ostream& out) const;
  static QTable load(std::istream& in);

  bool operator==(const QTable&) const = default;

 private:
  const std::vector<double>* row(const DiscreteState& s) const;
  void check_action(ActionIndex a) const;

  int n_actions_;
  std::unordered_map<DiscreteState, std::vector<double>, StateHash> rows_;
};

}  // namespace btrl::rl
