#pragma once

#include <cstdint>
#include <random>

#include "btrl/rl/qtable.hpp"

namespace btrl::rl {

struct LearnerParams {
  double alpha = 0.5;
  double gamma = 0.9;
  double epsilon_start = 0.3;
  double epsilon_decay = 0.98;  // multiplicative, applied per episode
  double epsilon_floor = 0.01;
  std::uint64_t rng_seed = 0;

  // Throws std::invalid_argument when a field is out of range
  // (alpha in (0,1], gamma in [0,1), epsilons in [0,1], decay in (0,1]).
  void validate() const;
};

// One-step tabular update toward r + gamma * max_a' Q(s', a').
// Returns the new Q(s, a). Rejects non-finite rewards.
double q_update(QTable& table, const DiscreteState& s, ActionIndex a,
                double reward, const DiscreteState& next,
                const LearnerParams& params);

// Multi-step variant for temporally extended actions: the bootstrap term is
// discounted by gamma^tau, where tau >= 1 is the number of ticks the action
// ran and `reward` is the discounted sum accumulated over those ticks.
// With tau == 1 this reduces to q_update exactly (bit for bit).
double q_update_smdp(QTable& table, const DiscreteState& s, ActionIndex a,
                     double reward, int tau, const DiscreteState& next,
                     const LearnerParams& params);

// Epsilon-greedy draw: with probability epsilon a uniform action, otherwise
// a uniform draw among the row's maximizers (so fresh all-zero rows explore
// evenly instead of always picking action 0).
ActionIndex select_action(const QTable& table, const DiscreteState& s,
                          double epsilon, std::mt19937_64& rng);

// Multiplicative epsilon decay clamped at a floor; advanced once per
// completed episode.
class EpsilonSchedule {
 public:
  EpsilonSchedule(double start, double decay, double floor);

  double value() const { return value_; }
  void advance();

 private:
  double value_;
  double decay_;
  double floor_;
};

}  // namespace btrl::rl
