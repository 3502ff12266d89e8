#include "btrl/rl/qlearning.hpp"

#include <cmath>
#include <stdexcept>

#include "btrl/rl/random.hpp"

namespace btrl::rl {
namespace {

void check_reward(double reward) {
  if (!std::isfinite(reward)) {
    throw std::invalid_argument("q update: reward must be finite");
  }
}

// gamma^tau by repeated multiplication. For tau == 1 this returns gamma
// itself, which keeps the one-step and multi-step updates bit-identical.
double discount_power(double gamma, int tau) {
  double g = gamma;
  for (int i = 1; i < tau; ++i) g *= gamma;
  return g;
}

double apply_update(QTable& table, const DiscreteState& s, ActionIndex a,
                    double reward, double bootstrap_discount,
                    const DiscreteState& next, const LearnerParams& params) {
  const double current = table.value(s, a);
  const double target = reward + bootstrap_discount * table.max_value(next);
  const double updated = (1.0 - params.alpha) * current + params.alpha * target;
  table.set(s, a, updated);
  return updated;
}

}  // namespace

void LearnerParams::validate() const {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("alpha must be in (0, 1]");
  }
  if (gamma < 0.0 || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in [0, 1)");
  }
  if (epsilon_start < 0.0 || epsilon_start > 1.0) {
    throw std::invalid_argument("epsilon_start must be in [0, 1]");
  }
  if (!(epsilon_decay > 0.0) || epsilon_decay > 1.0) {
    throw std::invalid_argument("epsilon_decay must be in (0, 1]");
  }
  if (epsilon_floor < 0.0 || epsilon_floor > 1.0) {
    throw std::invalid_argument("epsilon_floor must be in [0, 1]");
  }
}

double q_update(QTable& table, const DiscreteState& s, ActionIndex a,
                double reward, const DiscreteState& next,
                const LearnerParams& params) {
  check_reward(reward);
  return apply_update(table, s, a, reward, params.gamma, next, params);
}

double q_update_smdp(QTable& table, const DiscreteState& s, ActionIndex a,
                     double reward, int tau, const DiscreteState& next,
                     const LearnerParams& params) {
  check_reward(reward);
  if (tau < 1) {
    throw std::invalid_argument("q update: tau must be at least 1");
  }
  return apply_update(table, s, a, reward, discount_power(params.gamma, tau),
                      next, params);
}

ActionIndex select_action(const QTable& table, const DiscreteState& s,
                          double epsilon, std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(table.n_actions());
  if (bernoulli(rng, epsilon)) {
    return static_cast<ActionIndex>(uniform_index(rng, n));
  }
  const std::vector<ActionIndex> best = table.argmax_set(s);
  return best[uniform_index(rng, best.size())];
}

EpsilonSchedule::EpsilonSchedule(double start, double decay, double floor)
    : value_(start), decay_(decay), floor_(floor) {
  if (floor > start) {
    throw std::invalid_argument("epsilon floor must not exceed the start");
  }
}

void EpsilonSchedule::advance() {
  value_ = std::max(value_ * decay_, floor_);
}

}  // namespace btrl::rl
