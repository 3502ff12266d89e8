#pragma once

#include <vector>

namespace btrl::rl {

// Dense finite MDP with an expected-reward model: reward(s, a) is received
// on taking a in s, then the state follows transition(s, a, .). Terminal
// states are modelled as absorbing with zero reward on every action.
struct FiniteMdp {
  int n_states = 0;
  int n_actions = 0;
  std::vector<double> rewards;      // n_states * n_actions
  std::vector<double> transitions;  // n_states * n_actions * n_states

  double reward(int s, int a) const;
  double transition(int s, int a, int next) const;
  void set_reward(int s, int a, double r);
  void set_transition(int s, int a, int next, double p);

  static FiniteMdp make(int n_states, int n_actions);

  // Throws std::invalid_argument if any transition row is not a probability
  // distribution (within 1e-9) or any reward is non-finite.
  void validate() const;
};

// Classic Bellman-backup sweep until the sup-norm change drops below
// `tolerance`. Returns V*. Serves as the independent oracle that learned
// Q tables are compared against (V*(s) = max_a Q*(s, a)).
std::vector<double> value_iteration(const FiniteMdp& mdp, double gamma,
                                    double tolerance);

// Q*(s, a) = reward + gamma * sum_s' P(s'|s,a) V*(s'), from a V produced by
// value_iteration. Flattened n_states * n_actions, row-major.
std::vector<double> q_from_values(const FiniteMdp& mdp, double gamma,
                                  const std::vector<double>& values);

}  // namespace btrl::rl
