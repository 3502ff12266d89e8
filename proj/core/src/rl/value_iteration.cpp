#include "btrl/rl/value_iteration.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace btrl::rl {
namespace {

std::size_t sa_index(const FiniteMdp& mdp, int s, int a) {
  return static_cast<std::size_t>(s) * static_cast<std::size_t>(mdp.n_actions) +
         static_cast<std::size_t>(a);
}

}  // namespace

double FiniteMdp::reward(int s, int a) const {
  return rewards[sa_index(*this, s, a)];
}

double FiniteMdp::transition(int s, int a, int next) const {
  return transitions[sa_index(*this, s, a) * static_cast<std::size_t>(n_states) +
                     static_cast<std::size_t>(next)];
}

void FiniteMdp::set_reward(int s, int a, double r) {
  rewards[sa_index(*this, s, a)] = r;
}

void FiniteMdp::set_transition(int s, int a, int next, double p) {
  transitions[sa_index(*this, s, a) * static_cast<std::size_t>(n_states) +
              static_cast<std::size_t>(next)] = p;
}

FiniteMdp FiniteMdp::make(int n_states, int n_actions) {
  if (n_states < 1 || n_actions < 1) {
    throw std::invalid_argument("mdp needs at least one state and action");
  }
  FiniteMdp mdp;
  mdp.n_states = n_states;
  mdp.n_actions = n_actions;
  mdp.rewards.assign(
      static_cast<std::size_t>(n_states) * static_cast<std::size_t>(n_actions),
      0.0);
  mdp.transitions.assign(static_cast<std::size_t>(n_states) *
                             static_cast<std::size_t>(n_actions) *
                             static_cast<std::size_t>(n_states),
                         0.0);
  return mdp;
}

void FiniteMdp::validate() const {
  for (int s = 0; s < n_states; ++s) {
    for (int a = 0; a < n_actions; ++a) {
      if (!std::isfinite(reward(s, a))) {
        throw std::invalid_argument("mdp rewards must be finite");
      }
      double total = 0.0;
      for (int next = 0; next < n_states; ++next) {
        const double p = transition(s, a, next);
        if (p < 0.0 || p > 1.0) {
          throw std::invalid_argument("mdp transition out of [0, 1]");
        }
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument(
            "mdp transition row does not sum to 1");
      }
    }
  }
}

std::vector<double> value_iteration(const FiniteMdp& mdp, double gamma,
                                    double tolerance) {
  mdp.validate();
  if (gamma < 0.0 || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in [0, 1)");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  std::vector<double> values(static_cast<std::size_t>(mdp.n_states), 0.0);
  std::vector<double> next(values.size(), 0.0);
  double delta = std::numeric_limits<double>::infinity();
  while (delta > tolerance) {
    delta = 0.0;
    for (int s = 0; s < mdp.n_states; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < mdp.n_actions; ++a) {
        double q = mdp.reward(s, a);
        for (int sn = 0; sn < mdp.n_states; ++sn) {
          const double p = mdp.transition(s, a, sn);
          if (p > 0.0) q += gamma * p * values[static_cast<std::size_t>(sn)];
        }
        if (q > best) best = q;
      }
      next[static_cast<std::size_t>(s)] = best;
      delta = std::max(delta,
                       std::abs(best - values[static_cast<std::size_t>(s)]));
    }
    values.swap(next);
  }
  return values;
}

std::vector<double> q_from_values(const FiniteMdp& mdp, double gamma,
                                  const std::vector<double>& values) {
  if (values.size() != static_cast<std::size_t>(mdp.n_states)) {
    throw std::invalid_argument("value vector size mismatch");
  }
  std::vector<double> q(static_cast<std::size_t>(mdp.n_states) *
                            static_cast<std::size_t>(mdp.n_actions),
                        0.0);
  for (int s = 0; s < mdp.n_states; ++s) {
    for (int a = 0; a < mdp.n_actions; ++a) {
      double total = mdp.reward(s, a);
      for (int sn = 0; sn < mdp.n_states; ++sn) {
        const double p = mdp.transition(s, a, sn);
        if (p > 0.0) total += gamma * p * values[static_cast<std::size_t>(sn)];
      }
      q[sa_index(mdp, s, a)] = total;
    }
  }
  return q;
}

}  // namespace btrl::rl
