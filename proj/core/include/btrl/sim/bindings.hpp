#pragma once

#include <cstdint>
#include <functional>

#include "btrl/learning/learning_nodes.hpp"
#include "btrl/rl/qlearning.hpp"
#include "btrl/sim/fire_sim.hpp"
#include "btrl/treedef/registry.hpp"

namespace btrl::sim {

// Fetches the simulator out of a tick context; throws (and thereby makes
// the calling node report ERROR) when the context has no SimState world.
SimState& sim_from(bt::TickContext& ctx);

// Everything the learning nodes need that is not in the tree document:
// hyperparameters, the acting policy, a seed to derive per-node RNG streams
// from, and the harness callbacks.
struct FireBindings {
  rl::LearnerParams action_params;
  rl::LearnerParams composite_params;
  learning::ActingPolicy policy = learning::ActingPolicy::kEpsilonGreedy;
  bool update_on_interrupt = true;
  std::uint64_t seed_base = 0;
  std::function<void(const learning::DecisionRecord&)> on_decision;
  std::function<void(const learning::EpisodeRecord&)> on_episode;
};

// Registers the fire-scenario node kinds:
//   conditions  IsVictim, IsFire
//   actions     SaveVictim, ChangeRoom
//   learning    LearningAction, LearningComposite
// Learning nodes resolve their bindings by name from node properties:
// "state" (fire_type | victim_fire), "reward" (extinguisher_basic |
// extinguisher_detailed | room_behavior), and for leaves "executor"
// (use_extinguisher). Hyperparameters may be overridden per node with the
// properties alpha, gamma, epsilon_start, epsilon_decay, epsilon_floor.
void register_fire_kinds(treedef::NodeRegistry& registry,
                         const FireBindings& bindings);

}  // namespace btrl::sim
