#include "btrl/sim/bindings.hpp"

#include <stdexcept>

#include "btrl/bt/leaves.hpp"
#include "btrl/rl/random.hpp"

namespace btrl::sim {
namespace {

using treedef::NodeSpec;
using treedef::TreeDefError;
using treedef::TreeDefErrorCode;

learning::StateExtractor find_extractor(const NodeSpec& spec) {
  const std::string name = treedef::require_string_property(spec, "state");
  if (name == "fire_type") {
    return [](bt::TickContext& ctx) {
      return rl::DiscreteState{sim_from(ctx).observe().fire_type};
    };
  }
  if (name == "victim_fire") {
    // One bit per thing worth doing: a savable victim, a fire that can
    // still be fought. A lost room scores zero on both, so the learner
    // never confuses it with a room that still needs work.
    return [](bt::TickContext& ctx) {
      const Observation obs = sim_from(ctx).observe();
      const bool fightable = obs.has_fire && !obs.room_lost;
      return rl::DiscreteState{obs.has_victim ? 1 : 0, fightable ? 1 : 0};
    };
  }
  throw TreeDefError(TreeDefErrorCode::kPropertyTypeMismatch,
                     "node '" + spec.id + "' names unknown state '" + name +
                         "'");
}

learning::RewardHook find_reward(const NodeSpec& spec) {
  const std::string name = treedef::require_string_property(spec, "reward");
  if (name == "extinguisher_basic") {
    return [](bt::TickContext& ctx, bt::NodeStatus) {
      return reward_scenario1(sim_from(ctx).last_outcome());
    };
  }
  if (name == "extinguisher_detailed") {
    return [](bt::TickContext& ctx, bt::NodeStatus) {
      return reward_scenario2_action(sim_from(ctx).last_outcome());
    };
  }
  if (name == "room_behavior") {
    return [](bt::TickContext& ctx, bt::NodeStatus) {
      SimState& sim = sim_from(ctx);
      return reward_scenario2_composite(sim.last_outcome(),
                                        sim.room_before_last_action());
    };
  }
  throw TreeDefError(TreeDefErrorCode::kPropertyTypeMismatch,
                     "node '" + spec.id + "' names unknown reward '" + name +
                         "'");
}

struct NamedExecutor {
  learning::ActionExecutor fn;
  int n_actions = 0;
};

NamedExecutor find_executor(const NodeSpec& spec) {
  const std::string name = treedef::require_string_property(spec, "executor");
  if (name == "use_extinguisher") {
    return {[](bt::TickContext& ctx, rl::ActionIndex a) {
              return sim_from(ctx)
                  .apply_extinguisher(static_cast<Extinguisher>(a))
                  .status;
            },
            3};
  }
  throw TreeDefError(TreeDefErrorCode::kPropertyTypeMismatch,
                     "node '" + spec.id + "' names unknown executor '" + name +
                         "'");
}

rl::LearnerParams node_params(const NodeSpec& spec,
                              const rl::LearnerParams& defaults,
                              std::uint64_t seed_base) {
  rl::LearnerParams params = defaults;
  params.alpha = treedef::get_double_property(spec, "alpha", params.alpha);
  params.gamma = treedef::get_double_property(spec, "gamma", params.gamma);
  params.epsilon_start =
      treedef::get_double_property(spec, "epsilon_start", params.epsilon_start);
  params.epsilon_decay =
      treedef::get_double_property(spec, "epsilon_decay", params.epsilon_decay);
  params.epsilon_floor =
      treedef::get_double_property(spec, "epsilon_floor", params.epsilon_floor);
  params.rng_seed = rl::mix_seed(seed_base, rl::fnv1a(spec.id));
  return params;
}

learning::LearningConfig node_config(const NodeSpec& spec,
                                     const rl::LearnerParams& defaults,
                                     const FireBindings& bindings) {
  learning::LearningConfig config;
  config.params = node_params(spec, defaults, bindings.seed_base);
  config.policy = bindings.policy;
  config.update_on_interrupt = bindings.update_on_interrupt;
  config.on_decision = bindings.on_decision;
  config.on_episode = bindings.on_episode;
  return config;
}

}  // namespace

SimState& sim_from(bt::TickContext& ctx) {
  auto* sim = dynamic_cast<SimState*>(ctx.world);
  if (sim == nullptr) {
    throw std::runtime_error("tick context has no fire simulation attached");
  }
  return *sim;
}

void register_fire_kinds(treedef::NodeRegistry& registry,
                         const FireBindings& bindings) {
  registry.add("IsVictim",
               {bt::NodeCategory::CONDITION,
                [](const NodeSpec& spec, std::vector<bt::NodePtr>) {
                  return std::make_unique<bt::ConditionLeaf>(
                      "IsVictim",
                      [](bt::TickContext& ctx) {
                        return sim_from(ctx).observe().has_victim;
                      },
                      spec.id);
                }});
  registry.add("IsFire",
               {bt::NodeCategory::CONDITION,
                [](const NodeSpec& spec, std::vector<bt::NodePtr>) {
                  return std::make_unique<bt::ConditionLeaf>(
                      "IsFire",
                      [](bt::TickContext& ctx) {
                        return sim_from(ctx).observe().has_fire;
                      },
                      spec.id);
                }});
  registry.add("SaveVictim",
               {bt::NodeCategory::ACTION,
                [](const NodeSpec& spec, std::vector<bt::NodePtr>) {
                  return std::make_unique<bt::ActionLeaf>(
                      "SaveVictim",
                      [](bt::TickContext& ctx) {
                        return sim_from(ctx).apply_save_victim().status;
                      },
                      spec.id);
                }});
  registry.add("ChangeRoom",
               {bt::NodeCategory::ACTION,
                [](const NodeSpec& spec, std::vector<bt::NodePtr>) {
                  return std::make_unique<bt::ActionLeaf>(
                      "ChangeRoom",
                      [](bt::TickContext& ctx) {
                        return sim_from(ctx).apply_change_room().status;
                      },
                      spec.id);
                }});
  registry.add(
      "LearningAction",
      {bt::NodeCategory::ACTION,
       [bindings](const NodeSpec& spec, std::vector<bt::NodePtr>) {
         NamedExecutor executor = find_executor(spec);
         return std::make_unique<learning::LearningActionNode>(
             executor.n_actions, find_extractor(spec), find_reward(spec),
             std::move(executor.fn),
             node_config(spec, bindings.action_params, bindings), spec.id);
       }});
  registry.add(
      "LearningComposite",
      {bt::NodeCategory::COMPOSITE,
       [bindings](const NodeSpec& spec, std::vector<bt::NodePtr> children) {
         auto node = std::make_unique<learning::LearningCompositeNode>(
             static_cast<int>(children.size()), find_extractor(spec),
             find_reward(spec),
             node_config(spec, bindings.composite_params, bindings), spec.id);
         for (auto& child : children) node->add_child(std::move(child));
         return node;
       }});
}

}  // namespace btrl::sim
