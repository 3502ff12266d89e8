#pragma once

#include <functional>
#include <random>
#include <string>

#include "btrl/bt/composites.hpp"
#include "btrl/bt/node.hpp"
#include "btrl/rl/qlearning.hpp"
#include "btrl/rl/qtable.hpp"

namespace btrl::learning {

// Reads the learner's view of the world out of the tick context.
using StateExtractor = std::function<rl::DiscreteState(bt::TickContext&)>;

// Scalar feedback for one tick of the chosen action, given the status that
// tick produced. Called exactly once per active tick.
using RewardHook = std::function<double(bt::TickContext&, bt::NodeStatus)>;

// Runs one tick of action `a` for a learning leaf.
using ActionExecutor =
    std::function<bt::NodeStatus(bt::TickContext&, rl::ActionIndex)>;

// Bookkeeping for the episode currently in flight: the state the choice was
// made in, the choice, how many ticks it has run, and the reward discounted
// back to the initiation tick. Inactive between episodes.
struct EpisodeAccumulator {
  rl::DiscreteState initiation_state;
  rl::ActionIndex chosen = -1;
  int tau = 0;
  double discounted_reward = 0.0;
  bool active = false;

  void reset();
};

struct DecisionRecord {
  std::string node;
  rl::DiscreteState state;
  rl::ActionIndex chosen;
  bool greedy;  // false when the epsilon branch picked uniformly
};

struct EpisodeRecord {
  std::string node;
  rl::DiscreteState state;
  rl::ActionIndex chosen;
  int tau = 0;
  double discounted_reward = 0.0;
  bt::NodeStatus outcome = bt::NodeStatus::RUNNING;  // RUNNING = interrupted
  bool interrupted = false;
  bool updated = false;
};

enum class ActingPolicy {
  kEpsilonGreedy,
  kUniformRandom,  // evaluation baseline: no learning, pure chance
};

struct LearningConfig {
  rl::LearnerParams params;
  ActingPolicy policy = ActingPolicy::kEpsilonGreedy;

  // Whether an interrupted episode still applies its update (with the state
  // observed at interruption) or is discarded.
  bool update_on_interrupt = true;

  // Default reward mapping used when no RewardHook is supplied: terminal
  // SUCCESS earns success_reward, terminal FAILURE earns failure_reward,
  // RUNNING ticks earn nothing.
  double success_reward = 1.0;
  double failure_reward = -1.0;

  std::function<void(const DecisionRecord&)> on_decision;
  std::function<void(const EpisodeRecord&)> on_episode;
};

// Shared machinery for nodes that learn which child/action to run. Each
// activation opens an episode: pick greedily-with-exploration in the state
// observed now, keep re-ticking that pick while it reports RUNNING, then on
// a terminal status fold the accumulated reward into the Q table with a
// multi-step update over the episode's tau ticks. ERROR discards the
// episode unlearned; a parent abandoning the node interrupts it.
class LearningNodeBase : public bt::Node {
 public:
  // Closes a running episode early. Applies the update (unless configured
  // not to) using the state visible at interruption, then clears the
  // episode. Safe to call when idle.
  void interrupt(bt::TickContext& ctx);

  void abandon(bt::TickContext& ctx) override;

  const rl::QTable& table() const { return table_; }
  rl::QTable& table() { return table_; }
  double epsilon() const { return epsilon_.value(); }
  const EpisodeAccumulator& episode() const { return episode_; }
  const rl::LearnerParams& params() const { return config_.params; }

 protected:
  LearningNodeBase(bt::NodeCategory category, std::string kind,
                   std::string name, int n_actions, StateExtractor extractor,
                   RewardHook reward, LearningConfig config);

  // The whole episode protocol for one tick; `act` runs one tick of the
  // chosen action and is the only part that differs between the composite
  // and the leaf form.
  bt::NodeStatus episode_tick(
      bt::TickContext& ctx,
      const std::function<bt::NodeStatus(bt::TickContext&, rl::ActionIndex)>&
          act);

  int n_actions() const { return n_actions_; }
  rl::ActionIndex chosen_action() const { return episode_.chosen; }

 private:
  rl::ActionIndex choose(bt::TickContext& ctx, const rl::DiscreteState& s);
  void finish_episode(bt::TickContext& ctx, bt::NodeStatus outcome,
                      bool interrupted);

  int n_actions_;
  StateExtractor extractor_;
  RewardHook reward_;
  LearningConfig config_;
  rl::QTable table_;
  rl::EpsilonSchedule epsilon_;
  std::mt19937_64 rng_;
  EpisodeAccumulator episode_;
  double discount_multiplier_ = 1.0;  // gamma^(tau) maintained incrementally
};

// Composite whose children are the action set: each episode picks one child
// and ticks only that child until it terminates. Reward defaults to the
// terminal success/failure mapping unless a hook is given.
class LearningCompositeNode final : public LearningNodeBase {
 public:
  LearningCompositeNode(int n_children, StateExtractor extractor,
                        RewardHook reward, LearningConfig config,
                        std::string name = {});

  void add_child(bt::NodePtr child);
  std::span<const bt::NodePtr> children() const override { return children_; }
  void validate() const override;
  void abandon(bt::TickContext& ctx) override;

 protected:
  bt::NodeStatus do_tick(bt::TickContext& ctx) override;
  std::span<bt::NodePtr> mutable_children() override { return children_; }

 private:
  std::vector<bt::NodePtr> children_;
};

// Leaf with a parameter to learn: each episode picks an action index and
// feeds it to the executor until the executor reports a terminal status.
class LearningActionNode final : public LearningNodeBase {
 public:
  LearningActionNode(int n_actions, StateExtractor extractor,
                     RewardHook reward, ActionExecutor executor,
                     LearningConfig config, std::string name = {});

 protected:
  bt::NodeStatus do_tick(bt::TickContext& ctx) override;

 private:
  ActionExecutor executor_;
};

}  // namespace btrl::learning
