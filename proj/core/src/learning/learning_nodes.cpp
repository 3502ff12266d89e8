#include "btrl/learning/learning_nodes.hpp"

#include <stdexcept>

#include "btrl/rl/random.hpp"

namespace btrl::learning {

void EpisodeAccumulator::reset() {
  initiation_state.clear();
  chosen = -1;
  tau = 0;
  discounted_reward = 0.0;
  active = false;
}

LearningNodeBase::LearningNodeBase(bt::NodeCategory category, std::string kind,
                                   std::string name, int n_actions,
                                   StateExtractor extractor, RewardHook reward,
                                   LearningConfig config)
    : bt::Node(category, std::move(kind), std::move(name)),
      n_actions_(n_actions),
      extractor_(std::move(extractor)),
      reward_(std::move(reward)),
      config_(std::move(config)),
      table_(n_actions),
      epsilon_(config_.params.epsilon_start, config_.params.epsilon_decay,
               config_.params.epsilon_floor),
      rng_(config_.params.rng_seed) {
  config_.params.validate();
  if (n_actions_ < 2) {
    throw std::invalid_argument(
        "a learning node needs at least two actions to choose between");
  }
  if (!extractor_) {
    throw std::invalid_argument("learning node needs a state extractor");
  }
}

rl::ActionIndex LearningNodeBase::choose(bt::TickContext&,
                                         const rl::DiscreteState& s) {
  const auto n = static_cast<std::size_t>(n_actions_);
  bool greedy = false;
  rl::ActionIndex chosen;
  if (config_.policy == ActingPolicy::kUniformRandom ||
      rl::bernoulli(rng_, epsilon_.value())) {
    chosen = static_cast<rl::ActionIndex>(rl::uniform_index(rng_, n));
  } else {
    greedy = true;
    const std::vector<rl::ActionIndex> best = table_.argmax_set(s);
    chosen = best[rl::uniform_index(rng_, best.size())];
  }
  if (config_.on_decision) {
    config_.on_decision({name().empty() ? kind() : name(), s, chosen, greedy});
  }
  return chosen;
}

bt::NodeStatus LearningNodeBase::episode_tick(
    bt::TickContext& ctx,
    const std::function<bt::NodeStatus(bt::TickContext&, rl::ActionIndex)>&
        act) {
  if (!episode_.active) {
    const rl::DiscreteState state = extractor_(ctx);
    episode_.chosen = choose(ctx, state);
    episode_.initiation_state = state;
    episode_.tau = 0;
    episode_.discounted_reward = 0.0;
    episode_.active = true;
    discount_multiplier_ = 1.0;
  }

  bt::NodeStatus status;
  try {
    status = act(ctx, episode_.chosen);
  } catch (...) {
    // A throwing executor surfaces as ERROR through the tick wrapper; the
    // half-run episode must not linger into the next activation.
    episode_.reset();
    throw;
  }
  if (status == bt::NodeStatus::ERROR) {
    // A faulting action teaches nothing: drop the episode without update.
    episode_.reset();
    return status;
  }

  episode_.tau += 1;
  double tick_reward;
  if (reward_) {
    tick_reward = reward_(ctx, status);
  } else if (status == bt::NodeStatus::SUCCESS) {
    tick_reward = config_.success_reward;
  } else if (status == bt::NodeStatus::FAILURE) {
    tick_reward = config_.failure_reward;
  } else {
    tick_reward = 0.0;
  }
  episode_.discounted_reward += discount_multiplier_ * tick_reward;
  discount_multiplier_ *= config_.params.gamma;

  if (status == bt::NodeStatus::RUNNING) return status;
  finish_episode(ctx, status, /*interrupted=*/false);
  return status;
}

void LearningNodeBase::finish_episode(bt::TickContext& ctx,
                                      bt::NodeStatus outcome,
                                      bool interrupted) {
  bool updated = false;
  if (config_.policy == ActingPolicy::kEpsilonGreedy &&
      (!interrupted || config_.update_on_interrupt)) {
    const rl::DiscreteState next = extractor_(ctx);
    rl::q_update_smdp(table_, episode_.initiation_state, episode_.chosen,
                      episode_.discounted_reward, episode_.tau, next,
                      config_.params);
    epsilon_.advance();
    updated = true;
  }
  if (config_.on_episode) {
    config_.on_episode({name().empty() ? kind() : name(),
                        episode_.initiation_state, episode_.chosen,
                        episode_.tau, episode_.discounted_reward, outcome,
                        interrupted, updated});
  }
  episode_.reset();
}

void LearningNodeBase::interrupt(bt::TickContext& ctx) {
  if (!episode_.active) return;
  finish_episode(ctx, bt::NodeStatus::RUNNING, /*interrupted=*/true);
}

void LearningNodeBase::abandon(bt::TickContext& ctx) { interrupt(ctx); }

LearningCompositeNode::LearningCompositeNode(int n_children,
                                             StateExtractor extractor,
                                             RewardHook reward,
                                             LearningConfig config,
                                             std::string name)
    : LearningNodeBase(bt::NodeCategory::COMPOSITE, "LearningComposite",
                       std::move(name), n_children, std::move(extractor),
                       std::move(reward), std::move(config)) {}

void LearningCompositeNode::add_child(bt::NodePtr child) {
  if (!child) throw std::invalid_argument("composite child must not be null");
  if (children_.size() >= static_cast<std::size_t>(n_actions())) {
    throw std::invalid_argument(
        "learning composite already has its full action set");
  }
  children_.push_back(std::move(child));
}

void LearningCompositeNode::validate() const {
  if (children_.size() != static_cast<std::size_t>(n_actions())) {
    throw std::invalid_argument(
        "learning composite child count must match its action count");
  }
}

bt::NodeStatus LearningCompositeNode::do_tick(bt::TickContext& ctx) {
  return episode_tick(ctx, [this](bt::TickContext& c, rl::ActionIndex a) {
    return children_[static_cast<std::size_t>(a)]->tick(c);
  });
}

void LearningCompositeNode::abandon(bt::TickContext& ctx) {
  // Let the child in flight release its own state before the episode is
  // closed out.
  if (episode().active && chosen_action() >= 0) {
    children_[static_cast<std::size_t>(chosen_action())]->abandon(ctx);
  }
  LearningNodeBase::abandon(ctx);
}

LearningActionNode::LearningActionNode(int n_actions, StateExtractor extractor,
                                       RewardHook reward,
                                       ActionExecutor executor,
                                       LearningConfig config, std::string name)
    : LearningNodeBase(bt::NodeCategory::ACTION, "LearningAction",
                       std::move(name), n_actions, std::move(extractor),
                       std::move(reward), std::move(config)),
      executor_(std::move(executor)) {
  if (!executor_) {
    throw std::invalid_argument("learning action needs an executor");
  }
}

bt::NodeStatus LearningActionNode::do_tick(bt::TickContext& ctx) {
  return episode_tick(ctx, executor_);
}

}  // namespace btrl::learning
