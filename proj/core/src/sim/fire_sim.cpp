#include "btrl/sim/fire_sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "btrl/rl/random.hpp"

namespace btrl::sim {

std::string_view to_string(Behavior b) noexcept {
  switch (b) {
    case Behavior::kSaveVictim: return "save_victim";
    case Behavior::kUseExtinguisher: return "use_extinguisher";
    case Behavior::kChangeRoom: return "change_room";
  }
  return "change_room";
}

std::string_view to_string(SimEvent e) noexcept {
  switch (e) {
    case SimEvent::kSavedVictim: return "saved_victim";
    case SimEvent::kIntensityReduced: return "intensity_reduced";
    case SimEvent::kExtinguished: return "extinguished";
    case SimEvent::kWrongExtinguisher: return "wrong_extinguisher";
    case SimEvent::kChangedRoom: return "changed_room";
  }
  return "changed_room";
}

ExtinguisherMap ExtinguisherMap::random_bijection(std::mt19937_64& rng) {
  ExtinguisherMap map;
  // Fisher-Yates over the three fire types.
  for (std::size_t i = 2; i > 0; --i) {
    const std::size_t j = rl::uniform_index(rng, i + 1);
    std::swap(map.fire_type_of[i], map.fire_type_of[j]);
  }
  return map;
}

bool ExtinguisherMap::puts_out(Extinguisher e, int fire_type) const {
  return fire_type_of[static_cast<std::size_t>(e)] == fire_type;
}

Extinguisher ExtinguisherMap::correct_for(int fire_type) const {
  for (std::size_t i = 0; i < fire_type_of.size(); ++i) {
    if (fire_type_of[i] == fire_type) return static_cast<Extinguisher>(i);
  }
  throw std::invalid_argument("no extinguisher matches that fire type");
}

bool ActionOutcome::has_event(SimEvent e) const {
  return std::find(events.begin(), events.end(), e) != events.end();
}

SimState::SimState(const SimConfig& config)
    : config_(config), rng_(config.seed) {
  if (config_.scenario != 1 && config_.scenario != 2) {
    throw std::invalid_argument("scenario must be 1 or 2");
  }
  if (config_.victim_probability < 0.0 || config_.victim_probability > 1.0 ||
      config_.fire_probability < 0.0 || config_.fire_probability > 1.0) {
    throw std::invalid_argument("probabilities must be in [0, 1]");
  }
  map_ = ExtinguisherMap::random_bijection(rng_);
  generate_room();
}

Observation SimState::observe() const { return snapshot(); }

Observation SimState::snapshot() const {
  Observation obs;
  // A victim in a lost room is beyond saving and no longer presents as
  // someone to rescue; the fire, however, still reads as burning.
  obs.has_victim = room_.has_victim && !room_.lost;
  obs.has_fire = room_.fire_type != 0;
  obs.fire_type = room_.fire_type;
  obs.room_lost = room_.lost;
  return obs;
}

const Room& SimState::generate_room() {
  Room fresh;
  fresh.has_victim = rl::bernoulli(rng_, config_.victim_probability);
  if (rl::bernoulli(rng_, config_.fire_probability)) {
    fresh.fire_type = 1 + static_cast<int>(rl::uniform_index(rng_, 3));
    fresh.fire_intensity =
        config_.scenario == 2
            ? 1 + static_cast<int>(rl::uniform_index(rng_, 3))
            : 0;
    // How long a rescue takes here is set by how bad the room is when the
    // agent walks in; putting the fire out afterwards does not undo the
    // wreckage that slows the rescue down.
    fresh.rescue_effort = fresh.fire_intensity;
  }
  room_ = fresh;
  ++rooms_entered_;
  return room_;
}

ActionOutcome& SimState::commit(ActionOutcome outcome) {
  last_outcome_ = std::move(outcome);
  tick_log_.push_back(last_outcome_.behavior);
  ++actions_applied_;
  return last_outcome_;
}

ActionOutcome SimState::apply_save_victim() {
  room_before_ = room_;
  ActionOutcome outcome;
  outcome.behavior = Behavior::kSaveVictim;

  if (!room_.has_victim || room_.lost) {
    // Nobody there, or the room is past the point where a rescue works.
    outcome.status = bt::NodeStatus::FAILURE;
    return commit(outcome);
  }
  const int duration = room_.rescue_effort;
  room_.rescue_progress += 1;
  if (room_.rescue_progress >= duration || duration == 0) {
    room_.has_victim = false;
    room_.rescue_progress = 0;
    outcome.status = bt::NodeStatus::SUCCESS;
    outcome.events.push_back(SimEvent::kSavedVictim);
  } else {
    outcome.status = bt::NodeStatus::RUNNING;
  }
  return commit(outcome);
}

ActionOutcome SimState::apply_extinguisher(Extinguisher e) {
  room_before_ = room_;
  ActionOutcome outcome;
  outcome.behavior = Behavior::kUseExtinguisher;
  outcome.intensity_at_tick = room_.fire_intensity;

  if (room_.fire_type == 0) {
    outcome.status = bt::NodeStatus::FAILURE;
    return commit(outcome);
  }
  if (!map_.puts_out(e, room_.fire_type)) {
    outcome.events.push_back(SimEvent::kWrongExtinguisher);
    room_.lost = true;
    outcome.status = bt::NodeStatus::FAILURE;
    return commit(outcome);
  }
  if (room_.lost) {
    // Right handle, but the room is already past saving: no effect.
    outcome.status = bt::NodeStatus::FAILURE;
    return commit(outcome);
  }
  if (config_.scenario == 1) {
    room_.fire_type = 0;
    outcome.events.push_back(SimEvent::kExtinguished);
    outcome.status = bt::NodeStatus::SUCCESS;
    return commit(outcome);
  }
  room_.fire_intensity -= 1;
  outcome.events.push_back(SimEvent::kIntensityReduced);
  if (room_.fire_intensity == 0) {
    room_.fire_type = 0;
    outcome.events.push_back(SimEvent::kExtinguished);
    outcome.status = bt::NodeStatus::SUCCESS;
  } else {
    outcome.status = bt::NodeStatus::RUNNING;
  }
  return commit(outcome);
}

ActionOutcome SimState::apply_change_room() {
  room_before_ = room_;
  ActionOutcome outcome;
  outcome.behavior = Behavior::kChangeRoom;
  outcome.right_moment =
      room_.lost || (!room_.has_victim && room_.fire_type == 0);
  outcome.events.push_back(SimEvent::kChangedRoom);
  outcome.status = bt::NodeStatus::SUCCESS;
  generate_room();
  return commit(outcome);
}

void SimState::mark_tick() { tick_log_.clear(); }

std::span<const Behavior> SimState::behaviors_since_mark() const {
  return tick_log_;
}

Behavior expected_behavior(const Observation& obs) {
  if (obs.has_victim) return Behavior::kSaveVictim;
  if (obs.has_fire && !obs.room_lost) return Behavior::kUseExtinguisher;
  return Behavior::kChangeRoom;
}

double reward_scenario1(const ActionOutcome& outcome) {
  if (outcome.has_event(SimEvent::kWrongExtinguisher)) return -10.0;
  if (outcome.has_event(SimEvent::kExtinguished)) return 10.0;
  return 0.0;
}

double reward_scenario2_action(const ActionOutcome& outcome) {
  if (outcome.has_event(SimEvent::kWrongExtinguisher)) return -10.0;
  if (outcome.has_event(SimEvent::kIntensityReduced)) {
    if (outcome.intensity_at_tick < 1) {
      throw std::logic_error(
          "an extinguishing tick requires a burning fire");
    }
    return 10.0 / static_cast<double>(outcome.intensity_at_tick);
  }
  return 0.0;
}

double reward_scenario2_composite(const ActionOutcome& outcome,
                                  const Room& room_before) {
  if (outcome.behavior == Behavior::kChangeRoom) {
    const bool right_moment =
        room_before.lost ||
        (!room_before.has_victim && room_before.fire_type == 0);
    return right_moment ? 10.0 : -10.0;
  }
  if (outcome.status == bt::NodeStatus::SUCCESS) return 10.0;
  if (outcome.status == bt::NodeStatus::RUNNING) return -1.0;
  // A failed attempt: nobody left to save, or nothing this crew can still
  // put out. Either way the room was the wrong place to spend the tick.
  return -10.0;
}

}  // namespace btrl::sim
