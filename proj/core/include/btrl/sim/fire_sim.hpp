#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "btrl/bt/node.hpp"
#include "btrl/bt/status.hpp"

namespace btrl::sim {

// The three extinguisher handles the agent can pull. Which handle puts out
// which fire type is decided per run by a hidden random bijection, so the
// mapping has to be learned, not assumed.
enum class Extinguisher : int { kA = 0, kB = 1, kC = 2 };

// The three things an agent can be doing in a room; also the label space
// for the ground-truth rule used by the metrics.
enum class Behavior : int { kSaveVictim = 0, kUseExtinguisher = 1,
                            kChangeRoom = 2 };

enum class SimEvent : int {
  kSavedVictim,
  kIntensityReduced,
  kExtinguished,
  kWrongExtinguisher,
  kChangedRoom,
};

std::string_view to_string(Behavior b) noexcept;
std::string_view to_string(SimEvent e) noexcept;

struct Room {
  bool has_victim = false;
  int fire_type = 0;       // 0 = no fire, otherwise 1..3
  int fire_intensity = 0;  // 0 when no fire; 1..3 under the detailed rules
  bool lost = false;       // a wrong extinguisher was used here
  int rescue_effort = 0;   // ticks a rescue takes here, fixed when the room
                           // is generated from its initial fire intensity
  int rescue_progress = 0; // ticks already spent carrying the victim out
};

// What the agent is allowed to see. The extinguisher mapping is not here
// on purpose.
struct Observation {
  bool has_victim = false;
  bool has_fire = false;
  int fire_type = 0;
  bool room_lost = false;
};

struct ExtinguisherMap {
  // fire_type_of[e] is the fire type extinguisher e puts out.
  std::array<int, 3> fire_type_of{1, 2, 3};

  static ExtinguisherMap random_bijection(std::mt19937_64& rng);
  bool puts_out(Extinguisher e, int fire_type) const;
  Extinguisher correct_for(int fire_type) const;
};

struct ActionOutcome {
  Behavior behavior = Behavior::kChangeRoom;
  bt::NodeStatus status = bt::NodeStatus::FAILURE;
  std::vector<SimEvent> events;

  // Fire intensity as it stood when the tick was applied (before any
  // reduction); meaningful for extinguisher ticks under the detailed rules.
  int intensity_at_tick = 0;

  // For room changes: whether the room was actually finished (nothing left
  // to do, or already lost).
  bool right_moment = false;

  bool has_event(SimEvent e) const;
};

struct SimConfig {
  int scenario = 1;  // 1 = basic rules, 2 = detailed rules (intensity, durations)
  double victim_probability = 0.5;
  double fire_probability = 0.5;
  std::uint64_t seed = 0;
};

// An endless walk through rooms. Each room independently draws a victim, a
// fire, the fire's type, and (detailed rules) its intensity. Using the
// wrong extinguisher on a burning room loses the room for good. All three
// agent-facing actions return a node status, so leaves map directly onto
// them.
class SimState : public bt::World {
 public:
  explicit SimState(const SimConfig& config);

  const SimConfig& config() const { return config_; }
  const Room& room() const { return room_; }
  Observation observe() const;

  // Discards the current room and draws a fresh one. Draw order per room:
  // victim, fire presence, fire type, fire intensity (detailed rules only).
  const Room& generate_room();

  // Carry the victim out. Instant under the basic rules; under the detailed
  // rules it takes as many ticks as the fire's current intensity (instant
  // when nothing burns). Fails when there is no victim, or the room is
  // lost: once the wrong extinguisher has been used, only leaving works.
  ActionOutcome apply_save_victim();

  // Pull one extinguisher handle for one tick. The wrong handle on a live
  // fire loses the room. The right handle puts the fire out instantly under
  // the basic rules; under the detailed rules it lowers intensity by one
  // per tick, succeeding when it reaches zero. In a lost room nothing can
  // be put out any more and the attempt fails (a wrong handle is still the
  // wrong handle there).
  ActionOutcome apply_extinguisher(Extinguisher e);

  // Walk to the next room; always succeeds in one tick.
  ActionOutcome apply_change_room();

  const ActionOutcome& last_outcome() const { return last_outcome_; }
  const Room& room_before_last_action() const { return room_before_; }

  // Ground truth for metrics only; agent code must not read these.
  const ExtinguisherMap& hidden_map() const { return map_; }
  Extinguisher correct_extinguisher() const {
    return map_.correct_for(room_.fire_type);
  }

  // Per-tick activity log: behaviors applied since the last mark. The
  // harness marks once per tree tick and reads which behaviors ran in it.
  void mark_tick();
  std::span<const Behavior> behaviors_since_mark() const;

  std::uint64_t rooms_entered() const { return rooms_entered_; }
  std::uint64_t actions_applied() const { return actions_applied_; }

 private:
  Observation snapshot() const;
  ActionOutcome& commit(ActionOutcome outcome);

  SimConfig config_;
  std::mt19937_64 rng_;
  ExtinguisherMap map_;
  Room room_;
  ActionOutcome last_outcome_;
  Room room_before_;
  std::vector<Behavior> tick_log_;
  std::uint64_t rooms_entered_ = 0;
  std::uint64_t actions_applied_ = 0;
};

// The hand-written policy the learned behavior is scored against: save if
// someone is there, otherwise fight a live fire in a room still worth
// fighting for, otherwise move on.
Behavior expected_behavior(const Observation& obs);

// Basic-rules reward for one extinguisher tick: +10 for putting the fire
// out, -10 for the wrong handle, 0 for anything else.
double reward_scenario1(const ActionOutcome& outcome);

// Detailed-rules reward for one extinguisher tick: 10 divided by the
// intensity the fire had at that tick while the right handle is used (so
// the final tick of a burnt-down fire pays the full 10), -10 for the wrong
// handle, 0 otherwise.
double reward_scenario2_action(const ActionOutcome& outcome);

// Detailed-rules reward for a whole-behavior choice: +10 for completing a
// rescue, an extinguish, or a room change at the right moment; -1 for a
// tick of ongoing work; -10 for a failed attempt (nobody savable, nothing
// that can still be put out) or for leaving at the wrong moment.
double reward_scenario2_composite(const ActionOutcome& outcome,
                                  const Room& room_before);

}  // namespace btrl::sim
