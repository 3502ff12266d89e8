#include <doctest.h>

#include <array>
#include <random>
#include <set>
#include <stdexcept>

#include "btrl/sim/fire_sim.hpp"

using namespace btrl;
using sim::Behavior;
using sim::Extinguisher;
using sim::SimConfig;
using sim::SimEvent;
using sim::SimState;

namespace {

constexpr auto S = bt::NodeStatus::SUCCESS;
constexpr auto F = bt::NodeStatus::FAILURE;
constexpr auto R = bt::NodeStatus::RUNNING;

// Walks to the next room until the predicate holds; gives up eventually so
// a broken generator cannot hang the suite.
template <typename Pred>
void seek_room(SimState& sim, Pred&& want) {
  for (int i = 0; i < 10000; ++i) {
    if (want(sim.room())) return;
    sim.apply_change_room();
  }
  FAIL("no room matching the predicate in 10000 draws");
}

}  // namespace

TEST_CASE("configuration is checked up front") {
  CHECK_THROWS_AS(SimState(SimConfig{.scenario = 3}), std::invalid_argument);
  CHECK_THROWS_AS(SimState(SimConfig{.victim_probability = -0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimState(SimConfig{.fire_probability = 1.5}),
                  std::invalid_argument);
}

TEST_CASE("equal seeds give equal worlds") {
  SimState a(SimConfig{.scenario = 2, .seed = 99});
  SimState b(SimConfig{.scenario = 2, .seed = 99});
  CHECK(a.hidden_map().fire_type_of == b.hidden_map().fire_type_of);
  for (int i = 0; i < 200; ++i) {
    const sim::Room& ra = a.room();
    const sim::Room& rb = b.room();
    CHECK(ra.has_victim == rb.has_victim);
    CHECK(ra.fire_type == rb.fire_type);
    CHECK(ra.fire_intensity == rb.fire_intensity);
    a.apply_change_room();
    b.apply_change_room();
  }
}

TEST_CASE("the hidden extinguisher mapping is a random bijection") {
  std::set<std::array<int, 3>> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const auto map = sim::ExtinguisherMap::random_bijection(rng);
    std::set<int> types(map.fire_type_of.begin(), map.fire_type_of.end());
    CHECK(types == std::set<int>{1, 2, 3});
    seen.insert(map.fire_type_of);
    for (int t = 1; t <= 3; ++t) {
      CHECK(map.puts_out(map.correct_for(t), t));
    }
  }
  // All six permutations occur across seeds.
  CHECK(seen.size() == 6);
  sim::ExtinguisherMap map;
  CHECK_THROWS_AS(map.correct_for(0), std::invalid_argument);
}

TEST_CASE("room generation matches the configured probabilities") {
  SimState sim(SimConfig{.scenario = 2, .seed = 5});
  int victims = 0;
  int fires = 0;
  std::array<int, 4> types{};
  std::array<int, 4> intensities{};
  constexpr int kRooms = 20000;
  for (int i = 0; i < kRooms; ++i) {
    const sim::Room& room = sim.room();
    victims += room.has_victim ? 1 : 0;
    if (room.fire_type != 0) {
      ++fires;
      types[static_cast<std::size_t>(room.fire_type)] += 1;
      intensities[static_cast<std::size_t>(room.fire_intensity)] += 1;
      CHECK(room.rescue_effort == room.fire_intensity);
    } else {
      CHECK(room.fire_intensity == 0);
      CHECK(room.rescue_effort == 0);
    }
    CHECK_FALSE(room.lost);
    sim.apply_change_room();
  }
  CHECK(victims / double(kRooms) == doctest::Approx(0.5).epsilon(0.04));
  CHECK(fires / double(kRooms) == doctest::Approx(0.5).epsilon(0.04));
  for (int t = 1; t <= 3; ++t) {
    CHECK(types[static_cast<std::size_t>(t)] / double(fires)
          == doctest::Approx(1.0 / 3).epsilon(0.06));
    CHECK(intensities[static_cast<std::size_t>(t)] / double(fires)
          == doctest::Approx(1.0 / 3).epsilon(0.06));
  }
}

TEST_CASE("skewed probabilities are honored") {
  SimState sim(SimConfig{.scenario = 1,
                         .victim_probability = 0.9,
                         .fire_probability = 0.1,
                         .seed = 6});
  int victims = 0;
  int fires = 0;
  constexpr int kRooms = 10000;
  for (int i = 0; i < kRooms; ++i) {
    victims += sim.room().has_victim ? 1 : 0;
    fires += sim.room().fire_type != 0 ? 1 : 0;
    CHECK(sim.room().fire_intensity == 0);  // basic rules have no intensity
    sim.apply_change_room();
  }
  CHECK(victims / double(kRooms) == doctest::Approx(0.9).epsilon(0.03));
  CHECK(fires / double(kRooms) == doctest::Approx(0.1).epsilon(0.2));
}

TEST_CASE("basic rules: the right handle wins instantly, the wrong one "
          "loses the room") {
  SimState sim(SimConfig{.scenario = 1, .seed = 11});
  seek_room(sim, [](const sim::Room& r) { return r.fire_type != 0; });

  SUBCASE("right handle") {
    const auto outcome = sim.apply_extinguisher(sim.correct_extinguisher());
    CHECK(outcome.status == S);
    CHECK(outcome.has_event(SimEvent::kExtinguished));
    CHECK(sim.room().fire_type == 0);
    CHECK_FALSE(sim.room().lost);
    CHECK(sim::reward_scenario1(outcome) == 10.0);
  }

  SUBCASE("wrong handle") {
    const auto right = sim.correct_extinguisher();
    const auto wrong = static_cast<Extinguisher>(
        (static_cast<int>(right) + 1) % 3);
    const auto outcome = sim.apply_extinguisher(wrong);
    CHECK(outcome.status == F);
    CHECK(outcome.has_event(SimEvent::kWrongExtinguisher));
    CHECK(sim.room().lost);
    CHECK(sim.room().fire_type != 0);  // still burning, just unfightable
    CHECK(sim::reward_scenario1(outcome) == -10.0);

    // Once lost, even the right handle cannot save the room.
    const auto futile = sim.apply_extinguisher(right);
    CHECK(futile.status == F);
    CHECK(sim::reward_scenario1(futile) == 0.0);
  }
}

TEST_CASE("detailed rules: extinguishing grinds the intensity down") {
  SimState sim(SimConfig{.scenario = 2, .seed = 21});
  seek_room(sim, [](const sim::Room& r) {
    return r.fire_type != 0 && r.fire_intensity == 3 && !r.has_victim;
  });

  const auto right = sim.correct_extinguisher();
  const auto first = sim.apply_extinguisher(right);
  CHECK(first.status == R);
  CHECK(first.intensity_at_tick == 3);
  CHECK(first.has_event(SimEvent::kIntensityReduced));
  CHECK(sim.room().fire_intensity == 2);
  CHECK(sim::reward_scenario2_action(first)
        == doctest::Approx(10.0 / 3).epsilon(1e-12));

  const auto second = sim.apply_extinguisher(right);
  CHECK(second.status == R);
  CHECK(second.intensity_at_tick == 2);
  CHECK(sim::reward_scenario2_action(second) == 5.0);

  const auto last = sim.apply_extinguisher(right);
  CHECK(last.status == S);
  CHECK(last.intensity_at_tick == 1);
  CHECK(last.has_event(SimEvent::kExtinguished));
  CHECK(sim.room().fire_type == 0);
  CHECK(sim.room().fire_intensity == 0);
  CHECK(sim::reward_scenario2_action(last) == 10.0);
}

TEST_CASE("detailed rules: the wrong handle still loses the room at once") {
  SimState sim(SimConfig{.scenario = 2, .seed = 22});
  seek_room(sim, [](const sim::Room& r) { return r.fire_type != 0; });
  const auto wrong = static_cast<Extinguisher>(
      (static_cast<int>(sim.correct_extinguisher()) + 1) % 3);
  const auto outcome = sim.apply_extinguisher(wrong);
  CHECK(outcome.status == F);
  CHECK(sim.room().lost);
  CHECK(sim::reward_scenario2_action(outcome) == -10.0);
}

TEST_CASE("rescues take as long as the fire was fierce on arrival") {
  SimState sim(SimConfig{.scenario = 2, .seed = 23});
  seek_room(sim, [](const sim::Room& r) {
    return r.has_victim && r.fire_intensity == 2;
  });

  SUBCASE("straight rescue") {
    const auto first = sim.apply_save_victim();
    CHECK(first.status == R);
    CHECK(sim.room().rescue_progress == 1);
    const auto second = sim.apply_save_victim();
    CHECK(second.status == S);
    CHECK(second.has_event(SimEvent::kSavedVictim));
    CHECK_FALSE(sim.room().has_victim);
    // The fire itself is untouched by the rescue.
    CHECK(sim.room().fire_type != 0);
  }

  SUBCASE("extinguishing first does not speed the rescue up") {
    const auto right = sim.correct_extinguisher();
    sim.apply_extinguisher(right);
    sim.apply_extinguisher(right);
    CHECK(sim.room().fire_type == 0);
    CHECK(sim.apply_save_victim().status == R);  // effort fixed at entry
    CHECK(sim.apply_save_victim().status == S);
  }
}

TEST_CASE("rescue failures") {
  SimState sim(SimConfig{.scenario = 2, .seed = 24});

  SUBCASE("no victim present") {
    seek_room(sim, [](const sim::Room& r) { return !r.has_victim; });
    CHECK(sim.apply_save_victim().status == F);
  }

  SUBCASE("a lost room has nobody left to save") {
    seek_room(sim, [](const sim::Room& r) {
      return r.has_victim && r.fire_type != 0;
    });
    const auto wrong = static_cast<Extinguisher>(
        (static_cast<int>(sim.correct_extinguisher()) + 1) % 3);
    sim.apply_extinguisher(wrong);
    REQUIRE(sim.room().lost);
    CHECK(sim.room().has_victim);          // physically still there
    CHECK_FALSE(sim.observe().has_victim); // but beyond observation
    CHECK(sim.observe().has_fire);
    CHECK(sim.apply_save_victim().status == F);
  }
}

TEST_CASE("basic rules: rescues are instant") {
  SimState sim(SimConfig{.scenario = 1, .seed = 25});
  seek_room(sim, [](const sim::Room& r) { return r.has_victim; });
  CHECK(sim.apply_save_victim().status == S);
  CHECK_FALSE(sim.room().has_victim);
}

TEST_CASE("changing rooms always works and knows whether it was due") {
  SimState sim(SimConfig{.scenario = 2, .seed = 26});

  SUBCASE("leaving a finished room is the right moment") {
    seek_room(sim, [](const sim::Room& r) {
      return !r.has_victim && r.fire_type == 0;
    });
    const auto before = sim.rooms_entered();
    const auto outcome = sim.apply_change_room();
    CHECK(outcome.status == S);
    CHECK(outcome.right_moment);
    CHECK(outcome.has_event(SimEvent::kChangedRoom));
    CHECK(sim.rooms_entered() == before + 1);
  }

  SUBCASE("leaving a lost room is the right moment") {
    seek_room(sim, [](const sim::Room& r) { return r.fire_type != 0; });
    const auto wrong = static_cast<Extinguisher>(
        (static_cast<int>(sim.correct_extinguisher()) + 1) % 3);
    sim.apply_extinguisher(wrong);
    CHECK(sim.apply_change_room().right_moment);
  }

  SUBCASE("walking out on a victim or a live fire is not") {
    seek_room(sim, [](const sim::Room& r) {
      return r.has_victim || r.fire_type != 0;
    });
    CHECK_FALSE(sim.apply_change_room().right_moment);
  }
}

TEST_CASE("whole-behavior reward covers every outcome class") {
  SimState sim(SimConfig{.scenario = 2, .seed = 27});

  auto composite_reward = [&]() {
    return sim::reward_scenario2_composite(sim.last_outcome(),
                                           sim.room_before_last_action());
  };

  // Completing a rescue pays +10; the ticks before it cost -1 each.
  seek_room(sim, [](const sim::Room& r) {
    return r.has_victim && r.fire_intensity == 2;
  });
  sim.apply_save_victim();
  CHECK(composite_reward() == -1.0);
  sim.apply_save_victim();
  CHECK(composite_reward() == 10.0);

  // A doomed rescue attempt is a wasted tick.
  seek_room(sim, [](const sim::Room& r) {
    return !r.has_victim && r.fire_type == 0;
  });
  sim.apply_save_victim();
  CHECK(composite_reward() == -10.0);

  // Leaving a finished room pays; leaving work behind costs.
  sim.apply_change_room();
  CHECK(composite_reward() == 10.0);
  seek_room(sim, [](const sim::Room& r) {
    return r.has_victim && r.fire_type == 0;
  });
  sim.apply_change_room();
  CHECK(composite_reward() == -10.0);

  // Extinguishing: progress ticks cost -1, completion pays +10, and a lost
  // room both fails the attempt and licenses the exit.
  seek_room(sim, [](const sim::Room& r) {
    return !r.has_victim && r.fire_intensity == 2;
  });
  const auto right = sim.correct_extinguisher();
  sim.apply_extinguisher(right);
  CHECK(composite_reward() == -1.0);
  sim.apply_extinguisher(right);
  CHECK(composite_reward() == 10.0);

  seek_room(sim, [](const sim::Room& r) { return r.fire_type != 0; });
  const auto wrong = static_cast<Extinguisher>(
      (static_cast<int>(sim.correct_extinguisher()) + 1) % 3);
  sim.apply_extinguisher(wrong);
  CHECK(composite_reward() == -10.0);
  sim.apply_extinguisher(sim.hidden_map().correct_for(sim.room().fire_type));
  CHECK(composite_reward() == -10.0);  // nothing can be put out any more
  sim.apply_change_room();
  CHECK(composite_reward() == 10.0);
}

TEST_CASE("the ground-truth policy prefers rescue, then fire, then moving") {
  sim::Observation obs;
  obs.has_victim = true;
  obs.has_fire = true;
  CHECK(sim::expected_behavior(obs) == Behavior::kSaveVictim);
  obs.has_victim = false;
  CHECK(sim::expected_behavior(obs) == Behavior::kUseExtinguisher);
  obs.has_fire = false;
  CHECK(sim::expected_behavior(obs) == Behavior::kChangeRoom);

  // A lost room shows no victim and an unfightable fire: leave.
  obs.has_fire = true;
  obs.room_lost = true;
  CHECK(sim::expected_behavior(obs) == Behavior::kChangeRoom);
}

TEST_CASE("per-tick activity log groups behaviors by mark") {
  SimState sim(SimConfig{.scenario = 1, .seed = 28});
  sim.mark_tick();
  for (int i = 0; i < 10000; ++i) sim.apply_change_room();
  CHECK(sim.behaviors_since_mark().size() == 10000);
  sim.mark_tick();
  CHECK(sim.behaviors_since_mark().empty());
  sim.apply_save_victim();
  sim.apply_change_room();
  const auto behaviors = sim.behaviors_since_mark();
  REQUIRE(behaviors.size() == 2);
  CHECK(behaviors[0] == Behavior::kSaveVictim);
  CHECK(behaviors[1] == Behavior::kChangeRoom);
  CHECK(sim.actions_applied() == 10002);
}

TEST_CASE("behavior names stay stable for the result files") {
  CHECK(sim::to_string(Behavior::kSaveVictim) == "save_victim");
  CHECK(sim::to_string(Behavior::kUseExtinguisher) == "use_extinguisher");
  CHECK(sim::to_string(Behavior::kChangeRoom) == "change_room");
  CHECK(sim::to_string(SimEvent::kWrongExtinguisher) == "wrong_extinguisher");
}
