#pragma once

#include <cstdint>
#include <random>

namespace btrl::rl {

// splitmix64 step: advances the state and returns the next value of the
// stream. Used to derive independent sub-seeds (per trial, per node) from
// one master seed without correlated streams.
std::uint64_t splitmix64(std::uint64_t& state);

// Convenience wrapper around a splitmix64 stream.
class SeedSequence {
 public:
  explicit SeedSequence(std::uint64_t master) : state_(master) {}
  std::uint64_t next() { return splitmix64(state_); }

 private:
  std::uint64_t state_;
};

// Mixes a label into a seed, for deriving a per-name sub-seed from a base
// seed (e.g. one RNG stream per learning node).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t label);
std::uint64_t fnv1a(std::string_view text);

// Unbiased integer draw in [0, n) via rejection sampling, and a uniform
// double in [0, 1) built from the top 53 bits. Both are written out by hand
// because the std::uniform_* distributions are not pinned down by the
// standard and may differ across library versions; the mt19937_64 engine
// itself is fully specified, so these helpers give reproducible streams.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);
double uniform_unit(std::mt19937_64& rng);
bool bernoulli(std::mt19937_64& rng, double p);

}  // namespace btrl::rl
