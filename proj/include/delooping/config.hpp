#pragma once

#include <atomic>
#include <cstdint>

namespace dl {

// Knobs for the randomized routines. The defaults give reproducible runs.
struct Config {
  std::uint64_t seed = 20240601;
  int idempotent_budget = 64;
  int iso_trials = 48;
  int sample_budget = 64;
};

Config& config();

// Number of isomorphism tests that answered "no" without an exact proof.
std::atomic<long>& monte_carlo_negatives();

}  // namespace dl
