#pragma once

// Randomized property suite behind the `check` command.

#include "finstrain/tensor.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace finstrain::check {

/// Replaceable kernels, so tests can inject faults and confirm that the
/// suite notices them.
struct Hooks {
  std::function<Tensor3(const Tensor3 &)> deviator;
};

struct PropertyOutcome {
  std::string name;
  int trials = 0;
  bool passed = true;
  std::string failure; ///< first failing instance, printable for replay
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<PropertyOutcome> outcomes;

  bool passed() const;
  /// One line per property plus a summary line; deterministic for a seed.
  std::string text() const;
};

/// Runs every property on `trials` random instances drawn from a generator
/// seeded with `seed`. Each property draws from its own stream derived from
/// the seed, so a failure can be replayed independently.
Report run_property_suite(std::uint64_t seed, int trials,
                          const Hooks &hooks = {});

} // namespace finstrain::check
