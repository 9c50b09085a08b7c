#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smooth/manifold.hpp"

namespace smooth {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Random valid spec. `spin` and `dimension` are drawn when not given.
ManifoldSpec random_spec(std::mt19937_64& rng, std::optional<int> dimension = std::nullopt,
                         std::optional<bool> spin = std::nullopt);

/// Theorem A cells, CP2 proposition, Moore lemmas, table invariants and the
/// closed-form oracle sweep.
std::vector<CheckLine> run_golden_checks(std::uint64_t seed = 20240101, int oracle_specs = 200);

}  // namespace smooth
