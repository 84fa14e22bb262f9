#pragma once

#include <optional>

#include "swarmaze/config.hpp"
#include "swarmaze/grid.hpp"

namespace swarmaze {

struct GenerationResult {
  MazeGrid grid;
  std::optional<ScalarField> field;  // absent for the spanning-tree baseline
  int iterations = 0;
  bool cap_hit = false;
};

/// Seed-to-maze pipeline: runs the configured generator, then thresholds,
/// carves the random alleys, seals the border, and re-opens pockets. All
/// randomness flows from config.seed, so equal configs give equal mazes.
/// A capped run still returns its board; cap_hit reports it.
GenerationResult generate_maze(const GeneratorConfig& config);

}  // namespace swarmaze
