#pragma once

#include "swarmaze/config.hpp"
#include "swarmaze/grid.hpp"
#include "swarmaze/mazeify.hpp"
#include "swarmaze/random.hpp"
#include "swarmaze/validator.hpp"

namespace swarmaze::detail {

// Shared by both generator loops: thresholds the current field, seals the
// border, and asks the configured checker whether a passage exists. The
// queen checker consumes one draw from rng; the oracle consumes none.
inline bool stop_condition_passed(const ScalarField& field,
                                  const GeneratorConfig& config,
                                  RandomSource& rng) {
  const MazeGrid board = sealed_threshold(field, config.kappa);
  if (config.stop_check == StopCheck::Queen) {
    QueenParams params{.max_steps = config.queen_max_steps,
                       .trials = config.queen_trials,
                       .memory = config.queen_memory};
    return queen_march(board, params, rng).solvable;
  }
  return oracle_solvable(board).solvable;
}

}  // namespace swarmaze::detail
