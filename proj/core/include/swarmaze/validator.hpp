#pragma once

#include <optional>
#include <vector>

#include "swarmaze/config.hpp"
#include "swarmaze/grid.hpp"
#include "swarmaze/random.hpp"

namespace swarmaze {

struct QueenParams {
  int max_steps = 0;  // 0 -> 4 * width * height
  int trials = 16;    // walks attempted per door
  QueenMemory memory = QueenMemory::PreviousCell;

  int resolved_max_steps(int width, int height) const {
    return max_steps > 0 ? max_steps : 4 * width * height;
  }
};

enum class SolveMethod { Queen, Oracle };

struct SolveReport {
  bool solvable = false;
  std::optional<std::vector<CellCoord>> path;  // Entrance -> Exit when present
  int steps_taken = 0;
  SolveMethod method = SolveMethod::Oracle;
};

/// Stochastic passage check: random walks launched from each door toward the
/// other, restricted to horizontal/vertical steps, never stepping on walls
/// and never immediately backtracking (or, in FullVisited mode, never
/// revisiting any cell of the walk). Succeeds on the first walk that reaches
/// the opposite door; failure after all trials is a value, not an error.
///
/// Each walk draws from its own stream derived from one draw on rng, so
/// trials could run concurrently without changing the result.
SolveReport queen_march(const MazeGrid& grid, const QueenParams& params,
                        RandomSource& rng);

/// Exact ground truth: breadth-first search over passable cells under
/// 4-connectivity. Returns a shortest path when one exists.
SolveReport oracle_solvable(const MazeGrid& grid);

}  // namespace swarmaze
