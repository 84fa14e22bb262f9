#pragma once

#include "swarmaze/grid.hpp"
#include "swarmaze/random.hpp"

namespace swarmaze {

struct MazeifyParams {
  double kappa = 0.5;  // wall threshold, in (0, 1)
  int alleys = 0;      // r, interior walls removed at random
};

/// Maps field values to cells: value < kappa opens the cell, value >= kappa
/// walls it (the threshold itself counts as wall, so a saturated field stays
/// solid). The field's two entrance cells are forced open and tagged
/// Entrance / Exit.
MazeGrid threshold(const ScalarField& field, double kappa);

/// Opens exactly min(r, interior wall count) interior walls, picked uniformly
/// at random without replacement. Border, Entrance, and Exit cells are never
/// touched. r = 0 is the identity.
MazeGrid carve_alleys(const MazeGrid& grid, int r, RandomSource& rng);

/// Walls every border cell except the tagged Entrance/Exit.
void seal_border(MazeGrid& grid);

/// threshold + seal_border, the board the generation loop hands to the stop
/// check. Alleys are not carved here: they only open cells later, so a
/// passable check board stays passable through finalize.
MazeGrid sealed_threshold(const ScalarField& field, double kappa);

/// Full conversion: threshold, carve alleys, seal the border, then re-open
/// single-cell pockets (an open cell walled in on all four sides gets its
/// least-valued interior wall neighbor opened).
MazeGrid finalize(const ScalarField& field, const MazeifyParams& params,
                  RandomSource& rng);

/// Open cells (doors excluded) with at most one passable 4-neighbor.
int count_dead_ends(const MazeGrid& grid);

}  // namespace swarmaze
