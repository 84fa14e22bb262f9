#pragma once

#include <span>
#include <vector>

#include "swarmaze/config.hpp"
#include "swarmaze/grid.hpp"
#include "swarmaze/random.hpp"

namespace swarmaze {

struct BeeColonyParams {
  int population = 30;  // n
  int best_bees = 3;    // m, retained each iteration
  double zeta = 0.3;    // initial meadow value in (0, 1)
  int max_iterations = 500;
  BeeReplacement replacement = BeeReplacement::Reseed;

  static BeeColonyParams from(const GeneratorConfig& config);
};

/// Bees roam a meadow map seeded at zeta with the two doors raised to three
/// times that. Cells are scored by distance to the nearest door; occupied
/// cells drift up (toward wall) when the bee scores close and down when it
/// scores far, so the visited terrain hardens into the maze.
struct BeeColonyState {
  ScalarField field;  // meadow map
  std::vector<CellCoord> bees;
  int iteration = 0;
};

/// Distance from the bee to the nearer of the two doors, normalized by the
/// grid diagonal and scaled by zeta_or_one. Lower is better (closer to a
/// door). Result lies in [0, zeta_or_one].
double fitness(CellCoord bee, const ScalarField& field, double zeta_or_one);

/// One meadow pass: each bee's cell gains 0.1 when the bee's fitness (scaled
/// by zeta) is below 0.5 and loses 0.05 when above; exactly 0.5 leaves the
/// cell alone. Bees are applied in index order, so co-located bees stack.
ScalarField map_update(const ScalarField& field,
                       std::span<const CellCoord> bees, double zeta);

/// Per-bee selection weights: fitness at scale 1, normalized to sum to 1.
/// All-zero fitness (every bee on a door) degrades to uniform.
std::vector<double> waggle_probabilities(const BeeColonyState& state);

/// Moves one onlooker: picks a random best bee k and a random axis, then
/// displaces that coordinate by round(a * (own - best)) with a drawn
/// uniformly from [-1, 1], clamped into the grid. Returns the new cell.
CellCoord bee_move(const BeeColonyState& state, int bee,
                   std::span<const int> best_set, RandomSource& rng);

/// Initial state: meadow at zeta, doors at min(1, 3 * zeta), bees dropped
/// uniformly at random.
BeeColonyState abca_init(const GeneratorConfig& config, RandomSource& rng);

/// One full colony iteration: meadow update, waggle ranking, retain the m
/// best, replace the rest (re-seed or clone), then move the replaced
/// onlookers.
void abca_iterate(BeeColonyState& state, const BeeColonyParams& params,
                  RandomSource& rng);

/// Runs the colony until the board thresholds to a passable maze (checked
/// after every iteration) or the iteration cap is hit.
RunResult run_abca(const GeneratorConfig& config, RandomSource& rng);

}  // namespace swarmaze
