#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "swarmaze/config.hpp"
#include "swarmaze/grid.hpp"
#include "swarmaze/random.hpp"

namespace swarmaze {

struct AntColonyParams {
  int population = 30;       // n
  double alpha = 0.75;       // pheromone impact exponent
  double beta = 1.0;         // distance impact exponent
  double rho = 0.1;          // evaporation rate in [0, 1]
  double zeta = 0.05;        // pheromone floor in (0, 1)
  int max_iterations = 500;

  static AntColonyParams from(const GeneratorConfig& config);
};

/// Ants walk the grid and deposit pheromone on the cells they stand on;
/// the rest of the field evaporates. High-pheromone cells become walls when
/// the field is thresholded, so the colony literally draws the maze.
struct AntColonyState {
  ScalarField field;               // pheromone per cell, floored at zeta
  std::vector<CellCoord> ants;
  // Last cells each ant stood on (most recent last, capped length); these
  // count as known ground when picking the next step.
  std::vector<std::vector<CellCoord>> recent;
  int iteration = 0;
};

inline constexpr std::size_t kAntMemoryLength = 8;

/// Sum over the other ants of 1 / distance; co-located ants contribute
/// nothing (a zero distance carries no routing information). A one-ant
/// colony deposits 0.
double gamma_deposit(const AntColonyState& state, int ant);

/// One evaporation-and-deposit pass: every cell decays by (1 - rho); cells
/// occupied by ants additionally receive those ants' deposits. Results are
/// clamped into [zeta, 1].
AntColonyState pheromone_update(const AntColonyState& state,
                                const AntColonyParams& params);

/// Normalized move weights over the candidate steps of one ant: each
/// candidate cell c scores pheromone(c)^alpha * (1/distance)^beta.
/// Candidates are the 8-neighbors the ant has not recently visited; when all
/// neighbors are recent the memory is ignored for that step.
std::vector<std::pair<CellCoord, double>> transition_probabilities(
    const AntColonyState& state, const AntColonyParams& params, int ant);

/// Moves one ant a single lattice step toward its best-scoring candidate
/// (exact ties resolved uniformly at random). Returns the new position.
CellCoord ant_step(AntColonyState& state, const AntColonyParams& params,
                   int ant, RandomSource& rng);

/// Initial state: a uniform field at max(zeta, clamp(alpha, 0, 1)), doors
/// raised to three times that (capped at 1), ants dropped uniformly at
/// random.
AntColonyState aaca_init(const GeneratorConfig& config, RandomSource& rng);

/// One full colony iteration: pheromone update, then every ant steps.
void aaca_iterate(AntColonyState& state, const AntColonyParams& params,
                  RandomSource& rng);

/// Runs the colony until the board thresholds to a passable maze (checked
/// after every iteration, with the stop-check mode from the config) or the
/// iteration cap is hit. The field is returned either way.
RunResult run_aaca(const GeneratorConfig& config, RandomSource& rng);

}  // namespace swarmaze
