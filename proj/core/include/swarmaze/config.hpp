#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "swarmaze/grid.hpp"

namespace swarmaze {

enum class Algorithm { Aaca, Abca, Prim };
enum class StopCheck { Oracle, Queen };
enum class BeeReplacement { Reseed, Clone };
enum class QueenMemory { PreviousCell, FullVisited };

std::string algorithm_id(Algorithm a);
std::optional<Algorithm> algorithm_from_id(const std::string& id);

/// Every tunable of a generation run. Optional fields resolve to per-algorithm
/// defaults through normalized().
struct GeneratorConfig {
  Algorithm algo = Algorithm::Aaca;
  int width = 40;
  int height = 15;
  std::uint64_t seed = 0;

  int population = 30;              // n, colony size
  std::optional<int> best_bees;     // m; default round(0.10 * n)
  double alpha = 0.75;              // pheromone impact (also the initial
                                    // pheromone level, so > kappa by default:
                                    // the board starts opaque and is opened
                                    // by evaporation)
  double beta = 1.0;                // distance impact
  double rho = 0.1;                 // evaporation rate
  std::optional<double> zeta;       // minimum pheromone / meadow seed value;
                                    // defaults: 0.05 (aaca), 0.3 (abca)
  double kappa = 0.5;               // wall threshold
  int alleys = 20;                  // r, walls removed at random afterwards
  int max_iterations = 500;

  StopCheck stop_check = StopCheck::Oracle;
  BeeReplacement bee_replacement = BeeReplacement::Reseed;
  QueenMemory queen_memory = QueenMemory::PreviousCell;
  int queen_trials = 16;
  int queen_max_steps = 0;          // 0 -> 4 * width * height

  std::optional<CellCoord> entrance_at;  // default: left border, random row
  std::optional<CellCoord> exit_at;      // default: right border, random row

  friend bool operator==(const GeneratorConfig&,
                         const GeneratorConfig&) = default;
};

/// Outcome of one generator run: the raw field plus how it ended.
struct RunResult {
  ScalarField field;
  int iterations = 0;
  bool cap_hit = false;  // stopped by max_iterations, not by a passable board
};

/// Resolves optional fields to concrete values and validates ranges.
/// Throws std::invalid_argument on violations (bad dimensions, rho outside
/// [0,1], zeta outside (0,1), kappa outside (0,1), m > n, ...).
GeneratorConfig normalized(const GeneratorConfig& config);

/// The entrance/exit pair for a run: explicit coordinates when configured,
/// otherwise drawn by place_entrances; re-drawn until distinct from any
/// explicit door.
std::array<CellCoord, 2> resolve_doors(const GeneratorConfig& config,
                                       RandomSource& rng);

}  // namespace swarmaze
