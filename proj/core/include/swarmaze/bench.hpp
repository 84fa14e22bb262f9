#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swarmaze/config.hpp"
#include "swarmaze/grid.hpp"
#include "swarmaze/random.hpp"

namespace swarmaze {

/// One timing measurement of a full generation + validation run.
struct BenchRecord {
  Algorithm generator = Algorithm::Aaca;
  int width = 0;
  int height = 0;
  std::int64_t fields = 0;  // width * height
  std::uint64_t seed = 0;
  double wall_clock_ms = 0.0;
  int iterations = 0;
  bool solvable = false;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Randomized spanning-tree maze on the shared grid conventions: logical
/// cells on odd coordinates, passages carved between them, doors snapped to
/// odd rows and cut through the outer ring. Solvable by construction.
MazeGrid prim_baseline(int width, int height, RandomSource& rng);

/// Runs size x generator x repeat full generations (each on its own seed
/// derived from base.seed), timing generation and validating the result with
/// the exact oracle. One warm-up run per size and generator is excluded from
/// the records. A capped run lands in the records as solvable=false rather
/// than failing the sweep. With parallel=true the runs are dispatched across
/// threads (derived seeds keep every non-timing column reproducible; the
/// timings themselves stop being comparable).
std::vector<BenchRecord> run_sweep(std::span<const std::pair<int, int>> sizes,
                                   int repeats, const GeneratorConfig& base,
                                   bool parallel = false);

/// Deterministic CSV, one record per row:
/// generator,width,height,fields,seed,wall_clock_ms,iterations,solvable
std::string to_csv(std::span<const BenchRecord> records);

/// Plot-ready long format, one measurement per row:
/// generator,width,height,fields,seed,metric,value
std::string to_long_csv(std::span<const BenchRecord> records);

/// Median wall-clock per generator and size, as printable summary lines.
std::vector<std::string> median_summary(std::span<const BenchRecord> records);

}  // namespace swarmaze
