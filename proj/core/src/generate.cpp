#include "swarmaze/generate.hpp"

#include "swarmaze/aaca.hpp"
#include "swarmaze/abca.hpp"
#include "swarmaze/bench.hpp"
#include "swarmaze/mazeify.hpp"
#include "swarmaze/random.hpp"

namespace swarmaze {

GenerationResult generate_maze(const GeneratorConfig& config) {
  const GeneratorConfig c = normalized(config);
  RandomSource rng(c.seed);

  if (c.algo == Algorithm::Prim) {
    // The baseline is a spanning tree: already a maze, no thresholding and
    // no alley carving.
    MazeGrid grid = prim_baseline(c.width, c.height, rng);
    return {std::move(grid), std::nullopt, 0, false};
  }

  RunResult run = (c.algo == Algorithm::Aaca) ? run_aaca(c, rng)
                                              : run_abca(c, rng);
  const MazeifyParams params{.kappa = c.kappa, .alleys = c.alleys};
  MazeGrid grid = finalize(run.field, params, rng);
  return {std::move(grid), std::move(run.field), run.iterations, run.cap_hit};
}

}  // namespace swarmaze
