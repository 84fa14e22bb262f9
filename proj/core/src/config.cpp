#include "swarmaze/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace swarmaze {

std::string algorithm_id(Algorithm a) {
  switch (a) {
    case Algorithm::Aaca: return "aaca";
    case Algorithm::Abca: return "abca";
    case Algorithm::Prim: return "prim";
  }
  throw std::logic_error("algorithm_id: unknown algorithm");
}

std::optional<Algorithm> algorithm_from_id(const std::string& id) {
  if (id == "aaca") return Algorithm::Aaca;
  if (id == "abca") return Algorithm::Abca;
  if (id == "prim") return Algorithm::Prim;
  return std::nullopt;
}

GeneratorConfig normalized(const GeneratorConfig& config) {
  GeneratorConfig c = config;
  if (c.width < 2 || c.height < 2)
    throw std::invalid_argument("config: width and height must be at least 2");
  if (c.population < 1)
    throw std::invalid_argument("config: population must be at least 1");
  if (c.alpha < 0.0) throw std::invalid_argument("config: alpha must be >= 0");
  if (c.beta < 0.0) throw std::invalid_argument("config: beta must be >= 0");
  if (c.rho < 0.0 || c.rho > 1.0)
    throw std::invalid_argument("config: rho must be in [0, 1]");
  if (c.kappa <= 0.0 || c.kappa >= 1.0)
    throw std::invalid_argument("config: kappa must be in (0, 1)");
  if (c.alleys < 0) throw std::invalid_argument("config: alleys must be >= 0");
  if (c.max_iterations < 1)
    throw std::invalid_argument("config: max_iterations must be at least 1");
  if (c.queen_trials < 1)
    throw std::invalid_argument("config: queen_trials must be at least 1");
  if (c.queen_max_steps < 0)
    throw std::invalid_argument("config: queen_max_steps must be >= 0");

  if (!c.zeta) c.zeta = (c.algo == Algorithm::Abca) ? 0.3 : 0.05;
  if (*c.zeta <= 0.0 || *c.zeta >= 1.0)
    throw std::invalid_argument("config: zeta must be in (0, 1)");

  if (!c.best_bees)
    c.best_bees = std::max(1, static_cast<int>(std::llround(0.10 * c.population)));
  if (*c.best_bees < 1 || *c.best_bees > c.population)
    throw std::invalid_argument("config: best_bees must satisfy 1 <= m <= n");

  auto check_door = [&](const std::optional<CellCoord>& door, const char* name) {
    if (!door) return;
    if (!in_bounds(*door, c.width, c.height) ||
        !on_border(*door, c.width, c.height))
      throw std::invalid_argument(std::string("config: ") + name +
                                  " must lie on the grid border");
  };
  check_door(c.entrance_at, "entrance");
  check_door(c.exit_at, "exit");
  if (c.entrance_at && c.exit_at && *c.entrance_at == *c.exit_at)
    throw std::invalid_argument("config: entrance and exit must be distinct");

  return c;
}

std::array<CellCoord, 2> resolve_doors(const GeneratorConfig& config,
                                       RandomSource& rng) {
  if (config.entrance_at && config.exit_at)
    return {*config.entrance_at, *config.exit_at};
  auto doors = place_entrances(config.width, config.height, rng);
  CellCoord entrance = config.entrance_at.value_or(doors.first);
  CellCoord exit_door = config.exit_at.value_or(doors.second);
  while (entrance == exit_door) {
    doors = place_entrances(config.width, config.height, rng);
    entrance = config.entrance_at.value_or(doors.first);
    exit_door = config.exit_at.value_or(doors.second);
  }
  return {entrance, exit_door};
}

}  // namespace swarmaze
