#include "swarmaze/abca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stop_check.hpp"

namespace swarmaze {

BeeColonyParams BeeColonyParams::from(const GeneratorConfig& config) {
  const GeneratorConfig c = normalized(config);
  return BeeColonyParams{.population = c.population,
                         .best_bees = *c.best_bees,
                         .zeta = *c.zeta,
                         .max_iterations = c.max_iterations,
                         .replacement = c.bee_replacement};
}

double fitness(CellCoord bee, const ScalarField& field, double zeta_or_one) {
  const auto& doors = field.entrances();
  const double nearest =
      std::min(euclidean(bee, doors[0]), euclidean(bee, doors[1]));
  const double diagonal = std::hypot(static_cast<double>(field.width()),
                                     static_cast<double>(field.height()));
  return zeta_or_one * nearest / diagonal;
}

ScalarField map_update(const ScalarField& field,
                       std::span<const CellCoord> bees, double zeta) {
  ScalarField next = field;
  for (const auto& bee : bees) {
    const double score = fitness(bee, next, zeta);
    if (score < 0.5)
      next.set(bee, next.at(bee) + 0.1);
    else if (score > 0.5)
      next.set(bee, next.at(bee) - 0.05);
  }
  return next;
}

std::vector<double> waggle_probabilities(const BeeColonyState& state) {
  std::vector<double> weights;
  weights.reserve(state.bees.size());
  for (const auto& bee : state.bees)
    weights.push_back(fitness(bee, state.field, 1.0));
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total == 0.0) {
    std::fill(weights.begin(), weights.end(),
              1.0 / static_cast<double>(weights.size()));
    return weights;
  }
  for (double& w : weights) w /= total;
  return weights;
}

CellCoord bee_move(const BeeColonyState& state, int bee,
                   std::span<const int> best_set, RandomSource& rng) {
  if (best_set.empty())
    throw std::invalid_argument("bee_move: best set must not be empty");

  const auto pick = static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(best_set.size()) - 1));
  const CellCoord best = state.bees[static_cast<std::size_t>(best_set[pick])];
  const CellCoord self = state.bees[static_cast<std::size_t>(bee)];
  const int axis = static_cast<int>(rng.uniform_int(0, 1));
  const double scale = rng.uniform_symmetric();

  CellCoord next = self;
  if (axis == 0) {
    const auto shift = std::llround(scale * (self.col - best.col));
    next.col = std::clamp(self.col + static_cast<int>(shift), 0,
                          state.field.width() - 1);
  } else {
    const auto shift = std::llround(scale * (self.row - best.row));
    next.row = std::clamp(self.row + static_cast<int>(shift), 0,
                          state.field.height() - 1);
  }
  return next;
}

BeeColonyState abca_init(const GeneratorConfig& config, RandomSource& rng) {
  const GeneratorConfig c = normalized(config);
  const BeeColonyParams params = BeeColonyParams::from(c);
  const auto doors = resolve_doors(c, rng);

  BeeColonyState state{
      .field = ScalarField(c.width, c.height, params.zeta, doors),
      .bees = {},
      .iteration = 0};
  for (const auto& door : state.field.entrances())
    state.field.set(door, std::min(1.0, 3.0 * params.zeta));

  state.bees.reserve(static_cast<std::size_t>(params.population));
  for (int i = 0; i < params.population; ++i)
    state.bees.push_back({static_cast<int>(rng.uniform_int(0, c.width - 1)),
                          static_cast<int>(rng.uniform_int(0, c.height - 1))});
  return state;
}

void abca_iterate(BeeColonyState& state, const BeeColonyParams& params,
                  RandomSource& rng) {
  state.field = map_update(state.field, state.bees, params.zeta);

  const std::vector<double> weights = waggle_probabilities(state);
  std::vector<int> order(state.bees.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[static_cast<std::size_t>(a)] <
           weights[static_cast<std::size_t>(b)];
  });

  const auto m = static_cast<std::size_t>(params.best_bees);
  const std::span<const int> best_set{order.data(), m};

  // The bees outside the best set become onlookers: re-seeded (or cloned
  // onto a random best position), then displaced toward the best set.
  for (std::size_t k = m; k < order.size(); ++k) {
    const auto i = static_cast<std::size_t>(order[k]);
    if (params.replacement == BeeReplacement::Reseed) {
      state.bees[i] = {
          static_cast<int>(rng.uniform_int(0, state.field.width() - 1)),
          static_cast<int>(rng.uniform_int(0, state.field.height() - 1))};
    } else {
      const auto pick = static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(m) - 1));
      state.bees[i] = state.bees[static_cast<std::size_t>(best_set[pick])];
    }
  }
  for (std::size_t k = m; k < order.size(); ++k) {
    const int i = order[k];
    state.bees[static_cast<std::size_t>(i)] =
        bee_move(state, i, best_set, rng);
  }
  ++state.iteration;
}

RunResult run_abca(const GeneratorConfig& config, RandomSource& rng) {
  const GeneratorConfig c = normalized(config);
  const BeeColonyParams params = BeeColonyParams::from(c);

  BeeColonyState state = abca_init(c, rng);
  while (state.iteration < params.max_iterations) {
    abca_iterate(state, params, rng);
    if (detail::stop_condition_passed(state.field, c, rng))
      return {std::move(state.field), state.iteration, false};
  }
  return {std::move(state.field), state.iteration, true};
}

}  // namespace swarmaze
