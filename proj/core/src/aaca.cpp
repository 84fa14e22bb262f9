#include "swarmaze/aaca.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "stop_check.hpp"

namespace swarmaze {

AntColonyParams AntColonyParams::from(const GeneratorConfig& config) {
  const GeneratorConfig c = normalized(config);
  return AntColonyParams{.population = c.population,
                         .alpha = c.alpha,
                         .beta = c.beta,
                         .rho = c.rho,
                         .zeta = *c.zeta,
                         .max_iterations = c.max_iterations};
}

double gamma_deposit(const AntColonyState& state, int ant) {
  const CellCoord self = state.ants[static_cast<std::size_t>(ant)];
  double total = 0.0;
  for (std::size_t j = 0; j < state.ants.size(); ++j) {
    if (j == static_cast<std::size_t>(ant)) continue;
    const double distance = euclidean(self, state.ants[j]);
    if (distance == 0.0) continue;
    total += 1.0 / distance;
  }
  return total;
}

AntColonyState pheromone_update(const AntColonyState& state,
                                const AntColonyParams& params) {
  AntColonyState next = state;
  const int w = state.field.width();
  const int h = state.field.height();

  std::vector<double> deposit(static_cast<std::size_t>(w) * h, 0.0);
  for (std::size_t i = 0; i < state.ants.size(); ++i) {
    const CellCoord c = state.ants[i];
    deposit[static_cast<std::size_t>(c.row) * w + c.col] +=
        gamma_deposit(state, static_cast<int>(i));
  }

  for (int row = 0; row < h; ++row)
    for (int col = 0; col < w; ++col) {
      const CellCoord c{col, row};
      const double decayed = (1.0 - params.rho) * state.field.at(c);
      const double value = decayed + deposit[static_cast<std::size_t>(row) * w + col];
      next.field.set(c, std::clamp(value, params.zeta, 1.0));
    }
  return next;
}

std::vector<std::pair<CellCoord, double>> transition_probabilities(
    const AntColonyState& state, const AntColonyParams& params, int ant) {
  const CellCoord self = state.ants[static_cast<std::size_t>(ant)];
  const auto& memory = state.recent[static_cast<std::size_t>(ant)];
  const auto all = neighbors8(self, state.field.width(), state.field.height());

  std::vector<CellCoord> candidates;
  candidates.reserve(all.size());
  for (const auto& n : all)
    if (std::find(memory.begin(), memory.end(), n) == memory.end())
      candidates.push_back(n);
  if (candidates.empty()) candidates = all;  // everything is known ground

  std::vector<std::pair<CellCoord, double>> weighted;
  weighted.reserve(candidates.size());
  double total = 0.0;
  for (const auto& c : candidates) {
    const double weight = std::pow(state.field.at(c), params.alpha) *
                          std::pow(1.0 / euclidean(self, c), params.beta);
    weighted.emplace_back(c, weight);
    total += weight;
  }
  for (auto& [cell, weight] : weighted) weight /= total;
  return weighted;
}

CellCoord ant_step(AntColonyState& state, const AntColonyParams& params,
                   int ant, RandomSource& rng) {
  const auto probabilities = transition_probabilities(state, params, ant);

  double best = 0.0;
  for (const auto& [cell, p] : probabilities) best = std::max(best, p);
  std::vector<CellCoord> tied;
  for (const auto& [cell, p] : probabilities)
    if (p == best) tied.push_back(cell);

  const CellCoord target =
      tied.size() == 1
          ? tied.front()
          : tied[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(tied.size()) - 1))];

  CellCoord& pos = state.ants[static_cast<std::size_t>(ant)];
  const auto sign = [](int v) { return (v > 0) - (v < 0); };
  pos = {pos.col + sign(target.col - pos.col),
         pos.row + sign(target.row - pos.row)};
  assert(pos == target);  // candidates are adjacent, one sign step lands

  auto& memory = state.recent[static_cast<std::size_t>(ant)];
  memory.push_back(pos);
  if (memory.size() > kAntMemoryLength)
    memory.erase(memory.begin());
  return pos;
}

AntColonyState aaca_init(const GeneratorConfig& config, RandomSource& rng) {
  const GeneratorConfig c = normalized(config);
  const AntColonyParams params = AntColonyParams::from(c);

  const double initial =
      std::max(params.zeta, std::clamp(params.alpha, 0.0, 1.0));
  const auto doors = resolve_doors(c, rng);

  AntColonyState state{
      .field = ScalarField(c.width, c.height, initial, doors),
      .ants = {},
      .recent = {},
      .iteration = 0};
  for (const auto& door : state.field.entrances())
    state.field.set(door, std::min(1.0, 3.0 * initial));

  state.ants.reserve(static_cast<std::size_t>(params.population));
  state.recent.resize(static_cast<std::size_t>(params.population));
  for (int i = 0; i < params.population; ++i) {
    const CellCoord at{static_cast<int>(rng.uniform_int(0, c.width - 1)),
                       static_cast<int>(rng.uniform_int(0, c.height - 1))};
    state.ants.push_back(at);
    state.recent[static_cast<std::size_t>(i)].push_back(at);
  }
  return state;
}

void aaca_iterate(AntColonyState& state, const AntColonyParams& params,
                  RandomSource& rng) {
  state = pheromone_update(state, params);
  for (int i = 0; i < params.population; ++i) ant_step(state, params, i, rng);
  ++state.iteration;
}

RunResult run_aaca(const GeneratorConfig& config, RandomSource& rng) {
  const GeneratorConfig c = normalized(config);
  const AntColonyParams params = AntColonyParams::from(c);

  AntColonyState state = aaca_init(c, rng);
  while (state.iteration < params.max_iterations) {
    aaca_iterate(state, params, rng);
    if (detail::stop_condition_passed(state.field, c, rng))
      return {std::move(state.field), state.iteration, false};
  }
  return {std::move(state.field), state.iteration, true};
}

}  // namespace swarmaze
