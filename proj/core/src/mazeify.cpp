#include "swarmaze/mazeify.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace swarmaze {

MazeGrid threshold(const ScalarField& field, double kappa) {
  if (kappa <= 0.0 || kappa >= 1.0)
    throw std::invalid_argument("threshold: kappa must be in (0, 1)");
  MazeGrid grid(field.width(), field.height(), CellKind::Open);
  for (int row = 0; row < field.height(); ++row)
    for (int col = 0; col < field.width(); ++col) {
      const CellCoord c{col, row};
      grid.set(field.at(c) < kappa ? CellKind::Open : CellKind::Wall, c);
    }
  grid.set(CellKind::Entrance, field.entrances()[0]);
  grid.set(CellKind::Exit, field.entrances()[1]);
  return grid;
}

MazeGrid carve_alleys(const MazeGrid& grid, int r, RandomSource& rng) {
  if (r < 0) throw std::invalid_argument("carve_alleys: r must be >= 0");
  MazeGrid out = grid;
  if (r == 0) return out;

  std::vector<CellCoord> interior_walls;
  for (int row = 1; row < grid.height() - 1; ++row)
    for (int col = 1; col < grid.width() - 1; ++col)
      if (grid.at({col, row}) == CellKind::Wall)
        interior_walls.push_back({col, row});

  const int carve = std::min<int>(r, static_cast<int>(interior_walls.size()));
  for (int k = 0; k < carve; ++k) {
    const auto pick = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(interior_walls.size()) - 1));
    out.set(CellKind::Open, interior_walls[pick]);
    interior_walls[pick] = interior_walls.back();
    interior_walls.pop_back();
  }
  return out;
}

void seal_border(MazeGrid& grid) {
  for (int row = 0; row < grid.height(); ++row)
    for (int col = 0; col < grid.width(); ++col) {
      const CellCoord c{col, row};
      if (!on_border(c, grid.width(), grid.height())) continue;
      const CellKind kind = grid.at(c);
      if (kind != CellKind::Entrance && kind != CellKind::Exit)
        grid.set(CellKind::Wall, c);
    }
}

MazeGrid sealed_threshold(const ScalarField& field, double kappa) {
  MazeGrid grid = threshold(field, kappa);
  seal_border(grid);
  return grid;
}

namespace {

// Re-opens walls around open cells that ended up with no passable neighbor.
// The opened neighbor is the interior wall with the smallest field value;
// ties resolve in the fixed neighbor order. Opening cells cannot create new
// pockets, so one row-major sweep settles the board.
void reopen_pockets(MazeGrid& grid, const ScalarField& field) {
  for (int row = 1; row < grid.height() - 1; ++row)
    for (int col = 1; col < grid.width() - 1; ++col) {
      const CellCoord c{col, row};
      if (grid.at(c) != CellKind::Open) continue;
      bool sealed = true;
      for (const auto& n : neighbors4(c, grid.width(), grid.height()))
        if (grid.is_passable(n)) {
          sealed = false;
          break;
        }
      if (!sealed) continue;

      const CellCoord* best = nullptr;
      double best_value = 0.0;
      const auto around = neighbors4(c, grid.width(), grid.height());
      for (const auto& n : around) {
        if (on_border(n, grid.width(), grid.height())) continue;
        if (best == nullptr || field.at(n) < best_value) {
          best = &n;
          best_value = field.at(n);
        }
      }
      if (best != nullptr) grid.set(CellKind::Open, *best);
    }
}

}  // namespace

MazeGrid finalize(const ScalarField& field, const MazeifyParams& params,
                  RandomSource& rng) {
  MazeGrid grid = threshold(field, params.kappa);
  grid = carve_alleys(grid, params.alleys, rng);
  seal_border(grid);
  reopen_pockets(grid, field);
  return grid;
}

int count_dead_ends(const MazeGrid& grid) {
  int count = 0;
  for (int row = 0; row < grid.height(); ++row)
    for (int col = 0; col < grid.width(); ++col) {
      const CellCoord c{col, row};
      if (grid.at(c) != CellKind::Open) continue;
      int passable = 0;
      for (const auto& n : neighbors4(c, grid.width(), grid.height()))
        if (grid.is_passable(n)) ++passable;
      if (passable <= 1) ++count;
    }
  return count;
}

}  // namespace swarmaze
