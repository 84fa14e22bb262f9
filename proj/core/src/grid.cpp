#include "swarmaze/grid.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace swarmaze {

std::vector<CellCoord> neighbors4(CellCoord c, int width, int height) {
  assert(in_bounds(c, width, height));
  const CellCoord candidates[4] = {
      {c.col, c.row - 1},  // up
      {c.col + 1, c.row},  // right
      {c.col, c.row + 1},  // down
      {c.col - 1, c.row},  // left
  };
  std::vector<CellCoord> out;
  out.reserve(4);
  for (const auto& n : candidates)
    if (in_bounds(n, width, height)) out.push_back(n);
  return out;
}

std::vector<CellCoord> neighbors8(CellCoord c, int width, int height) {
  assert(in_bounds(c, width, height));
  const CellCoord candidates[8] = {
      {c.col, c.row - 1},      // up
      {c.col + 1, c.row - 1},  // up-right
      {c.col + 1, c.row},      // right
      {c.col + 1, c.row + 1},  // down-right
      {c.col, c.row + 1},      // down
      {c.col - 1, c.row + 1},  // down-left
      {c.col - 1, c.row},      // left
      {c.col - 1, c.row - 1},  // up-left
  };
  std::vector<CellCoord> out;
  out.reserve(8);
  for (const auto& n : candidates)
    if (in_bounds(n, width, height)) out.push_back(n);
  return out;
}

double euclidean(CellCoord a, CellCoord b) {
  return std::hypot(static_cast<double>(a.col) - b.col,
                    static_cast<double>(a.row) - b.row);
}

std::pair<CellCoord, CellCoord> place_entrances(int width, int height,
                                                RandomSource& rng) {
  if (width < 2 || height < 2)
    throw std::invalid_argument("place_entrances: grid must be at least 2x2");
  const CellCoord left{0, static_cast<int>(rng.uniform_int(0, height - 1))};
  const CellCoord right{width - 1,
                        static_cast<int>(rng.uniform_int(0, height - 1))};
  return {left, right};
}

ScalarField::ScalarField(int width, int height, double initial,
                         std::array<CellCoord, 2> entrances)
    : width_(width), height_(height), entrances_(entrances) {
  if (width < 2 || height < 2)
    throw std::invalid_argument("ScalarField: dimensions must be at least 2x2");
  for (const auto& e : entrances)
    if (!in_bounds(e, width, height) || !on_border(e, width, height))
      throw std::invalid_argument("ScalarField: entrances must lie on the border");
  if (entrances[0] == entrances[1])
    throw std::invalid_argument("ScalarField: entrances must be distinct");
  const double v = std::clamp(initial, 0.0, 1.0);
  values_.assign(static_cast<std::size_t>(width) * height, v);
}

void ScalarField::set(CellCoord c, double v) {
  values_[index(c)] = std::clamp(v, 0.0, 1.0);
}

MazeGrid::MazeGrid(int width, int height, CellKind fill)
    : width_(width), height_(height) {
  if (width < 2 || height < 2)
    throw std::invalid_argument("MazeGrid: dimensions must be at least 2x2");
  cells_.assign(static_cast<std::size_t>(width) * height, fill);
}

CellCoord MazeGrid::find_first(CellKind kind) const {
  for (int row = 0; row < height_; ++row)
    for (int col = 0; col < width_; ++col)
      if (at({col, row}) == kind) return {col, row};
  return {-1, -1};
}

}  // namespace swarmaze
