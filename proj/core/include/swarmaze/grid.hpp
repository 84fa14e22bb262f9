#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "swarmaze/random.hpp"

namespace swarmaze {

/// A cell position on a rectangular grid. col grows rightward, row downward.
struct CellCoord {
  int col = 0;
  int row = 0;

  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

inline bool in_bounds(CellCoord c, int width, int height) {
  return c.col >= 0 && c.col < width && c.row >= 0 && c.row < height;
}

inline bool on_border(CellCoord c, int width, int height) {
  return c.col == 0 || c.row == 0 || c.col == width - 1 || c.row == height - 1;
}

/// In-bounds 4-neighbors in fixed order: up, right, down, left.
std::vector<CellCoord> neighbors4(CellCoord c, int width, int height);

/// In-bounds 8-neighbors in fixed clockwise order starting at up.
std::vector<CellCoord> neighbors8(CellCoord c, int width, int height);

/// Euclidean distance between two cell centers.
double euclidean(CellCoord a, CellCoord b);

/// Picks the default entrance pair: one cell on the left border, one on the
/// right, at rows drawn from rng. Distinct by construction. Throws
/// std::invalid_argument when the grid is smaller than 2x2.
std::pair<CellCoord, CellCoord> place_entrances(int width, int height,
                                                RandomSource& rng);

/// Rectangular array of real values in [0, 1], one per cell, with two
/// distinct border entrance cells. Backs both generators: the ant colony
/// stores pheromone here, the bee colony its meadow map.
class ScalarField {
 public:
  /// Every cell starts at `initial` (clamped into [0, 1]).
  /// Throws std::invalid_argument on bad dimensions or entrance placement.
  ScalarField(int width, int height, double initial,
              std::array<CellCoord, 2> entrances);

  int width() const { return width_; }
  int height() const { return height_; }

  double at(CellCoord c) const { return values_[index(c)]; }

  /// Stores v clamped into [0, 1].
  void set(CellCoord c, double v);

  std::span<const double> values() const { return values_; }

  /// The two entrance cells; the first is rendered as the maze entrance,
  /// the second as the exit.
  const std::array<CellCoord, 2>& entrances() const { return entrances_; }

  friend bool operator==(const ScalarField&, const ScalarField&) = default;

 private:
  std::size_t index(CellCoord c) const {
    return static_cast<std::size_t>(c.row) * width_ + c.col;
  }

  int width_;
  int height_;
  std::vector<double> values_;
  std::array<CellCoord, 2> entrances_;
};

enum class CellKind : std::uint8_t { Open, Wall, Entrance, Exit };

/// The finished board: every cell is open space, wall, or one of the two
/// doors. Doors sit on the border; generation happens inside.
class MazeGrid {
 public:
  MazeGrid(int width, int height, CellKind fill = CellKind::Wall);

  int width() const { return width_; }
  int height() const { return height_; }

  CellKind at(CellCoord c) const { return cells_[index(c)]; }
  void set(CellKind kind, CellCoord c) { cells_[index(c)] = kind; }

  bool is_passable(CellCoord c) const { return at(c) != CellKind::Wall; }

  /// First cell of the given kind in row-major order, or {-1,-1}.
  CellCoord find_first(CellKind kind) const;

  std::span<const CellKind> cells() const { return cells_; }

  friend bool operator==(const MazeGrid&, const MazeGrid&) = default;

 private:
  std::size_t index(CellCoord c) const {
    return static_cast<std::size_t>(c.row) * width_ + c.col;
  }

  int width_;
  int height_;
  std::vector<CellKind> cells_;
};

}  // namespace swarmaze
