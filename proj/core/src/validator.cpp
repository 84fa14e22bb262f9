#include "swarmaze/validator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace swarmaze {

namespace {

struct WalkOutcome {
  bool reached = false;
  int steps = 0;
  std::vector<CellCoord> trace;
};

WalkOutcome random_walk(const MazeGrid& grid, CellCoord start, CellCoord target,
                        int max_steps, QueenMemory memory, RandomSource& rng) {
  WalkOutcome out;
  out.trace.push_back(start);

  const int w = grid.width();
  const int h = grid.height();
  std::unordered_set<std::size_t> visited;
  auto key = [w](CellCoord c) {
    return static_cast<std::size_t>(c.row) * w + c.col;
  };
  if (memory == QueenMemory::FullVisited) visited.insert(key(start));

  CellCoord pos = start;
  std::optional<CellCoord> prev;
  while (out.steps < max_steps) {
    std::vector<CellCoord> moves;
    for (const auto& n : neighbors4(pos, w, h)) {
      if (!grid.is_passable(n)) continue;
      if (memory == QueenMemory::PreviousCell) {
        if (prev && n == *prev) continue;
      } else if (visited.contains(key(n))) {
        continue;
      }
      moves.push_back(n);
    }
    if (moves.empty()) break;  // stuck

    const auto pick = moves.size() == 1
                          ? std::size_t{0}
                          : static_cast<std::size_t>(rng.uniform_int(
                                0, static_cast<std::int64_t>(moves.size()) - 1));
    prev = pos;
    pos = moves[pick];
    out.trace.push_back(pos);
    if (memory == QueenMemory::FullVisited) visited.insert(key(pos));
    ++out.steps;
    if (pos == target) {
      out.reached = true;
      return out;
    }
  }
  return out;
}

}  // namespace

SolveReport queen_march(const MazeGrid& grid, const QueenParams& params,
                        RandomSource& rng) {
  const CellCoord entrance = grid.find_first(CellKind::Entrance);
  const CellCoord exit_door = grid.find_first(CellKind::Exit);
  if (entrance.col < 0 || exit_door.col < 0)
    throw std::invalid_argument("queen_march: grid needs an entrance and an exit");
  if (params.trials < 1)
    throw std::invalid_argument("queen_march: trials must be at least 1");

  const int max_steps = params.resolved_max_steps(grid.width(), grid.height());
  const std::uint64_t salt = rng.next_u64();

  SolveReport report;
  report.method = SolveMethod::Queen;

  const CellCoord doors[2] = {entrance, exit_door};
  int total_steps = 0;
  for (int d = 0; d < 2; ++d) {
    const CellCoord start = doors[d];
    const CellCoord target = doors[1 - d];
    for (int t = 0; t < params.trials; ++t) {
      RandomSource walk_rng(derive_seed(salt, static_cast<std::uint64_t>(d) << 32 |
                                                  static_cast<std::uint64_t>(t)));
      WalkOutcome walk = random_walk(grid, start, target, max_steps,
                                     params.memory, walk_rng);
      total_steps += walk.steps;
      if (walk.reached) {
        if (d == 1) std::reverse(walk.trace.begin(), walk.trace.end());
        report.solvable = true;
        report.path = std::move(walk.trace);
        report.steps_taken = walk.steps;
        return report;
      }
    }
  }
  report.steps_taken = total_steps;
  return report;
}

SolveReport oracle_solvable(const MazeGrid& grid) {
  const CellCoord entrance = grid.find_first(CellKind::Entrance);
  const CellCoord exit_door = grid.find_first(CellKind::Exit);
  if (entrance.col < 0 || exit_door.col < 0)
    throw std::invalid_argument("oracle_solvable: grid needs an entrance and an exit");

  const int w = grid.width();
  const int h = grid.height();
  const std::size_t cell_count = static_cast<std::size_t>(w) * h;
  std::vector<int> parent(cell_count, -1);
  auto key = [w](CellCoord c) {
    return static_cast<std::size_t>(c.row) * w + c.col;
  };

  SolveReport report;
  report.method = SolveMethod::Oracle;

  std::deque<CellCoord> frontier{entrance};
  parent[key(entrance)] = static_cast<int>(key(entrance));
  int dequeued = 0;
  while (!frontier.empty()) {
    const CellCoord c = frontier.front();
    frontier.pop_front();
    ++dequeued;
    if (c == exit_door) {
      std::vector<CellCoord> path;
      CellCoord cur = c;
      while (true) {
        path.push_back(cur);
        const auto k = key(cur);
        if (parent[k] == static_cast<int>(k)) break;
        const auto pk = static_cast<std::size_t>(parent[k]);
        cur = {static_cast<int>(pk % w), static_cast<int>(pk / w)};
      }
      std::reverse(path.begin(), path.end());
      report.solvable = true;
      report.path = std::move(path);
      break;
    }
    for (const auto& n : neighbors4(c, w, h)) {
      if (!grid.is_passable(n) || parent[key(n)] >= 0) continue;
      parent[key(n)] = static_cast<int>(key(c));
      frontier.push_back(n);
    }
  }
  report.steps_taken = dequeued;
  return report;
}

}  // namespace swarmaze
