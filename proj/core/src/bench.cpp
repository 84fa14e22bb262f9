#include "swarmaze/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>

#include "swarmaze/generate.hpp"
#include "swarmaze/validator.hpp"

namespace swarmaze {

MazeGrid prim_baseline(int width, int height, RandomSource& rng) {
  if (width < 2 || height < 2)
    throw std::invalid_argument("prim_baseline: grid must be at least 2x2");

  // Logical cells sit at odd pixel coordinates; the spanning tree is built
  // over them and passages open the pixel between two joined cells. Even
  // trailing columns/rows stay walled padding.
  const int cells_w = std::max(1, (width - 1) / 2);
  const int cells_h = std::max(1, (height - 1) / 2);
  MazeGrid grid(width, height, CellKind::Wall);

  const auto cell_px = [](int cx, int cy) -> CellCoord {
    return {2 * cx + 1, 2 * cy + 1};
  };

  std::vector<char> in_tree(static_cast<std::size_t>(cells_w) * cells_h, 0);
  const auto tree_index = [cells_w](int cx, int cy) {
    return static_cast<std::size_t>(cy) * cells_w + cx;
  };

  struct Edge {
    int cx, cy;        // cell already in the tree
    int nx, ny;        // candidate cell
  };
  std::vector<Edge> frontier;
  const auto push_edges = [&](int cx, int cy) {
    const int deltas[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
    for (const auto& d : deltas) {
      const int nx = cx + d[0];
      const int ny = cy + d[1];
      if (nx < 0 || nx >= cells_w || ny < 0 || ny >= cells_h) continue;
      if (!in_tree[tree_index(nx, ny)]) frontier.push_back({cx, cy, nx, ny});
    }
  };

  const int start_x = static_cast<int>(rng.uniform_int(0, cells_w - 1));
  const int start_y = static_cast<int>(rng.uniform_int(0, cells_h - 1));
  in_tree[tree_index(start_x, start_y)] = 1;
  grid.set(CellKind::Open, cell_px(start_x, start_y));
  push_edges(start_x, start_y);

  while (!frontier.empty()) {
    const auto pick = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(frontier.size()) - 1));
    const Edge edge = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    if (in_tree[tree_index(edge.nx, edge.ny)]) continue;

    in_tree[tree_index(edge.nx, edge.ny)] = 1;
    const CellCoord a = cell_px(edge.cx, edge.cy);
    const CellCoord b = cell_px(edge.nx, edge.ny);
    grid.set(CellKind::Open, b);
    grid.set(CellKind::Open, {(a.col + b.col) / 2, (a.row + b.row) / 2});
    push_edges(edge.nx, edge.ny);
  }

  // Doors come from the shared placement rule, then snap onto an odd row so
  // each opens straight into a carved cell; the wall ring between a door and
  // its nearest cell is cut through.
  const auto doors = place_entrances(width, height, rng);
  const auto snap_row = [&](int row) {
    const int top = 1;
    const int bottom = 2 * cells_h - 1;
    int odd = (row % 2 == 1) ? row : row - 1;
    return std::clamp(odd, top, bottom);
  };

  const CellCoord entrance{0, snap_row(doors.first.row)};
  const CellCoord exit_door{width - 1, snap_row(doors.second.row)};
  grid.set(CellKind::Entrance, entrance);
  grid.set(CellKind::Exit, exit_door);
  for (int col = 1; col < width - 1; ++col) {  // cut inward from the left door
    const CellCoord c{col, entrance.row};
    if (grid.at(c) != CellKind::Wall) break;
    grid.set(CellKind::Open, c);
  }
  for (int col = width - 2; col > 0; --col) {  // and from the right door
    const CellCoord c{col, exit_door.row};
    if (grid.at(c) != CellKind::Wall) break;
    grid.set(CellKind::Open, c);
  }
  return grid;
}

namespace {

BenchRecord run_one(Algorithm algo, int width, int height,
                    const GeneratorConfig& base, std::uint64_t seed) {
  GeneratorConfig config = base;
  config.algo = algo;
  config.width = width;
  config.height = height;
  config.seed = seed;

  const auto start = std::chrono::steady_clock::now();
  const GenerationResult result = generate_maze(config);
  const auto stop = std::chrono::steady_clock::now();

  BenchRecord record;
  record.generator = algo;
  record.width = width;
  record.height = height;
  record.fields = static_cast<std::int64_t>(width) * height;
  record.seed = seed;
  record.wall_clock_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  record.iterations = result.iterations;
  record.solvable = !result.cap_hit && oracle_solvable(result.grid).solvable;
  return record;
}

constexpr Algorithm kGenerators[] = {Algorithm::Aaca, Algorithm::Abca,
                                     Algorithm::Prim};

std::string format_ms(double ms) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", ms);
  return buffer;
}

}  // namespace

std::vector<BenchRecord> run_sweep(std::span<const std::pair<int, int>> sizes,
                                   int repeats, const GeneratorConfig& base,
                                   bool parallel) {
  if (repeats < 1)
    throw std::invalid_argument("run_sweep: repeats must be at least 1");

  struct Planned {
    Algorithm algo;
    int width, height;
    std::uint64_t seed;
  };
  std::vector<Planned> plan;
  for (std::size_t s = 0; s < sizes.size(); ++s)
    for (std::size_t g = 0; g < std::size(kGenerators); ++g)
      for (int r = 0; r < repeats; ++r) {
        const std::uint64_t tag = (static_cast<std::uint64_t>(s) << 32) |
                                  (static_cast<std::uint64_t>(g) << 16) |
                                  static_cast<std::uint64_t>(r);
        plan.push_back({kGenerators[g], sizes[s].first, sizes[s].second,
                        derive_seed(base.seed, tag)});
      }

  std::vector<BenchRecord> records;
  records.reserve(plan.size());

  if (parallel) {
    std::vector<std::future<BenchRecord>> futures;
    futures.reserve(plan.size());
    for (const auto& p : plan)
      futures.push_back(std::async(std::launch::async, [&base, p] {
        return run_one(p.algo, p.width, p.height, base, p.seed);
      }));
    for (auto& f : futures) records.push_back(f.get());
    return records;
  }

  // Warm-up: first planned run of each (size, generator) once, discarded.
  std::size_t next_warm = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (i == next_warm) {
      run_one(plan[i].algo, plan[i].width, plan[i].height, base, plan[i].seed);
      next_warm += static_cast<std::size_t>(repeats);
    }
    records.push_back(
        run_one(plan[i].algo, plan[i].width, plan[i].height, base, plan[i].seed));
  }
  return records;
}

std::string to_csv(std::span<const BenchRecord> records) {
  std::string out =
      "generator,width,height,fields,seed,wall_clock_ms,iterations,solvable\n";
  for (const auto& r : records) {
    out += algorithm_id(r.generator);
    out += ',';
    out += std::to_string(r.width);
    out += ',';
    out += std::to_string(r.height);
    out += ',';
    out += std::to_string(r.fields);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += format_ms(r.wall_clock_ms);
    out += ',';
    out += std::to_string(r.iterations);
    out += ',';
    out += r.solvable ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string to_long_csv(std::span<const BenchRecord> records) {
  std::string out = "generator,width,height,fields,seed,metric,value\n";
  for (const auto& r : records) {
    const std::string prefix = algorithm_id(r.generator) + ',' +
                               std::to_string(r.width) + ',' +
                               std::to_string(r.height) + ',' +
                               std::to_string(r.fields) + ',' +
                               std::to_string(r.seed) + ',';
    out += prefix + "wall_clock_ms," + format_ms(r.wall_clock_ms) + '\n';
    out += prefix + "iterations," + std::to_string(r.iterations) + '\n';
    out += prefix + "solvable," + (r.solvable ? "1" : "0") + '\n';
  }
  return out;
}

std::vector<std::string> median_summary(std::span<const BenchRecord> records) {
  std::map<std::pair<std::string, std::int64_t>, std::vector<double>> groups;
  for (const auto& r : records)
    groups[{algorithm_id(r.generator), r.fields}].push_back(r.wall_clock_ms);

  std::vector<std::string> lines;
  for (auto& [key, times] : groups) {
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    const double median =
        n % 2 == 1 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
    std::ostringstream line;
    line << key.first << " fields=" << key.second
         << " median_ms=" << format_ms(median) << " runs=" << n;
    lines.push_back(line.str());
  }
  return lines;
}

}  // namespace swarmaze
