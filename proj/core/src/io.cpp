#include "swarmaze/io.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

namespace swarmaze {

namespace {

char kind_char(CellKind kind) {
  switch (kind) {
    case CellKind::Open: return '.';
    case CellKind::Wall: return '#';
    case CellKind::Entrance: return 'S';
    case CellKind::Exit: return 'E';
  }
  throw std::logic_error("kind_char: unknown cell kind");
}

std::optional<CellKind> kind_of(char c) {
  switch (c) {
    case '.': return CellKind::Open;
    case '#': return CellKind::Wall;
    case 'S': return CellKind::Entrance;
    case 'E': return CellKind::Exit;
    default: return std::nullopt;
  }
}

}  // namespace

std::string to_ascii(const MazeGrid& grid) {
  std::string out;
  out.reserve(static_cast<std::size_t>(grid.height()) * (grid.width() + 1));
  for (int row = 0; row < grid.height(); ++row) {
    for (int col = 0; col < grid.width(); ++col)
      out.push_back(kind_char(grid.at({col, row})));
    out.push_back('\n');
  }
  return out;
}

MazeGrid from_ascii(std::string_view text) {
  std::vector<std::string_view> rows;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      rows.push_back(text);
      break;
    }
    rows.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.size() < 2)
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "ascii maze needs at least 2 rows");
  const std::size_t width = rows.front().size();
  if (width < 2)
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "ascii maze needs at least 2 columns");

  MazeGrid grid(static_cast<int>(width), static_cast<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width)
      throw DecodeError(DecodeErrorKind::MalformedDocument,
                        "ascii maze rows must have equal length");
    for (std::size_t c = 0; c < width; ++c) {
      const auto kind = kind_of(rows[r][c]);
      if (!kind)
        throw DecodeError(DecodeErrorKind::AlphabetViolation,
                          "ascii maze cells must be one of #.SE");
      grid.set(*kind, {static_cast<int>(c), static_cast<int>(r)});
    }
  }
  return grid;
}

std::string to_pbm(const MazeGrid& grid, bool inflate) {
  const int w = grid.width();
  const int h = grid.height();

  const auto walled = [&](int col, int row) {
    const CellCoord c{col, row};
    if (!in_bounds(c, w, h)) return true;  // beyond the edge counts as wall
    return grid.at(c) == CellKind::Wall;
  };

  const int pw = inflate ? 2 * w : w;
  const int ph = inflate ? 2 * h : h;
  std::ostringstream out;
  out << "P1\n" << pw << ' ' << ph << '\n';

  if (!inflate) {
    for (int row = 0; row < h; ++row) {
      for (int col = 0; col < w; ++col) {
        if (col > 0) out << ' ';
        out << (walled(col, row) ? '1' : '0');
      }
      out << '\n';
    }
    return out.str();
  }

  // Each cell becomes a 2x2 block anchored top-left. Wall cells fill their
  // block; open cells keep the anchor clear and grow wall pixels toward
  // walled (or out-of-grid) right, down, and diagonal neighbors, so two
  // adjacent open cells always share a clear connecting pixel.
  std::vector<int> pixels(static_cast<std::size_t>(pw) * ph, 0);
  const auto px = [&](int x, int y) -> int& {
    return pixels[static_cast<std::size_t>(y) * pw + x];
  };
  for (int row = 0; row < h; ++row)
    for (int col = 0; col < w; ++col) {
      const int x = 2 * col;
      const int y = 2 * row;
      if (walled(col, row)) {
        px(x, y) = px(x + 1, y) = px(x, y + 1) = px(x + 1, y + 1) = 1;
        continue;
      }
      const bool right = walled(col + 1, row);
      const bool down = walled(col, row + 1);
      const bool diagonal = walled(col + 1, row + 1);
      if (right) px(x + 1, y) = 1;
      if (down) px(x, y + 1) = 1;
      if (right || down || diagonal) px(x + 1, y + 1) = 1;
    }

  for (int y = 0; y < ph; ++y) {
    for (int x = 0; x < pw; ++x) {
      if (x > 0) out << ' ';
      out << px(x, y);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

using nlohmann::json;

json config_to_params(const GeneratorConfig& c) {
  json params{
      {"population", c.population},
      {"best_bees", c.best_bees ? json(*c.best_bees) : json(nullptr)},
      {"alpha", c.alpha},
      {"beta", c.beta},
      {"rho", c.rho},
      {"zeta", c.zeta ? json(*c.zeta) : json(nullptr)},
      {"kappa", c.kappa},
      {"alleys", c.alleys},
      {"max_iterations", c.max_iterations},
      {"stop_check", c.stop_check == StopCheck::Queen ? "queen" : "oracle"},
      {"bee_replacement",
       c.bee_replacement == BeeReplacement::Clone ? "clone" : "reseed"},
      {"queen_memory",
       c.queen_memory == QueenMemory::FullVisited ? "visited" : "previous"},
      {"queen_trials", c.queen_trials},
      {"queen_max_steps", c.queen_max_steps},
  };
  if (c.entrance_at)
    params["entrance"] = json::array({c.entrance_at->col, c.entrance_at->row});
  if (c.exit_at)
    params["exit"] = json::array({c.exit_at->col, c.exit_at->row});
  return params;
}

// Narrow typed accessors; anything missing or mistyped is a malformed
// document, never an exception from the json library.
const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end())
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      std::string("missing field: ") + key);
  return *it;
}

std::int64_t require_int(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer())
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      std::string("field must be an integer: ") + key);
  return v.get<std::int64_t>();
}

double require_real(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number())
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      std::string("field must be a number: ") + key);
  return v.get<double>();
}

std::string require_string(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_string())
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      std::string("field must be a string: ") + key);
  return v.get<std::string>();
}

GeneratorConfig params_to_config(const json& params) {
  GeneratorConfig c;
  c.population = static_cast<int>(require_int(params, "population"));
  const json& best = require(params, "best_bees");
  if (best.is_null())
    c.best_bees = std::nullopt;
  else if (best.is_number_integer())
    c.best_bees = best.get<int>();
  else
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "field must be an integer or null: best_bees");
  c.alpha = require_real(params, "alpha");
  c.beta = require_real(params, "beta");
  c.rho = require_real(params, "rho");
  const json& zeta = require(params, "zeta");
  if (zeta.is_null())
    c.zeta = std::nullopt;
  else if (zeta.is_number())
    c.zeta = zeta.get<double>();
  else
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "field must be a number or null: zeta");
  c.kappa = require_real(params, "kappa");
  c.alleys = static_cast<int>(require_int(params, "alleys"));
  c.max_iterations = static_cast<int>(require_int(params, "max_iterations"));

  const std::string stop = require_string(params, "stop_check");
  if (stop == "oracle")
    c.stop_check = StopCheck::Oracle;
  else if (stop == "queen")
    c.stop_check = StopCheck::Queen;
  else
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "stop_check must be oracle or queen");

  const std::string replacement = require_string(params, "bee_replacement");
  if (replacement == "reseed")
    c.bee_replacement = BeeReplacement::Reseed;
  else if (replacement == "clone")
    c.bee_replacement = BeeReplacement::Clone;
  else
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "bee_replacement must be reseed or clone");

  const std::string memory = require_string(params, "queen_memory");
  if (memory == "previous")
    c.queen_memory = QueenMemory::PreviousCell;
  else if (memory == "visited")
    c.queen_memory = QueenMemory::FullVisited;
  else
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "queen_memory must be previous or visited");

  c.queen_trials = static_cast<int>(require_int(params, "queen_trials"));
  c.queen_max_steps = static_cast<int>(require_int(params, "queen_max_steps"));

  const auto read_door = [&](const char* key) -> std::optional<CellCoord> {
    const auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
        !(*it)[1].is_number_integer())
      throw DecodeError(DecodeErrorKind::MalformedDocument,
                        std::string(key) + " must be a [col, row] pair");
    return CellCoord{(*it)[0].get<int>(), (*it)[1].get<int>()};
  };
  c.entrance_at = read_door("entrance");
  c.exit_at = read_door("exit");
  return c;
}

}  // namespace

std::string to_json(const MazeGrid& grid, const GeneratorConfig& config,
                    std::uint64_t seed) {
  if (config.width != grid.width() || config.height != grid.height())
    throw std::invalid_argument("to_json: config and grid dimensions differ");

  std::string cells;
  cells.reserve(static_cast<std::size_t>(grid.width()) * grid.height());
  for (int row = 0; row < grid.height(); ++row)
    for (int col = 0; col < grid.width(); ++col)
      cells.push_back(kind_char(grid.at({col, row})));

  const json doc{
      {"schema_version", kSchemaVersion},
      {"generator", algorithm_id(config.algo)},
      {"width", grid.width()},
      {"height", grid.height()},
      {"seed", seed},
      {"cells", cells},
      {"params", config_to_params(config)},
  };
  return doc.dump(2) + "\n";
}

MazeDocument from_json(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw DecodeError(DecodeErrorKind::MalformedDocument, e.what());
  }
  if (!doc.is_object())
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "document must be a JSON object");

  const std::int64_t version = require_int(doc, "schema_version");
  if (version != kSchemaVersion)
    throw DecodeError(DecodeErrorKind::VersionMismatch,
                      "unsupported schema_version " + std::to_string(version));

  const int width = static_cast<int>(require_int(doc, "width"));
  const int height = static_cast<int>(require_int(doc, "height"));
  if (width < 2 || height < 2)
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "width and height must be at least 2");

  const json& seed_field = require(doc, "seed");
  if (!seed_field.is_number_unsigned() && !seed_field.is_number_integer())
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "field must be an integer: seed");
  const std::uint64_t seed = seed_field.get<std::uint64_t>();

  const std::string generator = require_string(doc, "generator");
  const auto algo = algorithm_from_id(generator);
  if (!algo)
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "unknown generator id: " + generator);

  const std::string cells = require_string(doc, "cells");
  if (cells.size() != static_cast<std::size_t>(width) * height)
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "cells length must equal width * height");

  MazeGrid grid(width, height);
  int entrances = 0;
  int exits = 0;
  for (int row = 0; row < height; ++row)
    for (int col = 0; col < width; ++col) {
      const char ch = cells[static_cast<std::size_t>(row) * width + col];
      const auto kind = kind_of(ch);
      if (!kind)
        throw DecodeError(DecodeErrorKind::AlphabetViolation,
                          "cells must be drawn from #.SE");
      if (*kind == CellKind::Entrance) ++entrances;
      if (*kind == CellKind::Exit) ++exits;
      grid.set(*kind, {col, row});
    }
  if (entrances != 1 || exits != 1)
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "maze needs exactly one entrance and one exit");
  for (const CellKind kind : {CellKind::Entrance, CellKind::Exit}) {
    const CellCoord door = grid.find_first(kind);
    if (!on_border(door, width, height))
      throw DecodeError(DecodeErrorKind::MalformedDocument,
                        "doors must lie on the border");
  }

  const json& params = require(doc, "params");
  if (!params.is_object())
    throw DecodeError(DecodeErrorKind::MalformedDocument,
                      "params must be an object");
  GeneratorConfig config = params_to_config(params);
  config.algo = *algo;
  config.width = width;
  config.height = height;
  config.seed = seed;

  return {std::move(grid), std::move(config), seed};
}

}  // namespace swarmaze
