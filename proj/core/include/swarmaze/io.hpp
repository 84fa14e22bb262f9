#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "swarmaze/config.hpp"
#include "swarmaze/grid.hpp"

namespace swarmaze {

/// One row per line, trailing newline: '#' wall, '.' open, 'S' entrance,
/// 'E' exit. Byte-stable.
std::string to_ascii(const MazeGrid& grid);

/// Inverse of to_ascii. Throws DecodeError on unknown characters or ragged
/// rows.
MazeGrid from_ascii(std::string_view text);

/// Plain portable bitmap (P1): 1 = wall pixel, 0 = open; doors render open.
/// With inflate each cell becomes a 2x2 block, walls bleed into the pixels
/// facing a wall (or the grid edge), and corridors stay connected; the
/// bitmap doubles in both dimensions.
std::string to_pbm(const MazeGrid& grid, bool inflate);

enum class DecodeErrorKind { MalformedDocument, VersionMismatch, AlphabetViolation };

class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  DecodeErrorKind kind() const { return kind_; }

 private:
  DecodeErrorKind kind_;
};

struct MazeDocument {
  MazeGrid grid;
  GeneratorConfig config;
  std::uint64_t seed = 0;
};

inline constexpr int kSchemaVersion = 1;

/// Self-reproducing maze document: schema version, dimensions, row-major
/// cell string over the alphabet #.SE, generator id, the full parameter set,
/// and the seed. Deterministic byte output (sorted keys).
std::string to_json(const MazeGrid& grid, const GeneratorConfig& config,
                    std::uint64_t seed);

/// Inverse of to_json. Throws DecodeError: MalformedDocument for bad JSON or
/// missing/ill-typed fields, VersionMismatch for a foreign schema_version,
/// AlphabetViolation for cell characters outside #.SE.
MazeDocument from_json(std::string_view bytes);

}  // namespace swarmaze
