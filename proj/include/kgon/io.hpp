#pragma once
// Terrain parsing, result records, SVG rendering and the command-line driver.

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgon/grid.hpp"
#include "kgon/terrain.hpp"

namespace kgon::io {

enum class IoErrorKind { Io, Syntax };

class ParseError : public std::runtime_error {
 public:
  ParseError(IoErrorKind kind, const std::string& what, std::size_t line = 0,
             std::size_t column = 0);
  IoErrorKind kind() const { return kind_; }
  // 1-based; 0 when the error has no position (e.g. the file is missing).
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  IoErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

// Text ("n" then n lines "x y") or JSON {"vertices": [[x, y], ...]}.
// Validation errors from build_terrain propagate unchanged.
Terrain parse_terrain(std::istream& in);
Terrain parse_terrain_string(const std::string& text);
Terrain parse_terrain_file(const std::string& path);

// Text format in the original coordinates, %.17g per value.
std::string serialize_terrain(const Terrain& t);

struct OracleEcho {
  double value = 0.0;
  double delta = 0.0;
  std::vector<Point> vertices;
};

struct ResultRecord {
  std::string problem;  // diameter | triangle | kgon
  std::string measure;  // length | perimeter | area
  double value = 0.0;
  std::vector<Point> vertices;  // original coordinates
  std::optional<int> k;
  std::optional<double> epsilon;
  std::string tie_break = "lexicographic";
  double tolerance = 0.0;
  long long wall_time_ms = 0;
  std::optional<OracleEcho> oracle;
};

std::string to_json(const ResultRecord& r);

struct SvgOptions {
  // Grid cells drawn as one extra path; empty means no overlay.
  std::vector<GridCell> grid;
};

std::string svg_string(const Terrain& t, const ResultRecord& r, const SvgOptions& opt = {});
void render_svg(const Terrain& t, const ResultRecord& r, const std::string& path,
                const SvgOptions& opt = {});

// Exit codes: 0 ok, 1 I/O failure, 2 invalid input or arguments,
// 3 infeasible configuration.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgon::io
