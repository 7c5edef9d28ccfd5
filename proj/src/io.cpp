#include "kgon/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgon/diameter.hpp"
#include "kgon/fptas.hpp"
#include "kgon/oracle.hpp"
#include "kgon/triangle_exact.hpp"

namespace kgon::io {

namespace {

std::string positioned(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <typename T>
T parse_number(const Token& tok, std::size_t line) {
  T value{};
  const char* end = tok.text.data() + tok.text.size();
  const auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(IoErrorKind::Syntax, "not a number: '" + std::string(tok.text) + "'", line,
                     tok.column);
  }
  return value;
}

Terrain parse_text(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  std::size_t li = 0;
  const auto next_nonblank = [&]() -> bool {
    while (li < lines.size() && split(lines[li]).empty()) ++li;
    return li < lines.size();
  };
  if (!next_nonblank()) throw ParseError(IoErrorKind::Syntax, "empty input", 1, 1);
  const auto head = split(lines[li]);
  if (head.size() != 1) {
    throw ParseError(IoErrorKind::Syntax, "expected the vertex count alone", li + 1,
                     head[std::min<std::size_t>(1, head.size() - 1)].column);
  }
  const long long n = parse_number<long long>(head[0], li + 1);
  if (n < 0) throw ParseError(IoErrorKind::Syntax, "negative vertex count", li + 1, head[0].column);
  ++li;

  std::vector<Point> pts;
  while (static_cast<long long>(pts.size()) < n) {
    if (!next_nonblank()) {
      throw ParseError(IoErrorKind::Syntax,
                       "expected " + std::to_string(n) + " vertices, found " +
                           std::to_string(pts.size()),
                       lines.size() + 1, 1);
    }
    const auto toks = split(lines[li]);
    if (toks.size() != 2) {
      const std::size_t col = toks.size() > 2 ? toks[2].column : lines[li].size() + 1;
      throw ParseError(IoErrorKind::Syntax, "expected 'x y'", li + 1, col);
    }
    pts.push_back({parse_number<double>(toks[0], li + 1), parse_number<double>(toks[1], li + 1)});
    ++li;
  }
  if (next_nonblank()) {
    throw ParseError(IoErrorKind::Syntax,
                     "more than " + std::to_string(n) + " vertices", li + 1,
                     split(lines[li])[0].column);
  }
  return build_terrain(std::move(pts));
}

Terrain parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line and column.
    const std::size_t byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(IoErrorKind::Syntax, "invalid JSON", line, col);
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(IoErrorKind::Syntax, "expected an object with a \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ParseError(IoErrorKind::Syntax,
                       "vertex " + std::to_string(pts.size()) + " is not [x, y]");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return build_terrain(std::move(pts));
}

std::vector<Point> original(const Terrain& t, std::span<const Point> pts) {
  std::vector<Point> out;
  for (const Point& p : pts) out.push_back({p.x, p.y + t.y_offset()});
  return out;
}

}  // namespace

ParseError::ParseError(IoErrorKind kind, const std::string& what, std::size_t line,
                       std::size_t column)
    : std::runtime_error(positioned(what, line, column)),
      kind_(kind),
      line_(line),
      column_(column) {}

Terrain parse_terrain_string(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

Terrain parse_terrain(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError(IoErrorKind::Io, "read failed");
  return parse_terrain_string(buf.str());
}

Terrain parse_terrain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(IoErrorKind::Io, "cannot open '" + path + "'");
  return parse_terrain(in);
}

std::string serialize_terrain(const Terrain& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (const Point& p : original(t, t.chain())) out += fmt(p.x) + " " + fmt(p.y) + "\n";
  return out;
}

std::string to_json(const ResultRecord& r) {
  using nlohmann::json;
  const auto pts = [](const std::vector<Point>& v) {
    json a = json::array();
    for (const Point& p : v) a.push_back({p.x, p.y});
    return a;
  };
  json config = {{"tie_break", r.tie_break}, {"tolerance", r.tolerance}};
  config["k"] = r.k ? json(*r.k) : json(nullptr);
  config["epsilon"] = r.epsilon ? json(*r.epsilon) : json(nullptr);
  json doc = {{"problem", r.problem},         {"measure", r.measure},
              {"value", r.value},             {"vertices", pts(r.vertices)},
              {"config", config},             {"wall_time_ms", r.wall_time_ms}};
  if (r.oracle) {
    doc["oracle"] = {{"value", r.oracle->value},
                     {"delta", r.oracle->delta},
                     {"vertices", pts(r.oracle->vertices)}};
  }
  return doc.dump(2);
}

std::string svg_string(const Terrain& t, const ResultRecord& r, const SvgOptions& opt) {
  const double x0 = t.x_min();
  const double x1 = t.x_max();
  const double y0 = t.y_offset();
  const double y1 = t.y_offset() + t.y_max();
  const double px = 0.05 * (x1 - x0);
  const double py = 0.05 * std::max(y1 - y0, 1e-12);
  // SVG y grows downwards, so every y is negated.
  const auto xy = [](Point p) { return fmt(p.x) + " " + fmt(-p.y); };

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(x0 - px) +
       " " + fmt(-(y1 + py)) + " " + fmt(x1 - x0 + 2 * px) + " " + fmt(y1 - y0 + 2 * py) +
       "\">\n";
  const double stroke = 0.004 * std::max(x1 - x0, y1 - y0);

  std::string d;
  for (const Point& p : original(t, t.chain())) d += (d.empty() ? "M " : " L ") + xy(p);
  s += "  <path d=\"" + d + " Z\" fill=\"#d9c7a3\" stroke=\"#6b5a3a\" stroke-width=\"" +
       fmt(stroke) + "\"/>\n";

  if (!opt.grid.empty()) {
    std::string g;
    for (const GridCell& c : opt.grid) {
      if (c.level != CellLevel::Fine) continue;
      const Point o{c.origin.x, c.origin.y + t.y_offset()};
      g += "M " + xy(o) + " h " + fmt(c.upper.x - c.origin.x) + " v " +
           fmt(-(c.upper.y - c.origin.y)) + " h " + fmt(-(c.upper.x - c.origin.x)) + " Z ";
    }
    s += "  <path d=\"" + g + "\" fill=\"none\" stroke=\"#9aa7b8\" stroke-width=\"" +
         fmt(stroke / 2) + "\"/>\n";
  }

  if (r.vertices.size() == 2) {
    s += "  <line x1=\"" + fmt(r.vertices[0].x) + "\" y1=\"" + fmt(-r.vertices[0].y) +
         "\" x2=\"" + fmt(r.vertices[1].x) + "\" y2=\"" + fmt(-r.vertices[1].y) +
         "\" stroke=\"#c0392b\" stroke-width=\"" + fmt(2 * stroke) + "\"/>\n";
  } else if (!r.vertices.empty()) {
    std::string p;
    for (const Point& v : r.vertices) p += (p.empty() ? "M " : " L ") + xy(v);
    s += "  <path d=\"" + p + " Z\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" +
         fmt(2 * stroke) + "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

void render_svg(const Terrain& t, const ResultRecord& r, const std::string& path,
                const SvgOptions& opt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(IoErrorKind::Io, "cannot write '" + path + "'");
  out << svg_string(t, r, opt);
  if (!out) throw ParseError(IoErrorKind::Io, "write to '" + path + "' failed");
}

namespace {

Terrain random_terrain(std::mt19937& rng, int n, int max_coord) {
  std::vector<int> xs(max_coord + 1);
  for (int i = 0; i <= max_coord; ++i) xs[i] = i;
  std::shuffle(xs.begin(), xs.end(), rng);
  xs.resize(n);
  std::sort(xs.begin(), xs.end());
  std::uniform_int_distribution<int> height(1, max_coord);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const bool end = i == 0 || i == n - 1;
    pts.push_back({static_cast<double>(xs[i]), end ? 0.0 : static_cast<double>(height(rng))});
  }
  return build_terrain(pts);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConfig:
    case ErrorKind::InfeasibleK:
    case ErrorKind::NoFeasibleTriangle:
    case ErrorKind::NoPolygonFound:
      return 3;
    default:
      return 2;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(IoErrorKind::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw ParseError(IoErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameter, largest triangle and approximate largest k-gon of 1.5D terrains",
               "terrain_cli"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string svg_path;
  std::string json_path;
  bool use_oracle = false;
  double delta = 0.05;
  unsigned seed = 1;
  double tolerance = predicates::kDefaultTolerance;
  bool grid = false;
  app.add_option("--svg", svg_path, "Write an SVG drawing to this file");
  app.add_option("--json", json_path, "Also write the JSON record to this file");
  app.add_flag("--oracle", use_oracle, "Run the brute-force oracle alongside");
  app.add_option("--delta", delta, "Oracle sampling step")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for the random subcommand");
  app.add_option("--tolerance", tolerance, "Predicate tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--grid", grid, "Overlay the approximation grid in the SVG");

  std::string file;
  auto* diameter = app.add_subcommand("diameter", "Longest chord");
  diameter->add_option("file", file, "Terrain file")->required();

  std::string tri_measure = "perimeter";
  auto* triangle = app.add_subcommand("triangle", "Exact largest-perimeter triangle");
  triangle->add_option("file", file, "Terrain file")->required();
  triangle->add_option("--measure", tri_measure)->check(CLI::IsMember({"perimeter"}));

  int k = 3;
  double epsilon = 0.25;
  std::string measure = "perimeter";
  auto* kgon_cmd = app.add_subcommand("kgon", "Approximate largest convex polygon, at most k vertices");
  kgon_cmd->add_option("file", file, "Terrain file")->required();
  kgon_cmd->add_option("-k", k, "Maximum number of vertices");
  kgon_cmd->add_option("--epsilon", epsilon, "Approximation parameter in (0, 1)");
  kgon_cmd->add_option("--measure", measure)->check(CLI::IsMember({"perimeter", "area"}));

  int random_n = 6;
  int max_coord = 20;
  auto* random = app.add_subcommand("random", "Print a random terrain in the text format");
  random->add_option("-n", random_n, "Vertex count")->check(CLI::Range(3, 1000));
  random->add_option("--max-coord", max_coord, "Coordinate range [0, C]")->check(CLI::Range(2, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const double saved_tolerance = predicates::tolerance();
  predicates::set_tolerance(tolerance);
  struct Restore {
    double tau;
    ~Restore() { predicates::set_tolerance(tau); }
  } restore{saved_tolerance};

  try {
    if (random->parsed()) {
      if (random_n > max_coord + 1) {
        err << "error: -n exceeds the number of distinct x values\n";
        return 2;
      }
      std::mt19937 rng(seed);
      out << serialize_terrain(random_terrain(rng, random_n, max_coord));
      return 0;
    }

    const Terrain t = parse_terrain_file(file);
    ResultRecord rec;
    rec.tolerance = tolerance;
    SvgOptions svg;
    const auto start = std::chrono::steady_clock::now();

    const auto run_diameter = [&] {
      const Chord c = compute_diameter(t);
      rec.problem = "diameter";
      rec.measure = "length";
      rec.value = c.length;
      const std::array<Point, 2> ends{c.seg.a, c.seg.b};
      rec.vertices = original(t, ends);
      if (use_oracle) {
        const auto o = oracle::oracle_diameter(t, delta);
        const std::array<Point, 2> oe{o.seg.a, o.seg.b};
        rec.oracle = OracleEcho{o.value, delta, original(t, oe)};
      }
    };

    if (diameter->parsed()) {
      run_diameter();
    } else if (triangle->parsed()) {
      const CandidateTriangle tri = largest_perimeter_triangle(t);
      rec.problem = "triangle";
      rec.measure = "perimeter";
      rec.value = tri.perimeter;
      rec.vertices = original(t, tri.vertices);
      rec.k = 3;
      if (use_oracle) {
        const auto o = oracle::oracle_best_kgon(t, 3, delta, Measure::Perimeter);
        rec.oracle = OracleEcho{o.value, o.effective_delta, original(t, o.vertices)};
      }
    } else {
      if (k == 2) {
        err << "notice: k = 2 has no polygon; reporting the diameter\n";
        run_diameter();
        rec.k = 2;
      } else {
        ApproxConfig cfg;
        cfg.k = k;
        cfg.epsilon = epsilon;
        cfg.measure = measure == "area" ? Measure::Area : Measure::Perimeter;
        cfg.validate();
        const ConvexPolygon poly = approximate_largest_kgon(t, cfg);
        rec.problem = "kgon";
        rec.measure = to_string(cfg.measure);
        rec.value = poly.measure_value;
        rec.vertices = original(t, poly.vertices);
        rec.k = k;
        rec.epsilon = epsilon;
        if (use_oracle) {
          const auto o = oracle::oracle_best_kgon(t, k, delta, cfg.measure);
          rec.oracle = OracleEcho{o.value, o.effective_delta, original(t, o.vertices)};
        }
        if (grid) svg.grid = build_grid(t, k, cfg.grid_epsilon(), seed_scale(t, k));
      }
    }
    rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    if (grid && svg.grid.empty()) {
      ApproxConfig cfg;
      svg.grid = build_grid(t, cfg.k, cfg.grid_epsilon(), seed_scale(t, cfg.k));
    }

    const std::string json = to_json(rec);
    out << json << "\n";
    if (!json_path.empty()) write_file(json_path, json + "\n");
    if (!svg_path.empty()) render_svg(t, rec, svg_path, svg);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == IoErrorKind::Io ? 1 : 2;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"terrain_cli"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kgon::io
