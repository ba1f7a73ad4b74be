#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "frieze/arithmetic.hpp"
#include "frieze/cluster.hpp"
#include "frieze/coxeter_conway.hpp"
#include "frieze/io.hpp"

using namespace frieze;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::vector<Rat> parse_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rat::parse(item));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return out;
}

std::string list_str(const std::vector<Rat>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

std::string render(const Frieze2Window& w, const std::string& format) { return format == "csv" ? window_to_csv(w) : window_to_json(w); }

std::shared_ptr<spdlog::logger> make_logger() {
  auto log = spdlog::stderr_color_mt("frieze");
  log->set_pattern("%l: %v");
  const char* level = std::getenv("FRIEZE_LOG");
  log->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
  return log;
}

}  // namespace

int main(int argc, char** argv) {
  auto log = make_logger();
  CLI::App app{"Exact computations with 2-frieze patterns"};
  app.require_subcommand(1);

  std::string frieze_path, format = "json", out_path, in_path, positions, values, shape = "zigzag", quiddity, f_path, g_path, polygon_path,
                           points_path, init;
  int n = 0, depth = -1, jobs = 1, steps = 0, count_n = 0;
  long p = 0, q = 0, cut = 3, cut_f = 3, cut_g = 0, rows = 6, cols = 11;
  std::int64_t bound = 8;
  std::string method = "recurrence";

  auto* gen = app.add_subcommand("gen", "Generate the frieze window of a coefficient row");
  gen->add_option("--frieze", frieze_path, "Frieze JSON")->required();
  gen->add_option("--depth", depth, "Rows to generate (default n - 3)");
  gen->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* check = app.add_subcommand("check", "Report whether a coefficient row closes");
  check->add_option("--frieze", frieze_path, "Frieze JSON")->required();

  auto* entries = app.add_subcommand("entries", "One entry by doubled index");
  entries->add_option("--frieze", frieze_path, "Frieze JSON")->required();
  entries->add_option("--p", p, "Doubled first index")->required();
  entries->add_option("--q", q, "Doubled second index")->required();
  entries->add_option("--method", method, "recurrence, determinant or polygon")->check(CLI::IsMember({"recurrence", "determinant", "polygon"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Arithmetic friezes with chart values up to a bound");
  enumerate_cmd->add_option("--n", n, "Period")->required()->check(CLI::Range(4, 64));
  enumerate_cmd->add_option("--bound", bound, "Chart value bound")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 20));
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  enumerate_cmd->add_option("--out", out_path, "Write tuples as JSON lines");

  auto* orbits = app.add_subcommand("orbits", "Dihedral orbits of a set of tuples");
  orbits->add_option("--in", in_path, "JSON lines from enumerate")->required();

  auto* stab = app.add_subcommand("stabilize", "Insert one vertex");
  stab->add_option("--frieze", frieze_path, "Frieze JSON")->required();
  stab->add_option("--cut", cut, "Position of the inserted 1, 1");

  auto* consum = app.add_subcommand("consum", "Connected sum of two arithmetic friezes");
  consum->add_option("--f", f_path, "First frieze JSON")->required();
  consum->add_option("--g", g_path, "Second frieze JSON")->required();
  consum->add_option("--cut-f", cut_f, "Cut in the first row of f");
  consum->add_option("--cut-g", cut_g, "Rotation of g");

  auto* polygon = app.add_subcommand("polygon", "Polygon of a frieze, or coefficients of a polygon");
  auto* polygon_group = polygon->add_option_group("source");
  polygon_group->add_option("--frieze", frieze_path, "Frieze JSON");
  polygon_group->add_option("--polygon", polygon_path, "Polygon JSON");
  polygon_group->require_option(1);

  auto* lift = app.add_subcommand("lift", "Lift projective points to unit-determinant vectors");
  lift->add_option("--points", points_path, "Points JSON")->required();

  auto* belt = app.add_subcommand("belt", "Bipartite belt of seeds");
  belt->add_option("--n", n, "Period")->required()->check(CLI::Range(5, 64));
  belt->add_option("--init", init, "Comma-separated x_1..x_m, y_1..y_m (default all 1)");
  belt->add_option("--steps", steps, "Mutation steps")->required()->check(CLI::Range(0, 100000));

  auto* zigzag = app.add_subcommand("zigzag", "Zig-zag charts");
  zigzag->add_option("--n", n, "Period")->required()->check(CLI::Range(5, 64));
  zigzag->add_option("--positions", positions, "Comma-separated left column of each row")->required();
  auto* zz_group = zigzag->add_option_group("data");
  zz_group->add_option("--values", values, "Chart values by vertex: x_1..x_m, y_1..y_m");
  zz_group->add_option("--frieze", frieze_path, "Read the chart off this frieze");
  bool quiver_only = false;
  zz_group->add_flag("--quiver", quiver_only, "Print the chart's quiver");
  zz_group->require_option(1);
  zigzag->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* omega = app.add_subcommand("omega", "Rank of the cluster 2-form");
  omega->add_option("--n", n, "Period")->required()->check(CLI::Range(5, 200));

  auto* cc = app.add_subcommand("cc", "Classical friezes");
  auto* cc_group = cc->add_option_group("mode");
  cc_group->add_option("--quiddity", quiddity, "Comma-separated c_1..c_n");
  cc_group->add_option("--count", count_n, "Count arithmetic friezes of this period")->check(CLI::Range(3, 20));
  cc_group->require_option(1);
  cc->add_option("--depth", depth, "Rows to print with --quiddity (default n - 2)");

  auto* grow = app.add_subcommand("grow", "Infinite frieze from a unit zig-zag");
  grow->add_option("--shape", shape, "staircase, two-columns or zigzag")->check(CLI::IsMember({"staircase", "two-columns", "zigzag"}));
  grow->add_option("--rows", rows, "Rows")->check(CLI::Range(1L, 200L));
  grow->add_option("--cols", cols, "Columns")->check(CLI::Range(1L, 200L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const CoefficientRow c = frieze_from_json(read_file(frieze_path));
      const int d = depth >= 0 ? depth : c.n() - 3;
      std::cout << render(frieze_from_coefficients(c, d), format);
    } else if (*check) {
      const CoefficientRow c = frieze_from_json(read_file(frieze_path));
      const Monodromy m = monodromy(c);
      if (m.m == MatExact::identity(3)) {
        std::cout << "closed: true, width: " << c.n() - 4 << "\n";
      } else {
        std::cout << "closed: false, monodromy: " << m.m.str() << "\n";
      }
    } else if (*entries) {
      const CoefficientRow c = frieze_from_json(read_file(frieze_path));
      const DoubledIndex d{p, q};
      validate(d);
      if (method == "determinant") {
        std::cout << entry_by_determinant(c, d).str() << "\n";
      } else if (method == "polygon") {
        std::cout << polygon_to_frieze(solve_polygon(c), d).str() << "\n";
      } else {
        if (d.row() < -3) throw ContractError("rows above -3 are not part of the pattern");
        const Frieze2Window w = frieze_from_coefficients(c, static_cast<int>(std::max(d.row() + 1, 1L)));
        std::cout << w.at(d).str() << "\n";
      }
    } else if (*enumerate_cmd) {
      log->info("enumerating n = {} with bound {} on {} thread(s)", n, bound, jobs);
      const std::set<Tuple> found = enumerate({n, bound, jobs});
      if (!out_path.empty()) write_file(out_path, tuples_to_json_lines(found));
      std::cout << "count: " << found.size() << ", bound: " << bound << "\n";
    } else if (*orbits) {
      const std::vector<Orbit> list = dihedral_orbits(tuples_from_json_lines(read_file(in_path)));
      for (const Orbit& o : list) {
        std::cout << "size: " << o.size << ", representative: [";
        for (std::size_t i = 0; i < o.representative.size(); ++i) std::cout << (i ? ", " : "") << o.representative[i];
        std::cout << "]\n";
      }
      std::cout << "orbits: " << list.size() << "\n";
    } else if (*stab) {
      const ArithFrieze f(frieze_from_json(read_file(frieze_path)));
      std::cout << frieze_to_json(stabilize(f, cut).coeffs());
    } else if (*consum) {
      const ArithFrieze f(frieze_from_json(read_file(f_path)));
      const ArithFrieze g(frieze_from_json(read_file(g_path)));
      std::cout << frieze_to_json(connected_sum(f, g, cut_f, cut_g).coeffs());
    } else if (*polygon) {
      if (!frieze_path.empty()) {
        std::cout << polygon_to_json(solve_polygon(frieze_from_json(read_file(frieze_path))));
      } else {
        std::cout << frieze_to_json(polygon_to_coefficients(polygon_from_json(read_file(polygon_path))));
      }
    } else if (*lift) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(points_path));
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
      }
      if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) throw FormatError("points JSON needs a \"points\" array");
      std::vector<Vec3f> pts;
      for (const auto& pt : j["points"]) {
        if (!pt.is_array() || pt.size() != 3) throw FormatError("points have 3 coordinates");
        Vec3f v{};
        for (std::size_t k = 0; k < 3; ++k) {
          if (!pt[k].is_number()) throw FormatError("point coordinates must be numbers");
          v[k] = pt[k].get<double>();
        }
        pts.push_back(v);
      }
      const LiftResult res = lift_projective(pts);
      nlohmann::json out{{"vertices", res.vertices}, {"negative_orientation", res.negative_orientation}};
      std::cout << out.dump() << "\n";
    } else if (*belt) {
      std::vector<Rat> start = init.empty() ? std::vector<Rat>(static_cast<std::size_t>(2 * (n - 4)), Rat(1)) : parse_list(init);
      for (const Seed& s : bipartite_belt(n, start, steps)) std::cout << seed_to_json(s);
    } else if (*zigzag) {
      std::vector<long> pos;
      for (const Rat& x : parse_list(positions)) {
        if (!x.is_integer()) throw FormatError("positions must be integers");
        pos.push_back(static_cast<long>(x.to_int64()));
      }
      const ZigZag z = ZigZag::from_positions(n, pos);
      if (quiver_only) {
        std::cout << quiver_to_json(zigzag_quiver(z));
      } else if (!values.empty()) {
        std::cout << render(frieze_from_zigzag(z, parse_list(values)), format);
      } else {
        const CoefficientRow c = frieze_from_json(read_file(frieze_path));
        if (c.n() != n) throw ContractError("frieze has a different n");
        std::cout << list_str(read_zigzag(frieze_from_coefficients(c, n - 4), z)) << "\n";
      }
    } else if (*omega) {
      const OmegaForm form = omega_matrix(n);
      std::cout << "rank: " << form.rank << ", corank: " << form.omega.rows() - form.rank
                << ", nullvector: " << (form.null_vector ? list_str(*form.null_vector) : "[]") << "\n";
    } else if (*cc) {
      if (count_n > 0) {
        std::cout << "count: " << cc_enumerate(count_n).size() << "\n";
      } else {
        const ClassicalFrieze f(parse_list(quiddity));
        const CcClosure closure = cc_closure(f);
        std::cout << "closed: " << (closure == CcClosure::MinusIdentity ? "true" : "false")
                  << ", monodromy: " << (closure == CcClosure::MinusIdentity ? "-Id" : closure == CcClosure::PlusIdentity ? "Id" : cc_monodromy(f).str()) << "\n";
        const CcWindow w = cc_frieze(f, depth >= 0 ? std::max(depth, 1) : std::max(f.n() - 2, 1));
        for (long r = 0; r < w.depth(); ++r) {
          for (long j = 1; j <= w.n(); ++j) std::cout << (j > 1 ? "," : "") << w.at(r, j).str();
          std::cout << "\n";
        }
      }
    } else if (*grow) {
      const UnitShape s = shape == "staircase" ? UnitShape::Staircase : shape == "two-columns" ? UnitShape::TwoColumns : UnitShape::ZigZag;
      const InfiniteFrieze g = grow_from_unit_zigzag(unit_boundary(s, rows + cols + 2), rows, cols);
      for (long r = 0; r < g.rows(); ++r) {
        for (long h = 1; h <= g.cols(); ++h) {
          const auto& v = g.at(r, h);
          std::cout << (h > 1 ? "," : "") << (v ? v->str() : "");
        }
        std::cout << "\n";
      }
    }
  } catch (const DomainError& e) {
    log->error("{}", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    log->error("{}", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    log->error("{}", e.what());
    return 2;
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return 1;
  }
  return 0;
}
