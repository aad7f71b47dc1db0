#include "polymod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include "polymod/errors.hpp"
#include "polymod/oracle.hpp"
#include "polymod/record.hpp"
#include "polymod/scmap.hpp"

namespace polymod::cli {

namespace {

Shape parse_shape(const std::string& s) { return s == "pent" ? Shape::pentomino : Shape::tetromino; }

OutputRecord solve_record(Shape shape, double H) {
  return shape == Shape::pentomino ? make_record(solve_pentomino(H)) : make_record(solve_tetromino(H));
}

double analytic_module(Shape shape, double H) {
  return shape == Shape::pentomino ? solve_pentomino(H).module : solve_tetromino(H).module;
}

void emit(std::ostream& out, const std::string& format, const std::vector<OutputRecord>& recs, bool as_list) {
  if (format == "json") {
    out << (as_list ? to_json(recs) : to_json(recs.front())) << "\n";
  } else if (format == "csv") {
    out << csv_header(recs.front()) << "\r\n";
    for (const auto& r : recs) out << csv_row(r) << "\r\n";
  } else {
    out << (as_list ? to_table(recs) : to_table(recs.front()));
  }
}

int cmd_solve(Shape shape, double H, const std::string& format, std::ostream& out) {
  emit(out, format, {solve_record(shape, H)}, false);
  return kOk;
}

int cmd_sweep(Shape shape, double from, double to, int count, const std::string& format, std::ostream& out) {
  if (!(from > 0.0 && from < to)) throw DomainError("sweep needs 0 < from < to");
  if (count < 2) throw DomainError("sweep needs count >= 2");
  std::vector<double> hs(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) hs[k] = from * std::pow(to / from, static_cast<double>(k) / (count - 1));
  hs.front() = from;
  hs.back() = to;

  std::vector<OutputRecord> recs(hs.size());
  std::vector<std::exception_ptr> errors(hs.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      recs[k] = solve_record(shape, hs[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  emit(out, format, recs, true);
  return kOk;
}

int cmd_boundary(Shape shape, double H, int samples, const std::string& path, std::ostream& out) {
  if (samples < 2) throw DomainError("samples must be at least 2");
  const SCSpec spec =
      shape == Shape::pentomino ? build_sc_pent(solve_pentomino(H)) : build_sc_tet(solve_tetromino(H));
  const std::vector<Point> pts = trace_boundary(spec, samples);

  std::ofstream file(path);
  if (!file) throw std::ios_base::failure("cannot open " + path);
  file << "# " << shape_name(shape) << " H=" << format_double(H) << "\n";
  file << "# multiplier " << format_double(spec.multiplier.real()) << " " << format_double(spec.multiplier.imag())
       << "\n";
  for (const Prevertex& p : spec.prevertices) {
    file << "# " << p.name << " " << (p.at_infinity() ? std::string("inf") : format_double(p.location)) << " -> ("
         << format_double(p.target.real()) << "," << format_double(p.target.imag()) << ")\n";
  }
  file << "x,y\n";
  for (const Point& z : pts) file << format_double(z.real()) << "," << format_double(z.imag()) << "\n";
  file.flush();
  if (!file) throw std::ios_base::failure("write failed for " + path);
  out << "wrote " << pts.size() << " points to " << path << "\n";
  return kOk;
}

int cmd_check(Shape shape, double H, int grid, std::ostream& out) {
  if (grid < 16) throw DomainError("grid must be at least 16");
  const double analytic = analytic_module(shape, H);
  const QuadrilateralSpec q = shape == Shape::pentomino ? pentomino_quadrilateral(H) : tetromino_quadrilateral(H);
  std::vector<int> levels;
  if (grid / 4 >= 8) levels.push_back(grid / 4);
  levels.push_back(grid / 2);
  levels.push_back(grid);
  const RichardsonResult rr = richardson(q, levels);
  const double gap = std::abs(rr.value - analytic);
  const bool pass = check_passes(gap, rr.error);

  out << "shape            " << shape_name(shape) << "\n";
  out << "H                " << format_double(H) << "\n";
  out << "analytic_module  " << format_double(analytic) << "\n";
  out << "oracle_module    " << format_double(rr.value) << " +- " << format_double(rr.error) << "\n";
  out << "observed_order   " << format_double(rr.order) << (rr.warning ? "  (non-monotone: finest value)" : "")
      << "\n";
  out << "grid_levels     ";
  for (std::size_t k = 0; k < levels.size(); ++k) out << " " << levels[k] << ":" << format_double(rr.modules[k]);
  out << "\n";
  out << "abs_gap          " << format_double(gap) << "\n";
  out << "rel_gap          " << format_double(gap / analytic) << "\n";
  out << "verdict          " << (pass ? "agree" : "DISAGREE") << " (gap vs 3 x error bar)\n";
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int report_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SetupError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  }
}

bool check_passes(double gap, double error_bar) { return gap <= 3.0 * error_bar; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conformal modules of the stretched P-pentomino and L-tetromino"};
  app.require_subcommand(1);
  const std::vector<std::string> shapes = {"pent", "tet"};
  const std::vector<std::string> formats = {"json", "csv", "table"};

  std::string shape;
  std::string format = "json";
  double H = 0.0;
  double from = 0.0;
  double to = 0.0;
  int count = 0;
  int samples = 0;
  int grid = 0;
  std::string path;

  auto* solve = app.add_subcommand("solve", "Solve one shape and print all parameters");
  solve->add_option("shape", shape, "pent or tet")->required()->check(CLI::IsMember(shapes));
  solve->add_option("--H", H, "stretch factor")->required();
  solve->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* sweep = app.add_subcommand("sweep", "Log-spaced sweep over H");
  sweep->add_option("shape", shape)->required()->check(CLI::IsMember(shapes));
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--count", count)->required();
  sweep->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* boundary = app.add_subcommand("boundary", "Trace the image of the real axis");
  boundary->add_option("shape", shape)->required()->check(CLI::IsMember(shapes));
  boundary->add_option("--H", H)->required();
  boundary->add_option("--samples", samples)->required();
  boundary->add_option("--out", path)->required();

  auto* check = app.add_subcommand("check", "Compare with the grid oracle");
  check->add_option("shape", shape)->required()->check(CLI::IsMember(shapes));
  check->add_option("--H", H)->required();
  check->add_option("--grid", grid)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Shape s = parse_shape(shape);
    if (solve->parsed()) return cmd_solve(s, H, format, out);
    if (sweep->parsed()) return cmd_sweep(s, from, to, count, format, out);
    if (boundary->parsed()) return cmd_boundary(s, H, samples, path, out);
    return cmd_check(s, H, grid, out);
  } catch (...) {
    return report_current_exception(err);
  }
}

}  // namespace polymod::cli
