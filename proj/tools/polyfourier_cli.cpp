#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polyfourier/polyfourier.hpp"

namespace pf = polyfourier;

namespace {

void emit(const pf::RunOutput& out, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  pf::io::write_report(out_dir + "/report.json", out.report);
  if (!out.csv_rows.empty())
    pf::io::write_csv(out_dir + "/trace.csv", out.csv_header, out.csv_rows);
  std::cout << out.report.dump(2) << "\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Fourier-Laplace transforms of polytopal regions and their scans"};
  app.require_subcommand(1);

  std::string region_path, curve_path, circle_path, z_string, direction, out_dir = ".";
  int grid = 4096;
  double ymax = 4.0;
  uint64_t seed = 0;
  bool oracle = false, no_assert = false;

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_dir, "output directory"); };

  CLI::App* transform = app.add_subcommand("transform", "transform evaluation");
  transform->require_subcommand(1);
  CLI::App* eval = transform->add_subcommand("eval", "evaluate at one complex frequency");
  eval->add_option("--region", region_path, "region JSON file")->required();
  eval->add_option("--z", z_string, "frequency, \"re,im;re,im;...\"")->required();
  eval->add_flag("--oracle", oracle, "also run the quadrature oracle");
  add_out(eval);

  CLI::App* scan = app.add_subcommand("scan", "min-modulus scan along a curve or circle");
  scan->add_option("--region", region_path, "region JSON file")->required();
  scan->add_option("--curve", curve_path, "curve JSON file");
  scan->add_option("--circle", circle_path, "circle JSON file");
  scan->add_option("--grid", grid, "number of grid points");
  add_out(scan);

  CLI::App* circle = app.add_subcommand("circle", "circle commands");
  circle->require_subcommand(1);
  CLI::App* cscan = circle->add_subcommand("scan", "min-modulus scan on a trig circle");
  cscan->add_option("--region", region_path, "region JSON file")->required();
  cscan->add_option("--circle", circle_path, "circle JSON file")->required();
  cscan->add_option("--grid", grid, "number of grid points");
  add_out(cscan);

  CLI::App* dominance = app.add_subcommand("dominance", "dominant-term growth report");
  dominance->add_option("--region", region_path, "region JSON file")->required();
  dominance->add_option("--circle", circle_path, "circle JSON file")->required();
  dominance->add_option("--ymax", ymax, "top of the vertical parameter line");
  add_out(dominance);

  CLI::App* planar = app.add_subcommand("planar", "planar reduction commands");
  planar->require_subcommand(1);
  CLI::App* reduce = planar->add_subcommand("reduce", "directional-derivative segment measure");
  reduce->add_option("--region", region_path, "region JSON file")->required();
  reduce->add_option("--direction", direction, "direction \"dx,dy\"")->required();
  add_out(reduce);

  CLI::App* curve = app.add_subcommand("curve", "curve commands");
  curve->require_subcommand(1);
  CLI::App* check = curve->add_subcommand("check", "containment, pair criterion, and scan");
  check->add_option("--region", region_path, "region JSON file")->required();
  check->add_option("--curve", curve_path, "curve JSON file")->required();
  check->add_option("--grid", grid, "number of grid points");
  add_out(check);

  CLI::App* demo = app.add_subcommand("pompeiu-demo", "disk counterexample vs region scans");
  demo->add_option("--region", region_path, "region JSON file (default: unit square)");
  demo->add_option("--seed", seed, "seed for the complex radii");
  demo->add_option("--grid", grid, "real-slice grid size");
  demo->add_flag("--no-assert", no_assert, "report without asserting thresholds");
  add_out(demo);

  CLI11_PARSE(app, argc, argv);

  pf::RunOutput out;
  if (eval->parsed()) {
    out = pf::harness::transform_eval(pf::io::load_region_file(region_path),
                                      pf::io::parse_z_string(z_string), oracle);
  } else if (scan->parsed() || cscan->parsed()) {
    pf::PolytopalRegion R = pf::io::load_region_file(region_path);
    pf::ParametricCurve g;
    if (!curve_path.empty())
      g = pf::io::load_curve_file(curve_path);
    else if (!circle_path.empty())
      g = pf::trig_circle_curve(pf::io::load_circle_file(circle_path));
    else
      throw pf::DegenerateInput("scan needs --curve or --circle");
    out = pf::harness::circle_scan(R, g, grid);
  } else if (dominance->parsed()) {
    out = pf::harness::dominance_run(pf::io::load_region_file(region_path),
                                     pf::io::load_circle_file(circle_path), ymax);
  } else if (reduce->parsed()) {
    size_t comma = direction.find(',');
    if (comma == std::string::npos) throw pf::DegenerateInput("direction must be \"dx,dy\"");
    pf::RVector u(2);
    u << std::stod(direction.substr(0, comma)), std::stod(direction.substr(comma + 1));
    out = pf::harness::planar_reduce(pf::io::load_region_file(region_path), u);
  } else if (check->parsed()) {
    int n = (grid == 4096) ? 2048 : grid;  // curve scans default to 2048
    out = pf::harness::curve_check(pf::io::load_region_file(region_path),
                                   pf::io::load_curve_file(curve_path), n);
  } else if (demo->parsed()) {
    pf::PolytopalRegion R = region_path.empty() ? pf::unit_square_region()
                                                : pf::io::load_region_file(region_path);
    out = pf::harness::pompeiu_demo(R, seed, grid, 512, !no_assert);
  }
  emit(out, out_dir);
  return out.passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const pf::DegenerateInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::UnknownName& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::UnsupportedCurveKind& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::WrongCurveKind& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::DirectionParallelToEdge& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::NotPointed& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::InsufficientSamples& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::RangeExceeded& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const pf::Error& e) {
    std::cerr << "evaluation failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return 1;
}
