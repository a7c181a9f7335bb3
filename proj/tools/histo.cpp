#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "histo/convergence.hpp"
#include "histo/density.hpp"
#include "histo/errors.hpp"
#include "histo/format.hpp"
#include "histo/mesh.hpp"
#include "histo/tuning.hpp"

using namespace histo;

namespace {

// "-" writes to stdout.
template <class F>
void with_output(const std::string& path, F&& write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  write(out);
}

std::vector<int> levels_from(const std::string& s) {
  std::vector<int> out;
  for (const auto& v : split_list(s)) out.push_back(parse_int(v));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge histopolation on triangles with Jacobi-weighted edge moments"};
  app.require_subcommand(1);

  auto* mesh = app.add_subcommand("mesh", "mesh utilities");
  mesh->require_subcommand(1);
  auto* mesh_gen = mesh->add_subcommand("gen", "Friedrichs-Keller triangulation of [-1,1]^2");
  int mesh_n = 0;
  std::string mesh_out = "-";
  mesh_gen->add_option("--n", mesh_n, "interior nodes per direction")->required()->check(CLI::NonNegativeNumber);
  mesh_gen->add_option("--out", mesh_out, "output path, '-' for stdout");

  auto* density = app.add_subcommand("density", "edge densities");
  density->require_subcommand(1);
  auto* density_sample = density->add_subcommand("sample", "tabulate the Jacobi density on [-1,1]");
  double alpha = 0.0, beta = 0.0;
  int points = 101;
  std::string density_out = "-";
  bool endpoint_error = false;
  density_sample->add_option("--alpha", alpha)->required();
  density_sample->add_option("--beta", beta)->required();
  density_sample->add_option("--points", points, "equispaced samples including endpoints")->check(CLI::Range(2, 10000000));
  density_sample->add_option("--out", density_out, "CSV path, '-' for stdout");
  density_sample->add_flag("--endpoint-error", endpoint_error, "fail instead of writing inf at a singular endpoint");

  auto* tune = app.add_subcommand("tune", "grid search for (alpha*, beta*)");
  std::string tune_functions = "f1", tune_levels = "4,9", tune_grid = "default", tune_norm = "l1", tune_out = "-";
  int tune_edge = 16, tune_sub = 4, threads = 0;
  double tie_tolerance = 0.0;
  tune->add_option("--functions", tune_functions, "comma-separated ids f1..f6");
  tune->add_option("--levels", tune_levels, "comma-separated mesh levels n");
  tune->add_option("--grid", tune_grid, "'default' or a CSV of alpha,beta pairs");
  tune->add_option("--norm", tune_norm, "l1, l2 or linf");
  tune->add_option("--edge-points", tune_edge)->check(CLI::PositiveNumber);
  tune->add_option("--error-subdivision", tune_sub)->check(CLI::PositiveNumber);
  tune->add_option("--tie-tolerance", tie_tolerance, "margin a candidate must beat the incumbent by")
      ->check(CLI::NonNegativeNumber);
  tune->add_option("--out", tune_out, "CSV path, '-' for stdout");
  app.add_option("--threads", threads, "OpenMP threads, 0 for the default")->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "convergence studies");
  bench->require_subcommand(1);
  auto* bench_run = bench->add_subcommand("run", "run a study from a config file");
  std::string config_path;
  bench_run->add_option("--config", config_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (threads > 0) omp_set_num_threads(threads);
    if (mesh_gen->parsed()) {
      const Mesh m = friedrichs_keller(mesh_n);
      with_output(mesh_out, [&](std::ostream& out) { write_mesh(m, out); });
    } else if (density_sample->parsed()) {
      const Density d = Density::jacobi(alpha, beta);
      const auto policy = endpoint_error ? EndpointPolicy::error : EndpointPolicy::infinity;
      with_output(density_out, [&](std::ostream& out) {
        out << "t,omega\n";
        for (int i = 0; i < points; ++i) {
          const double t = i == points - 1 ? 1.0 : -1.0 + 2.0 * i / (points - 1);
          out << format_double(t) << ',' << format_double(d(t, policy)) << '\n';
        }
      });
    } else if (tune->parsed()) {
      ValidationSet set;
      for (const auto& id : split_list(tune_functions)) set.functions.push_back(test_function(id));
      for (int n : levels_from(tune_levels)) {
        if (n < 0) throw ConfigError("mesh levels must be non-negative");
        set.meshes.push_back(std::make_shared<const Mesh>(friedrichs_keller(n)));
      }
      if (set.functions.empty() || set.meshes.empty()) throw ConfigError("need at least one function and one level");
      const CandidateGrid grid =
          tune_grid == "default" ? CandidateGrid::default_grid() : CandidateGrid::from_csv_file(tune_grid);
      const TuningSettings settings{parse_norm(tune_norm), tune_sub, tune_edge, tie_tolerance};
      const TuningReport report = grid_search(grid, set, settings);
      with_output(tune_out, [&](std::ostream& out) { write_tuning_csv(report, out); });
      std::fprintf(stderr, "alpha* = %s, beta* = %s, E_min = %s\n", format_double(report.best.alpha).c_str(),
                   format_double(report.best.beta).c_str(), format_double(report.e_min).c_str());
    } else if (bench_run->parsed()) {
      const RunConfig config = RunConfig::from_file(config_path);
      if (config.threads > 0 && threads == 0) omp_set_num_threads(config.threads);
      const ErrorReport report = run_convergence(config);
      write_outputs(report, config);
      std::fprintf(stderr, "wrote %zu rows to %s\n", report.rows.size(), config.output_dir.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "histo: %s\n", e.what());
    return 1;
  }
  return 0;
}
