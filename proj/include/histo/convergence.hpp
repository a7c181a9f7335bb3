#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "histo/error_norm.hpp"
#include "histo/mesh.hpp"
#include "histo/operators.hpp"
#include "histo/test_functions.hpp"
#include "histo/tuning.hpp"

namespace histo {

struct SchemeSpec {
  enum class Kind { classical, jacobi, gegenbauer, tuned };
  Kind kind = Kind::classical;
  double alpha = 0.0;
  double beta = 0.0;

  // "ch", "tuned", "uniform", "jacobi(a,b)", "gegenbauer(g)"
  static SchemeSpec parse(std::string_view text);
  std::string name() const;
};

/// Settings of one convergence study.
///
/// Text format, one `key = value` per line, `#` starts a comment:
///
///     functions = f1, f3, g          # builtin ids or names from `define`
///     define g = sin(pi*x)*y         # custom function
///     levels = 20, 30, 40, 50
///     schemes = ch, tuned, jacobi(1,2), gegenbauer(0.5)
///     norms = l1, l2
///     order = 2                      # order of the fixed-parameter enriched schemes
///     edge_points = 16
///     error_subdivision = 4
///     tune_grid = default            # or a CSV path
///     tune_levels = 4, 9             # defaults to `levels`
///     tune_norm = l1
///     tune_tie_tolerance = 0
///     domain = -1, 1, -1, 1
///     output_dir = out
///     seed = 0
///     timing = off                   # on: wall time in the CSV
///     threads = 0                    # 0: OpenMP default
struct RunConfig {
  std::vector<TestFunction> functions;
  std::vector<int> levels;
  std::vector<SchemeSpec> schemes;
  std::vector<Norm> norms{Norm::l1};
  int order = 2;
  int edge_points = 16;
  int error_subdivision = 4;
  CandidateGrid tune_grid = CandidateGrid::default_grid();
  std::vector<int> tune_levels;
  Norm tune_norm = Norm::l1;
  double tune_tie_tolerance = 0.0;
  Rect domain;
  std::string output_dir = ".";
  std::uint64_t seed = 0;
  bool timing = false;
  int threads = 0;

  // Relative paths (grid file, output dir) resolve against `base_dir`.
  static RunConfig parse(std::istream& in, const std::string& base_dir = ".");
  static RunConfig from_file(const std::string& path);
  void validate() const;
};

struct ErrorRow {
  std::string function;
  int n = 0;
  std::size_t triangles = 0;
  std::size_t dofs = 0;
  std::string scheme;
  bool has_params = false;
  double alpha = 0.0;
  double beta = 0.0;
  Norm norm = Norm::l1;
  double error = 0.0;
  double seconds = 0.0;
};

struct ErrorReport {
  std::vector<ErrorRow> rows;
  // Tuned (alpha*, beta*) per function id.
  std::map<std::string, TuningReport> tuning;
  double total_seconds = 0.0;
};

// Selects (alpha*, beta*) for one function by grid search over the meshes.
TuningReport tune_for_function(const TestFunction& f, const std::vector<std::shared_ptr<const Mesh>>& meshes,
                               const CandidateGrid& grid, const TuningSettings& settings);

ErrorReport run_convergence(const RunConfig& config);

// function,n,triangles,scheme,alpha,beta,norm,error,seconds
void write_results_csv(const ErrorReport& report, std::ostream& out, bool timing);
// Semi-log plot of one function's errors versus triangle count, one polyline
// per scheme.
void write_svg(const ErrorReport& report, const std::string& function, Norm norm, std::ostream& out);
void write_summary(const ErrorReport& report, const RunConfig& config, std::ostream& out);

// results.csv, <function>.svg (first norm) and report.txt in config.output_dir.
void write_outputs(const ErrorReport& report, const RunConfig& config);

}  // namespace histo
