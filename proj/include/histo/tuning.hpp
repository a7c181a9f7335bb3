#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "histo/error_norm.hpp"
#include "histo/mesh.hpp"
#include "histo/test_functions.hpp"

namespace histo {

struct JacobiPair {
  double alpha = 0.0;
  double beta = 0.0;

  friend bool operator==(const JacobiPair&, const JacobiPair&) = default;
};

struct CandidateGrid {
  std::vector<JacobiPair> pairs;

  // {-0.5, 0, 0.5, 1, 2, 3, 5}^2, alpha-major.
  static CandidateGrid default_grid();
  // One "alpha,beta" pair per line; blank lines, "#" comments and a leading
  // "alpha,beta" header are skipped.
  static CandidateGrid from_csv(std::istream& in);
  static CandidateGrid from_csv_file(const std::string& path);

  // Throws ConfigError when empty or when a pair is not admissible.
  void validate() const;
};

struct ValidationSet {
  std::vector<TestFunction> functions;
  std::vector<std::shared_ptr<const Mesh>> meshes;
};

struct TuningSettings {
  Norm norm = Norm::l1;
  int error_subdivision = 4;
  int edge_points = 16;
  // A candidate replaces the incumbent only if it is smaller by more than
  // this. 0 is the plain strict comparison; a small positive value lets
  // rounding-level differences tie, so exact reproduction keeps the first pair.
  double tie_tolerance = 0.0;
};

struct TuningRow {
  JacobiPair pair;
  double total = 0.0;
  // error of function r on mesh n at index r * meshes + n
  std::vector<double> breakdown;
};

struct TuningReport {
  JacobiPair best;
  double e_min = 0.0;
  std::size_t best_index = 0;
  std::vector<TuningRow> table;
  TuningSettings settings;
  std::vector<std::string> function_ids;
  std::vector<std::size_t> mesh_sizes;
};

// sum_r sum_n ||f_r - Pi_2^{alpha,beta} f_r||, functions outer, meshes inner.
double total_error(const JacobiPair& pair, const ValidationSet& set, const TuningSettings& settings,
                   std::vector<double>* breakdown = nullptr);

// Scans the completed table in grid order; a row wins when its total is below
// the incumbent's by more than `tie_tolerance`.
std::size_t select_best(const std::vector<TuningRow>& table, double tie_tolerance = 0.0);

// Candidates are evaluated in parallel, the minimizer is selected afterwards
// by select_best, so the result matches the sequential scan.
TuningReport grid_search(const CandidateGrid& grid, const ValidationSet& set, const TuningSettings& settings);

void write_tuning_csv(const TuningReport& report, std::ostream& out);

namespace reference {
// Literal sequential loop with the running strict-improvement update.
TuningReport grid_search(const CandidateGrid& grid, const ValidationSet& set, const TuningSettings& settings);
}  // namespace reference

}  // namespace histo
